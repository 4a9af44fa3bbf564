#include <doctest.h>

#include <algorithm>
#include <random>

#include "peri/graded.hpp"
#include "support.hpp"

using namespace peri;
using testing::algebra_from;

namespace {

template <class K>
Grading<K> by_arrows(const AlgebraPtr<K>& a, std::size_t m, std::vector<std::size_t> deg) {
  return grading_by_arrows(a, FiniteGroup::cyclic(m), deg);
}

Grading<FiniteField> d3m2_grading(const AlgebraPtr<FiniteField>& a) {
  const auto& q = a->presentation()->quiver;
  auto el = [&](const char* s) { return combination_element(*a, parse_combination(q, s)); };
  return grading_by_generators(a, FiniteGroup::cyclic(2), {{el("e1 + b"), 1}, {el("a1"), 0}, {el("a2"), 0}});
}

/// Two-sided ideal generated by xs, as a subspace.
template <class K>
Subspace<K> ideal(const Algebra<K>& a, const std::vector<SparseVec<K>>& xs) {
  Subspace<K> s(a.field(), a.dim());
  for (const auto& x : xs)
    for (std::size_t l = 0; l < a.dim(); ++l)
      for (std::size_t r = 0; r < a.dim(); ++r)
        s.insert(densify(a.field(), a.multiply(a.multiply(a.unit(l), x), a.unit(r)), a.dim()));
  return s;
}

std::vector<std::uint32_t> sorted(std::vector<std::uint32_t> v) {
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

TEST_SUITE("graded") {
  TEST_CASE("kx2 with x in odd degree") {
    auto a = algebra_from(Rationals{}, testing::kx2_text());
    auto gr = by_arrows(a, 2, {1});
    CHECK(is_radical_grading(gr));
    auto s = smash(gr);
    check_smash(s);
    const auto& b = *s.algebra;
    CHECK(b.dim() == 4);
    CHECK(b.vertex_count() == 2);
    CHECK(is_basic(b));
    CHECK(b.loewy_length() == 2);
    CHECK(cartan(b) == std::vector<std::vector<std::size_t>>{{1, 1}, {1, 1}});
    CHECK(nakayama_permutation(b).has_value());
    CHECK(block_profile(b) == std::vector<std::size_t>{1, 1});
  }

  TEST_CASE("trivial group and trivial grading") {
    auto a = algebra_from(FiniteField(2), testing::d3m2_text());
    auto gr = trivial_grading(a, FiniteGroup::cyclic(1));
    CHECK(is_radical_grading(gr));
    auto s = smash(gr);
    check_smash(s);
    CHECK(s.algebra->dim() == a->dim());
    CHECK(rank(s.embedding.matrix) == a->dim());
    CHECK(cartan(*s.algebra) == cartan(*a));
    // Trivial grading by a larger group: |G| copies of A.
    auto s3 = smash(trivial_grading(a, FiniteGroup::cyclic(3)));
    CHECK(s3.algebra->dim() == 3 * a->dim());
    CHECK(!is_connected(*s3.algebra));
  }

  TEST_CASE("preprojective A2 with the half grading") {
    auto a = algebra_from(Rationals{}, testing::pa2_text());
    for (std::size_t m : {2, 3, 4}) {
      CAPTURE(m);
      auto s = smash(by_arrows(a, m, {1, 0}));
      check_smash(s);
      const auto& b = *s.algebra;
      CHECK(b.dim() == 4 * m);
      CHECK(b.vertex_count() == 2 * m);
      CHECK(is_basic(b));
      CHECK(is_connected(b));
      CHECK(b.loewy_length() == 2);
      auto nu = nakayama_permutation(b);
      REQUIRE(nu.has_value());
    }
  }

  TEST_CASE("nonstandard grading is not radical") {
    auto a = algebra_from(FiniteField(2), testing::d3m2_text());
    auto gr = d3m2_grading(a);
    check_grading(gr);
    REQUIRE(gr.rebase.has_value());
    CHECK(!is_radical_grading(gr));
    const auto& ag = *gr.algebra;
    const auto& q = a->presentation()->quiver;
    auto el = [&](const char* str) { return (*gr.rebase)(combination_element(*a, parse_combination(q, str))); };
    auto jg = Subspace<FiniteField>::span(ag.field(), ag.dim(), [&] {
      std::vector<Vec<FiniteField>> rows;
      for (const auto& x : graded_radical(gr)) rows.push_back(densify(ag.field(), x, ag.dim()));
      return rows;
    }());
    auto alphas = ideal(ag, {el("a1"), el("a2")});
    CHECK(jg.dim() == alphas.dim());
    CHECK(jg.contains_all(alphas));
    CHECK(jg.dim() + 1 == ag.radical_basis().size());

    auto s = smash(gr);
    const auto& b = *s.algebra;
    CHECK(b.dim() == 20);
    CHECK(b.vertex_count() == 4);
    CHECK(!is_basic(b));
    // B/J(B) is M_2(k) x k^(2m-2).
    CHECK(block_profile(b) == std::vector<std::size_t>{2, 1, 1});
  }

  TEST_CASE("incompatible grading is rejected") {
    auto a = algebra_from(Rationals{}, testing::pa2_text());
    // x*x = y*y*y cannot hold with x and y both odd.
    auto b = algebra_from(Rationals{}, "[field]\nQ\n[quiver]\nvertices 1\nx: 1 -> 1\ny: 1 -> 1\n"
                                       "[relations]\nx*x = y*y*y\nx*y\ny*x\n");
    const auto g = FiniteGroup::cyclic(2);
    CHECK_THROWS_AS(grading_by_generators(b, g, {{b->generators()[1], 1}, {b->generators()[2], 1}}), InputError);
    CHECK_NOTHROW(grading_by_generators(a, g, {{a->generators()[2], 1}, {a->generators()[3], 1}}));
  }

  TEST_CASE("skew group algebras") {
    auto a = algebra_from(Rationals{}, testing::pa2_text());
    auto s = smash(by_arrows(a, 2, {1, 0}));
    const auto g = FiniteGroup::cyclic(2);
    auto skew = skew_group_algebra(s.algebra, g, s.action);
    CHECK(skew->dim() == 4 * a->dim());
    CHECK(block_profile(*skew) == std::vector<std::size_t>{2, 2});

    auto triv = skew_group_algebra(a, FiniteGroup::cyclic(1), {identity_automorphism(a)});
    CHECK(triv->dim() == a->dim());
    CHECK(cartan(*triv) == cartan(*a));

    auto kk = algebra_from(Rationals{}, "[field]\nQ\n[quiver]\nvertices 2\n[relations]\n");
    auto swap = check_automorphism(kk, {kk->unit(kk->idempotent(1)), kk->unit(kk->idempotent(0))});
    auto m2 = skew_group_algebra(kk, g, {identity_automorphism(kk), swap});
    CHECK(m2->dim() == 4);
    CHECK(block_profile(*m2) == std::vector<std::size_t>{2});

    auto f2 = algebra_from(FiniteField(2), "[field]\nGF(2)\n[quiver]\nvertices 2\n[relations]\n");
    CHECK_THROWS_AS(skew_group_algebra(f2, g, {identity_automorphism(f2), identity_automorphism(f2)}), InputError);
  }

  TEST_CASE("graded modules go to modules over the smash product") {
    auto a = algebra_from(Rationals{}, testing::pa2_text());
    auto gr = by_arrows(a, 3, {1, 0});
    auto s = smash(gr);
    const auto& g = gr.group;
    for (std::size_t v = 0; v < 2; ++v)
      for (std::size_t d = 0; d < 3; ++d) {
        CAPTURE(v);
        CAPTURE(d);
        auto sm = graded_simple(gr, v, d);
        check_graded(gr, sm);
        auto lifted = smash_module(s, sm);
        check_module(lifted);
        CHECK(iso(lifted, simple(s.algebra, s.vertex(v, g.inv(d)))).isomorphic);
        auto pm = graded_projective(gr, v, d);
        check_graded(gr, pm);
        CHECK(iso(smash_module(s, pm), indec_projective(s.algebra, s.vertex(v, g.inv(d)))).isomorphic);
        auto shifted = shift(sm, g, 1);
        CHECK(iso(smash_module(s, shifted), simple(s.algebra, s.vertex(v, g.inv(g.mul(1, d))))).isomorphic);
      }
  }

  TEST_CASE("lifting the algebra bimodule") {
    auto a = algebra_from(Rationals{}, testing::pa2_text());
    auto gr = by_arrows(a, 2, {1, 0});
    auto s = smash(gr);
    auto env = envelope_of(s.algebra);
    auto am = graded_algebra_bimodule(gr);
    check_graded(gr, am);
    auto fe = lift_bimodule(s, am, 0, env);
    check_module(fe.module);
    CHECK(iso(fe.module, algebra_as_bimodule(s.algebra, env).module).isomorphic);
    for (std::size_t x = 0; x < 2; ++x) {
      auto fx = lift_bimodule(s, am, x, env);
      CHECK(iso(fx.module, twisted_smash(s, x, env).module).isomorphic);
      // F_e(M[d]) = F_d(M).
      CHECK(iso(lift_bimodule(s, shift(am, gr.group, x), 0, env).module, fx.module).isomorphic);
    }
    CHECK(!iso(twisted_smash(s, 0, env).module, twisted_smash(s, 1, env).module).isomorphic);
  }

  TEST_CASE("lifted projective bimodules") {
    auto a = algebra_from(Rationals{}, testing::pa2_text());
    auto gr = by_arrows(a, 3, {1, 0});
    auto s = smash(gr);
    auto env = envelope_of(s.algebra);
    const auto& g = gr.group;
    const std::size_t nvb = s.algebra->vertex_count();
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 2; ++j)
        for (std::size_t x = 0; x < 3; ++x) {
          auto p = graded_projective_bimodule(gr, i, j, 0);
          check_graded(gr, p);
          auto fx = lift_bimodule(s, p, x, env);
          auto cover = projective_cover(fx.module);
          CHECK(cover.kernel.dim() == 0);
          std::vector<std::uint32_t> expect;
          for (std::size_t t = 0; t < 3; ++t)
            expect.push_back(static_cast<std::uint32_t>(s.vertex(i, g.mul(t, x)) * nvb + s.vertex(j, t)));
          CHECK(sorted(cover.summands) == sorted(expect));
        }
  }

  TEST_CASE("tensor square of the smash product") {
    {
      auto a = algebra_from(Rationals{}, testing::kx2_text());
      auto s = smash(by_arrows(a, 2, {1}));
      CHECK(smash_tensor_square(s).module.dim() == 2 * s.algebra->dim());
      CHECK(check_lemma22(s).isomorphic);
    }
    {
      auto a = algebra_from(FiniteField(3), testing::pa2_text("GF(3)"));
      auto s = smash(by_arrows(a, 3, {1, 0}));
      CHECK(check_lemma22(s).isomorphic);
    }
  }

  TEST_CASE("indecomposable lifts of isomorphic bimodules") {
    auto a = algebra_from(Rationals{}, testing::pa2_text());
    auto gr = by_arrows(a, 3, {1, 0});
    auto s = smash(gr);
    auto env = envelope_of(s.algebra);
    auto m = graded_algebra_bimodule(gr);
    auto fe = lift_bimodule(s, m, 0, env);
    REQUIRE(is_indecomposable(fe.module));
    for (std::size_t d = 0; d < 3; ++d) {
      auto n = shift(m, gr.group, d);
      std::size_t hits = 0;
      for (std::size_t x = 0; x < 3; ++x) hits += iso(fe.module, lift_bimodule(s, n, x, env).module).isomorphic;
      CHECK(hits == 1);
    }
  }

  TEST_CASE("sign twist of the loop algebra") {
    // P(L_1) = k[x]/x^2 with the path length grading; B = P(A_2).
    auto a = algebra_from(Rationals{}, testing::kx2_text());
    auto gr = by_arrows(a, 2, {1});
    auto s = smash(gr);
    auto sigma = check_automorphism(a, {a->generators()[0], {{1, Rationals{}.from_int(-1)}}});
    CHECK(!is_inner(sigma));
    auto tw = graded_twist(gr, sigma);
    check_graded(gr, tw);
    auto env = envelope_of(s.algebra);
    REQUIRE(iso(lift_bimodule(s, tw, 0, env).module, algebra_as_bimodule(s.algebra, env).module).isomorphic);
    CHECK(is_inner(power(sigma, gr.order())).has_value());
  }

  TEST_CASE("indecomposability") {
    auto a = algebra_from(Rationals{}, testing::pa2_text());
    auto p = indec_projective(a, 0);
    CHECK(is_indecomposable(p));
    CHECK(!is_indecomposable(direct_sum(p, simple(a, 1))));
    CHECK(!is_indecomposable(direct_sum(p, p)));
    auto d = algebra_from(FiniteField(2), testing::d3m2_text());
    CHECK(is_indecomposable(indec_projective(d, 0)));
    CHECK(!is_indecomposable(direct_sum(simple(d, 0), simple(d, 0))));
  }

  TEST_CASE("random arrow gradings") {
    std::mt19937_64 rng(20261016);
    auto a = algebra_from(FiniteField(5), testing::pa2_text("GF(5)"));
    for (int trial = 0; trial < 6; ++trial) {
      const std::size_t m = 2 + rng() % 3;
      std::vector<std::size_t> deg{rng() % m, rng() % m};
      CAPTURE(m);
      CAPTURE(deg[0]);
      CAPTURE(deg[1]);
      auto gr = by_arrows(a, m, deg);
      auto s = smash(gr);
      check_smash(s);
      CHECK(s.algebra->dim() == m * a->dim());
      CHECK(is_basic(*s.algebra));
      auto env = envelope_of(s.algebra);
      auto am = graded_algebra_bimodule(gr);
      const std::size_t x = rng() % m;
      CHECK(iso(lift_bimodule(s, am, x, env).module, twisted_smash(s, x, env).module).isomorphic);
    }
  }
}
