#include <doctest.h>

#include "peri/description.hpp"
#include "peri/module.hpp"
#include "support.hpp"

using namespace peri;
using testing::algebra_from;

namespace {

template <class K>
Automorphism<K> scale_arrows(const AlgebraPtr<K>& a, const std::vector<typename K::Elem>& c) {
  auto gens = a->generators();
  for (std::size_t k = 0; k < c.size(); ++k)
    for (auto& [i, x] : gens[a->vertex_count() + k]) x = a->field().mul(x, c[k]);
  return check_automorphism(a, gens);
}

Automorphism<FiniteField> d3m2_sigma(const AlgebraPtr<FiniteField>& a) {
  const auto& q = a->presentation()->quiver;
  auto el = [&](const char* s) { return combination_element(*a, parse_combination(q, s)); };
  return check_automorphism(a, {el("e1"), el("e2"), el("a1 + a1*b"), el("a2 + b*a2"), el("b + b*b + b*b*b")});
}

}  // namespace

TEST_SUITE("homology") {
  TEST_CASE("simples and projectives") {
    auto k = algebra_from(Rationals{}, testing::kx2_text());
    CHECK(simple(k, 0).dim() == 1);
    CHECK(indec_projective(k, 0).dim() == 2);
    auto p = algebra_from(Rationals{}, testing::pa2_text());
    CHECK(indec_projective(p, 0).dim() == 2);
    CHECK(indec_projective(p, 1).dim() == 2);
    auto d = algebra_from(FiniteField(2), testing::d3m2_text());
    // e1A = <e1, b, b^2, b^3, a2, b*a2>, e2A = <e2, a1, a1*b, a1*a2>.
    CHECK(indec_projective(d, 0).dim() == 6);
    CHECK(indec_projective(d, 1).dim() == 4);
    for (std::size_t v = 0; v < 2; ++v) {
      check_module(simple(d, v));
      check_module(indec_projective(d, v));
      auto top = projective_cover(indec_projective(d, v));
      CHECK(top.summands == std::vector<std::uint32_t>{static_cast<std::uint32_t>(v)});
    }
  }

  TEST_CASE("covers and syzygies") {
    auto k = algebra_from(Rationals{}, testing::kx2_text());
    auto s = simple(k, 0);
    auto pc = projective_cover(s);
    check_presentation(s, pc);
    CHECK(pc.cover.dim() == 2);
    CHECK(iso(pc.kernel, s));

    auto p = algebra_from(Rationals{}, testing::pa2_text());
    auto s1 = simple(p, 0), s2 = simple(p, 1);
    auto pc1 = projective_cover(s1);
    CHECK(pc1.summands == std::vector<std::uint32_t>{0});
    CHECK(iso(pc1.kernel, s2));
    CHECK_FALSE(iso(s1, s2));
    CHECK(projective_cover(indec_projective(p, 1)).kernel.dim() == 0);
    CHECK(is_projective(indec_projective(p, 0)));
    CHECK_FALSE(is_projective(s1));
  }

  TEST_CASE("resolutions") {
    auto k = algebra_from(Rationals{}, testing::kx2_text());
    auto s = simple(k, 0);
    auto led = resolve(s, 5, true);
    for (std::size_t r = 0; r <= 5; ++r) {
      CHECK(led.steps[r].cover.dim() == 2);
      CHECK(iso(led.syzygies[r + 1], s));
    }
    auto p = algebra_from(Rationals{}, testing::pa2_text());
    auto l2 = resolve(simple(p, 0), 2, true);
    CHECK(iso(l2.syzygies[2], simple(p, 0)));
    auto lp = resolve(indec_projective(p, 0), 3, true);
    for (std::size_t r = 1; r <= 3; ++r) CHECK(lp.steps[r].cover.dim() == 0);
    auto d = algebra_from(FiniteField(2), testing::d3m2_text());
    for (std::size_t v = 0; v < 2; ++v) {
      auto ld = resolve(simple(d, v), 4, true);
      for (const auto& m : ld.syzygies) check_module(m);
    }
  }

  TEST_CASE("ext dimensions") {
    auto k = algebra_from(Rationals{}, testing::kx2_text());
    for (std::size_t r = 0; r < 6; ++r) CHECK(ext_dim(k, 0, 0, r) == 1);
    auto p = algebra_from(Rationals{}, testing::pa2_text());
    CHECK(ext_dim(p, 0, 1, 1) == 1);
    CHECK(ext_dim(p, 0, 0, 1) == 0);
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 2; ++j) CHECK(ext_dim(p, i, j, 0) == (i == j ? 1u : 0u));
  }

  TEST_CASE("hom spaces") {
    auto p = algebra_from(Rationals{}, testing::pa2_text());
    auto p1 = indec_projective(p, 0), p2 = indec_projective(p, 1);
    // Hom(e_iA, e_jA) = e_jAe_i.
    CHECK(hom_space(p1, p1).size() == 1);
    CHECK(hom_space(p1, p2).size() == 1);
    CHECK(hom_space(p1, simple(p, 0)).size() == 1);
    CHECK(hom_space(simple(p, 0), p1).size() == 0);
    CHECK(hom_space(simple(p, 1), p1).size() == 1);
    for (const auto& t : hom_space(p1, p2))
      for (std::size_t g = 0; g < p->generators().size(); ++g)
        CHECK(p1.action[g].to_dense(p->field()) * t == t * p2.action[g].to_dense(p->field()));
  }

  TEST_CASE("iso is an equivalence on small modules") {
    auto d = algebra_from(FiniteField(2), testing::d3m2_text());
    std::vector<ModuleRep<FiniteField>> ms;
    for (std::size_t v = 0; v < 2; ++v) {
      auto led = resolve(simple(d, v), 3);
      ms.insert(ms.end(), led.syzygies.begin(), led.syzygies.end());
    }
    std::vector<std::vector<bool>> rel(ms.size(), std::vector<bool>(ms.size()));
    for (std::size_t i = 0; i < ms.size(); ++i)
      for (std::size_t j = 0; j < ms.size(); ++j) {
        auto r = iso(ms[i], ms[j]);
        rel[i][j] = r.isomorphic;
        if (ms[i].dimension_vector() != ms[j].dimension_vector()) CHECK_FALSE(r.isomorphic);
        if (r.intertwiner) CHECK(rank(*r.intertwiner) == ms[i].dim());
      }
    for (std::size_t i = 0; i < ms.size(); ++i) {
      CHECK(rel[i][i]);
      for (std::size_t j = 0; j < ms.size(); ++j) {
        CHECK(rel[i][j] == rel[j][i]);
        for (std::size_t k = 0; k < ms.size(); ++k)
          if (rel[i][j] && rel[j][k]) CHECK(rel[i][k]);
      }
    }
  }

  TEST_CASE("bimodules and twists") {
    Rationals q;
    auto k = algebra_from(q, testing::kx2_text());
    auto env = envelope_of(k);
    auto a = algebra_as_bimodule(k, env);
    CHECK(a.module.dim() == 2);
    check_module(a.module);
    CHECK(iso(twist(identity_automorphism(k), env).module, a.module));
    auto neg = scale_arrows<Rationals>(k, {mpq_class(-1)});
    CHECK_FALSE(iso(twist(neg, env).module, a.module));
    CHECK_FALSE(is_inner(neg).has_value());

    auto p = algebra_from(q, testing::pa2_text());
    auto penv = envelope_of(p);
    auto pa = algebra_as_bimodule(p, penv);
    auto inner = scale_arrows<Rationals>(p, {mpq_class(3), mpq_class(1, 3)});
    auto outer = scale_arrows<Rationals>(p, {mpq_class(3), mpq_class(1)});
    CHECK(is_inner(inner).has_value());
    CHECK(iso(twist(inner, penv).module, pa.module));
    CHECK_FALSE(is_inner(outer).has_value());
    CHECK_FALSE(iso(twist(outer, penv).module, pa.module));
  }

  TEST_CASE("twists compose under tensor") {
    auto d = algebra_from(FiniteField(2), testing::d3m2_text());
    auto env = envelope_of(d);
    auto sigma = d3m2_sigma(d);
    auto ts = twist(sigma, env);
    check_module(ts.module);
    auto tt = tensor(ts, ts);
    CHECK(tt.module.dim() == d->dim());
    CHECK(iso(tt.module, twist(compose(sigma, sigma), env).module));
    CHECK(iso(tt.module, algebra_as_bimodule(d, env).module));
    CHECK(is_inner(compose(sigma, sigma)).has_value());

    Rationals q;
    auto p = algebra_from(q, testing::pa2_text());
    auto penv = envelope_of(p);
    auto s = scale_arrows<Rationals>(p, {mpq_class(2), mpq_class(1)});
    auto t = scale_arrows<Rationals>(p, {mpq_class(1), mpq_class(5)});
    CHECK(iso(tensor(twist(s, penv), twist(t, penv)).module, twist(compose(t, s), penv).module));
  }

  TEST_CASE("bimodule resolutions agree with Ext") {
    auto k = algebra_from(Rationals{}, testing::kx2_text());
    auto led = bimodule_resolve(k, 6);
    for (std::size_t r = 0; r <= 6; ++r) {
      CHECK(led.multiplicity[r] == std::vector<std::size_t>{1});
      CHECK(led.steps[r].cover.dim() == 4);
    }
    auto p = algebra_from(Rationals{}, testing::pa2_text());
    CHECK_NOTHROW(bimodule_resolve(p, 6));
    auto ss = algebra_from(Rationals{}, "[field]\nQ\n[quiver]\nvertices 3\n");
    auto ls = bimodule_resolve(ss, 2);
    CHECK(ls.syzygies[1].dim() == 0);
    CHECK(ls.multiplicity[1] == std::vector<std::size_t>(9, 0));
  }

  TEST_CASE("Hochschild dimensions") {
    auto k = algebra_from(Rationals{}, testing::kx2_text());
    CHECK(hochschild_dims(k, 5) == std::vector<std::size_t>{2, 1, 1, 1, 1, 1});
    auto k2 = algebra_from(FiniteField(2), testing::kx2_text("GF(2)"));
    CHECK(hochschild_dims(k2, 5) == std::vector<std::size_t>{2, 2, 2, 2, 2, 2});
    auto ss = algebra_from(Rationals{}, "[field]\nQ\n[quiver]\nvertices 3\n");
    CHECK(hochschild_dims(ss, 3) == std::vector<std::size_t>{3, 0, 0, 0});
  }
}
