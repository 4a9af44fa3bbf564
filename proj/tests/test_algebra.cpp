#include <doctest.h>

#include "peri/algebra.hpp"
#include "peri/description.hpp"
#include "support.hpp"

using namespace peri;
using testing::algebra_from;

namespace {

template <class K>
void check_axioms(const Algebra<K>& a) {
  const K& f = a.field();
  const std::size_t n = a.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        REQUIRE(a.multiply(a.product(i, j), a.unit(k)) == a.multiply(a.unit(i), a.product(j, k)));
  for (std::size_t i = 0; i < n; ++i) {
    CHECK(a.multiply(a.one(), a.unit(i)) == a.unit(i));
    CHECK(a.multiply(a.unit(i), a.one()) == a.unit(i));
  }
  for (std::size_t v = 0; v < a.vertex_count(); ++v)
    for (std::size_t w = 0; w < a.vertex_count(); ++w) {
      auto p = a.product(a.idempotent(v), a.idempotent(w));
      if (v == w) CHECK(p == a.unit(a.idempotent(v)));
      else CHECK(p.empty());
    }
  CHECK(a.dim() - a.radical_basis().size() == a.vertex_count());
  (void)f;
}

template <class K>
std::size_t radical_power_dim(const Algebra<K>& a, std::size_t k) {
  std::vector<SparseVec<K>> layer = a.radical_basis();
  for (std::size_t step = 1; step < k; ++step) {
    Subspace<K> s(a.field(), a.dim());
    std::vector<SparseVec<K>> next;
    for (const auto& x : layer)
      for (const auto& y : a.radical_basis()) {
        auto z = a.multiply(x, y);
        if (!z.empty() && s.insert(densify(a.field(), z, a.dim()))) next.push_back(z);
      }
    layer = next;
  }
  return layer.size();
}

}  // namespace

TEST_SUITE("algebra") {
  TEST_CASE("smallest local algebra") {
    auto a = algebra_from(Rationals{}, testing::kx2_text());
    CHECK(a->dim() == 2);
    CHECK(a->labels() == std::vector<std::string>{"e1", "x"});
    REQUIRE(a->radical_basis().size() == 1);
    CHECK(a->radical_basis()[0] == a->unit(1));
    CHECK(a->loewy_length() == 2);
    check_axioms(*a);
  }

  TEST_CASE("preprojective A2 presentation") {
    auto a = algebra_from(Rationals{}, testing::pa2_text());
    CHECK(a->dim() == 4);
    CHECK(a->labels() == std::vector<std::string>{"e1", "e2", "ab", "a"});
    CHECK(a->radical_basis().size() == 2);
    CHECK(schurian(*a));
    check_axioms(*a);
  }

  TEST_CASE("semisimple algebra has no radical") {
    auto a = algebra_from(Rationals{}, "[field]\nQ\n[quiver]\nvertices 3\n");
    CHECK(a->dim() == 3);
    CHECK(a->radical_basis().empty());
    CHECK(a->loewy_length() == 1);
  }

  TEST_CASE("nonstandard algebra at m = 2 is finite-dimensional") {
    auto a = algebra_from(FiniteField(2), testing::d3m2_text());
    check_axioms(*a);
    CHECK_FALSE(schurian(*a));
    CHECK(nakayama_permutation(*a).has_value());
    // By hand: e1Ae1 = <e1, b, b^2, b^3>, e2Ae2 = <e2, a1*a2>, a1, a1*b, a2, b*a2.
    CHECK(a->dim() == 10);
    CHECK(a->loewy_length() == 4);
    CHECK(cartan(*a) == std::vector<std::vector<std::size_t>>{{4, 2}, {2, 2}});
    CHECK(radical_power_dim(*a, a->loewy_length()) == 0);
    CHECK(radical_power_dim(*a, a->loewy_length() - 1) > 0);
  }

  TEST_CASE("rejects non-admissible relations and runaway dimension") {
    CHECK_THROWS_AS(algebra_from(Rationals{}, "[field]\nQ\n[quiver]\nvertices 1\nx: 1 -> 1\n[relations]\nx*x = x\n"),
                    InputError);
    CHECK_THROWS_AS(build_algebra(parse_description("[field]\nQ\n[quiver]\nvertices 1\nx: 1 -> 1\n").presentation,
                                  Rationals{}, 10),
                    InputError);
  }

  TEST_CASE("opposite and enveloping algebras") {
    auto a = algebra_from(Rationals{}, testing::pa2_text());
    auto op = opposite(*a);
    CHECK(op.dim() == 4);
    auto opop = opposite(op);
    for (std::size_t i = 0; i < a->dim(); ++i)
      for (std::size_t j = 0; j < a->dim(); ++j) CHECK(opop.product(i, j) == a->product(i, j));
    auto ae = enveloping(*a);
    CHECK(ae.dim() == 16);
    check_axioms(ae);
    auto k = algebra_from(Rationals{}, testing::kx2_text());
    CHECK(enveloping(*k).dim() == 4);
  }

  TEST_CASE("automorphism checks") {
    Rationals q;
    auto a = algebra_from(q, testing::pa2_text());
    auto id = check_automorphism(a, a->generators());
    CHECK(id.matrix == Matrix<Rationals>::identity(q, 4));
    auto gens = a->generators();
    for (std::size_t g = 2; g < 4; ++g)
      for (auto& [i, c] : gens[g]) c = -c;
    CHECK_NOTHROW(check_automorphism(a, gens));
    auto bad = a->generators();
    bad[2] = a->unit(0);  // a -> e1 breaks the quiver relations
    CHECK_THROWS_AS(check_automorphism(a, bad), InputError);
    auto zero = a->generators();
    zero[2].clear();
    CHECK_THROWS_WITH_AS(check_automorphism(a, zero), "not invertible", InputError);
  }

  TEST_CASE("inner automorphisms") {
    Rationals q;
    auto a = algebra_from(q, testing::pa2_text());
    CHECK(is_inner(identity_automorphism(a)).has_value());
    auto k = algebra_from(q, testing::kx2_text());
    auto neg = k->generators();
    neg[1][0].second = -1;
    CHECK_FALSE(is_inner(check_automorphism(k, neg)).has_value());
    // c_a = d2/d1 = 3 and c_ab = d1/d2 = 1/3.
    auto gens = a->generators();
    gens[2][0].second = 3;
    gens[3][0].second = mpq_class(1, 3);
    auto sigma = check_automorphism(a, gens);
    auto u = is_inner(sigma);
    REQUIRE(u);
    auto top = a->top_of(*u);
    CHECK(top[1] / top[0] == 3);
  }

  TEST_CASE("the order two automorphism of the nonstandard algebra") {
    FiniteField f(2);
    auto a = algebra_from(f, testing::d3m2_text());
    const auto& q = a->presentation()->quiver;
    auto el = [&](const char* s) { return combination_element(*a, parse_combination(q, s)); };
    std::vector<SparseVec<FiniteField>> images{el("e1"), el("e2"), el("a1 + a1*b"), el("a2 + b*a2"),
                                               el("b + b*b + b*b*b")};
    auto sigma = check_automorphism(a, images);
    CHECK(order(sigma) == 2u);
  }

  TEST_CASE("cartan matrix and corner") {
    auto a = algebra_from(Rationals{}, testing::pa2_text());
    CHECK(cartan(*a) == std::vector<std::vector<std::size_t>>{{1, 1}, {1, 1}});
    auto c = corner(*a, {1});
    CHECK(c.dim() == 1);
    CHECK(c.vertex_count() == 1);
    CHECK(is_connected(*a));
  }
}

TEST_SUITE("algebra") {
  TEST_CASE("description round trip") {
    auto d = parse_description(testing::d3m2_text() + "[grading]\ngroup Z/2\ne1 + b = 1\n", "d3m2");
    REQUIRE(d.grading);
    CHECK_FALSE(d.grading->by_arrows());
    auto again = parse_description(render_description(d), "d3m2");
    CHECK(render_description(again) == render_description(d));
    CHECK(again.presentation.relations.size() == 4);
  }

  TEST_CASE("parse errors carry positions") {
    const std::string head = "[field]\nQ\n[quiver]\nvertices 2\na: 1 -> 2\nb: 1 -> 2\n[relations]\n";
    try {
      parse_description(head + "a*b\n");
      FAIL("accepted a non-composable path");
    } catch (const ParseError& e) {
      CHECK(e.line() == 8);
      CHECK(std::string(e.what()).find("a*b") != std::string::npos);
    }
    CHECK_THROWS_AS(parse_description(head + "a*c\n"), ParseError);
    CHECK_THROWS_AS(parse_description("[quiver]\nvertices 1\n"), ParseError);
    CHECK_THROWS_AS(parse_description("[field]\nGF(6)\n[quiver]\nvertices 1\n"), InputError);
  }
}
