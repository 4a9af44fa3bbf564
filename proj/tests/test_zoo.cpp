#include <doctest.h>

#include <algorithm>
#include <random>

#include "peri/zoo.hpp"
#include "support.hpp"

using namespace peri;

namespace {

/// n h (h + 1) / 6, from counting positive roots; L_n behaves like A_2n.
std::size_t preprojective_dim_oracle(const DynkinGraph& d) {
  if (d.has_loop()) return d.n * (2 * d.n + 1) * (2 * d.n + 2) / 6;
  return d.n * d.h() * (d.h() + 1) / 6;
}

/// Cartan matrix up to simultaneous relabelling, crudely: sorted rows, sorted.
std::vector<std::vector<std::size_t>> shape(std::vector<std::vector<std::size_t>> c) {
  for (auto& r : c) std::sort(r.begin(), r.end());
  std::sort(c.begin(), c.end());
  return c;
}

}  // namespace

TEST_SUITE("zoo") {
  TEST_CASE("graphs") {
    CHECK(DynkinGraph::make('A', 4).edges.size() == 3);
    CHECK(DynkinGraph::make('D', 5).m() == 7);
    CHECK(DynkinGraph::make('E', 6).h() == 12);
    CHECK(DynkinGraph::make('E', 8).m() == 29);
    CHECK(DynkinGraph::parse("d", 4).str() == "D4");
    CHECK_THROWS_AS(DynkinGraph::make('E', 9), InputError);
    CHECK_THROWS_AS(DynkinGraph::make('D', 3), InputError);
    CHECK_THROWS_AS(DynkinGraph::make('X', 3), InputError);
    CHECK_THROWS_AS(DynkinGraph::make('L', 2).m(), InputError);
  }

  TEST_CASE("preprojective dimensions") {
    const Rationals q;
    for (auto [f, n] : std::vector<std::pair<char, std::size_t>>{
             {'A', 1}, {'A', 2}, {'A', 3}, {'A', 4}, {'A', 5}, {'D', 4}, {'D', 5}, {'E', 6}, {'L', 1}, {'L', 2}, {'L', 3}}) {
      auto d = DynkinGraph::make(f, n);
      CAPTURE(d.str());
      auto p = preprojective(d, q);
      CHECK(p->dim() == preprojective_dim_oracle(d));
      CHECK(p->vertex_count() == n);
      CHECK(nakayama_permutation(*p).has_value());
      if (!d.has_loop()) CHECK(p->loewy_length() == d.h() - 1);
    }
  }

  TEST_CASE("preprojective over GF(2) has the same dimension") {
    for (auto d : {DynkinGraph::make('A', 3), DynkinGraph::make('D', 4), DynkinGraph::make('L', 2)})
      CHECK(preprojective(d, FiniteField(2))->dim() == preprojective_dim_oracle(d));
  }

  TEST_CASE("mesh algebras") {
    const Rationals q;
    auto a2 = DynkinGraph::make('A', 2);
    auto one = mesh_algebra(a2, 1, q);
    auto p = preprojective(a2, q);
    CHECK(one.algebra->dim() == p->dim());
    CHECK(cartan(*one.algebra) == cartan(*p));
    for (std::size_t m : {2, 3, 4}) {
      for (auto d : {a2, DynkinGraph::make('A', 3), DynkinGraph::make('D', 4)}) {
        CAPTURE(d.str());
        CAPTURE(m);
        auto s = mesh_algebra(d, m, q);
        check_smash(s);
        CHECK(s.algebra->dim() == m * preprojective_dim_oracle(d));
        CHECK(s.algebra->vertex_count() == m * d.n);
        CHECK(is_basic(*s.algebra));
      }
    }
    CHECK_THROWS_AS(mesh_algebra(DynkinGraph::make('L', 2), 2, q), InputError);
  }

  TEST_CASE("path length grading of P(L2) unfolds to P(A4)") {
    const Rationals q;
    auto l2 = preprojective(DynkinGraph::make('L', 2), q);
    auto s = smash(path_length_grading(l2, 2));
    auto a4 = preprojective(DynkinGraph::make('A', 4), q);
    CHECK(s.algebra->dim() == a4->dim());
    CHECK(s.algebra->vertex_count() == 4);
    CHECK(is_connected(*s.algebra));
    CHECK(shape(cartan(*s.algebra)) == shape(cartan(*a4)));
  }

  TEST_CASE("Nakayama algebras") {
    const Rationals q;
    for (std::size_t n = 1; n <= 4; ++n)
      for (std::size_t l = 2; l <= 5; ++l) {
        auto a = nakayama(n, l, q);
        CHECK(a->dim() == n * l);
        CHECK(a->loewy_length() == l);
        CHECK(nakayama_permutation(*a).has_value());
      }
    CHECK_THROWS_AS(nakayama(3, 1, q), InputError);
  }

  TEST_CASE("nonstandard algebra") {
    const FiniteField f2(2);
    CHECK_THROWS_AS(nonstandard_d3m(2, Rationals{}), InputError);
    CHECK_THROWS_AS(nonstandard_d3m(2, FiniteField(3)), InputError);
    auto gr = nonstandard_d3m(2, f2);
    CHECK(gr.algebra->dim() == 10);
    CHECK(!is_radical_grading(gr));
    CHECK(gr.rebase.has_value());
    auto text = render_description(nonstandard_description(3, f2.spec()));
    CHECK(parse_description(text).presentation.relations.size() == 5);
  }

  TEST_CASE("B' and B'' agree") {
    const FiniteField f2(2);
    for (std::size_t m : {2, 3}) {
      CAPTURE(m);
      auto c = bprime_bdoubleprime(m, f2);
      CHECK(c.bprime->dim() == c.bdoubleprime->dim());
      CHECK(c.bprime->vertex_count() == 2 * m - 1);
      std::vector<std::size_t> expect(2 * m - 2, 1);
      expect.insert(expect.begin(), 2);
      CHECK(block_profile(*c.smash.algebra) == expect);
      CHECK(rank(c.phi.matrix) == c.bprime->dim());
    }
  }

  TEST_CASE("period table spot values") {
    auto type = [](char f, std::size_t n, std::uint64_t num, std::uint64_t den, std::size_t t) {
      return SelfInjectiveType{DynkinGraph::make(f, n), num, den, t, false};
    };
    CHECK(table52(type('A', 1, 1, 1, 1), 0).candidates == std::vector<std::uint64_t>{2});
    CHECK(table52(type('A', 1, 1, 1, 1), 2).candidates == std::vector<std::uint64_t>{1});
    CHECK(table52(type('A', 3, 3, 3, 1), 0).candidates == std::vector<std::uint64_t>{6});
    CHECK(table52(type('A', 2, 3, 2, 1), 0).candidates == std::vector<std::uint64_t>{2});
    CHECK(table52(type('A', 3, 1, 1, 2), 2).candidates == std::vector<std::uint64_t>{6});
    CHECK(table52(type('D', 4, 1, 1, 3), 0).candidates == std::vector<std::uint64_t>{10, 30});
    CHECK(table52(type('E', 6, 2, 1, 2), 0).candidates == std::vector<std::uint64_t>{11, 22, 44});
    CHECK(table52(type('D', 4, 1, 1, 1), 0).functorial_only);
    CHECK(!table52(type('D', 4, 2, 1, 1), 0).functorial_only);
    auto ns = table52(SelfInjectiveType{DynkinGraph::make('D', 6), 1, 3, 1, true}, 2);
    CHECK(ns.candidates == std::vector<std::uint64_t>{3, 6, 12});
    CHECK_THROWS_AS(table52(type('A', 2, 1, 1, 3), 0), InputError);
    CHECK_THROWS_AS(table52(type('A', 3, 1, 2, 1), 0), InputError);
  }

  TEST_CASE("mesh period formula") {
    CHECK(mesh_period_formula(DynkinGraph::make('D', 4), 5, 0).value == 30);
    CHECK(mesh_period_formula(DynkinGraph::make('D', 4), 5, 0).exact);
    CHECK(mesh_period_formula(DynkinGraph::make('E', 6), 12, 0).value == 6);
    CHECK(mesh_period_formula(DynkinGraph::make('D', 4), 3, 2).value == 3);
    CHECK(!mesh_period_formula(DynkinGraph::make('A', 2), 3, 0).exact);
  }

  TEST_CASE("table rows with f > 1 are a third of the mesh period") {
    std::mt19937_64 rng(52);
    for (int trial = 0; trial < 400; ++trial) {
      const char fam = "ADE"[rng() % 3];
      const std::size_t n = fam == 'A' ? 1 + rng() % 8 : fam == 'D' ? 4 + rng() % 6 : 6 + rng() % 3;
      const unsigned ch = rng() % 2 ? 2 : 0;
      auto d = DynkinGraph::make(fam, n);
      const std::uint64_t s = 2 + rng() % 30;
      // f = s for D and E, s/n for A: m_Delta f = s m_Delta or s.
      SelfInjectiveType t{d, s, fam == 'A' ? n : 1, 1, false};
      if (fam == 'A' && s <= n) continue;
      const std::uint64_t m = fam == 'A' ? s : s * d.m();
      CAPTURE(t.str());
      CAPTURE(ch);
      auto row = table52(t, ch);
      auto mesh = mesh_period_formula(d, m, ch);
      REQUIRE(row.candidates.size() == 1);
      if (mesh.exact)
        CHECK(3 * row.candidates[0] == mesh.value);
      else
        CHECK(mesh.value % row.candidates[0] == 0);
    }
  }
}
