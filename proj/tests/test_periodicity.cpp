#include <doctest.h>

#include "peri/periodicity.hpp"
#include "support.hpp"

using namespace peri;
using testing::algebra_from;

namespace {

template <class K>
AlgebraPtr<K> pre(char f, std::size_t n, const K& field) {
  return preprojective(DynkinGraph::make(f, n), field);
}

}  // namespace

TEST_SUITE("periodicity") {
  TEST_CASE("simple periods") {
    auto kx2 = algebra_from(Rationals{}, testing::kx2_text());
    auto p = simple_period_profile(kx2, 10);
    CHECK(p.periods == std::vector<std::optional<std::size_t>>{1});
    CHECK(p.self_injective);
    auto pa2 = pre('A', 2, Rationals{});
    auto q = simple_period_profile(pa2, 10);
    CHECK(q.periods == std::vector<std::optional<std::size_t>>{2, 2});
    CHECK(q.all_simple_at(1));
    auto semi = nakayama(1, 2, Rationals{});
    auto k = mesh_algebra(DynkinGraph::make('A', 1), 1, Rationals{}).algebra;
    CHECK(simple_period_profile(k, 5).periods == std::vector<std::optional<std::size_t>>{0});
    CHECK(!simple_period_profile(k, 5).lcm());
    (void)semi;
  }

  TEST_CASE("twist of k[x]/x^2 at 1 is x -> -x") {
    auto a = algebra_from(Rationals{}, testing::kx2_text());
    auto sigma = detect_twist(a, 1);
    REQUIRE(sigma);
    const auto x = a->generators()[1];
    auto minus = x;
    for (auto& [i, c] : minus) c = -c;
    CHECK((*sigma)(x) == minus);
    CHECK(!is_inner(*sigma));
  }

  TEST_CASE("twist filter") {
    auto a = nakayama(2, 3, Rationals{});
    CHECK_THROWS_AS(detect_twist(a, 1), InputError);
  }

  TEST_CASE("periods of small algebras") {
    CHECK(period(algebra_from(Rationals{}, testing::kx2_text()), 10).period == 2);
    CHECK(period(algebra_from(FiniteField(2), testing::kx2_text("GF(2)")), 10).period == 1);
    auto r = period(pre('A', 2, Rationals{}), 10);
    CHECK(r.period == 2);
    CHECK(r.verified);
    CHECK(r.twists.front().n == 1);
    CHECK(!r.twists.front().inner);
    CHECK(period(nakayama(3, 4, Rationals{}), 20).period == 6);
    CHECK(period(nakayama(3, 3, Rationals{}), 20).period == 2);
  }

  TEST_CASE("reports are deterministic") {
    auto a = pre('A', 2, FiniteField(3));
    auto r1 = period(a, 10, 7), r2 = period(a, 10, 7);
    CHECK(r1.text() == r2.text());
    CHECK(r1.tsv() == r2.tsv());
    CHECK(r1.text().find("period: 2") != std::string::npos);
  }

  TEST_CASE("no period within the bound") {
    auto r = period(nakayama(3, 4, Rationals{}), 4);
    CHECK(!r.period);
    CHECK(r.note.find("no period <= 4") != std::string::npos);
    auto k = mesh_algebra(DynkinGraph::make('A', 1), 1, Rationals{}).algebra;
    CHECK(!period(k, 5).period);
  }

  TEST_CASE("divisibility for k[x]/x^2 with Z/2") {
    auto a = algebra_from(Rationals{}, testing::kx2_text());
    auto v = verify_thm37(grading_by_arrows(a, FiniteGroup::cyclic(2), {1}), 10);
    CHECK(v.p_a == 2);
    CHECK(v.p_b == 2);
    CHECK(v.pass());
    auto triv = verify_thm37(trivial_grading(a, FiniteGroup::cyclic(1)), 10);
    CHECK(triv.p_a == triv.p_b);
  }

  TEST_CASE("non-radical grading is refused") {
    auto gr = nonstandard_d3m(2, FiniteField(2));
    CHECK_THROWS_AS(verify_thm37(gr, 10), InputError);
  }

  TEST_CASE("symmetric algebras") {
    CHECK(is_symmetric(algebra_from(Rationals{}, testing::kx2_text())));
    CHECK(!is_symmetric(pre('A', 3, Rationals{})));
    CHECK(stable_cy_dimension(algebra_from(FiniteField(2), testing::kx2_text("GF(2)")), 10) == 0);
    CHECK_THROWS_AS(stable_cy_dimension(pre('A', 4, Rationals{}), 10), InputError);
  }

  TEST_CASE("graded generation criterion") {
    auto a = algebra_from(Rationals{}, testing::kx2_text());
    auto rows = graded_generation(grading_by_arrows(a, FiniteGroup::cyclic(2), {1}), 4);
    REQUIRE(rows.size() == 4);
    for (const auto& r : rows) {
      CAPTURE(r.r);
      CHECK(r.applies);
      if (r.applies) CHECK(r.generated_in_e == r.simples_fixed);
      CHECK(r.simples_fixed == (r.r % 2 == 0));
    }
    auto p = pre('A', 2, Rationals{});
    auto hg = half_grading(p, DynkinGraph::make('A', 2), 3);
    for (const auto& r : graded_generation(hg, 6)) {
      CAPTURE(r.r);
      CHECK(r.applies == (r.r % 2 == 0));
      if (r.applies) CHECK(r.generated_in_e == r.simples_fixed);
    }
  }

  TEST_CASE("twist events compose and the period is minimal") {
    const Rationals q;
    std::vector<AlgebraPtr<Rationals>> algs = {pre('A', 2, q), pre('A', 3, q), pre('L', 2, q), nakayama(3, 4, q),
                                               nakayama(2, 3, q)};
    for (const auto& a : algs) {
      CAPTURE(a->name());
      auto r = period(a, 30);
      REQUIRE(r.period);
      REQUIRE(!r.twists.empty());
      for (std::size_t k = 0; k + 1 < r.twists.size(); ++k) CHECK(!r.twists[k].inner);
      CHECK(r.twists.back().inner);
      CHECK(r.twists.back().n == *r.period);
      auto env = envelope_of(a);
      const auto& first = r.twists.front();
      for (const auto& e : r.twists)
        if (e.n == 2 * first.n)
          CHECK(iso(twist(e.sigma, env).module, twist(compose(first.sigma, first.sigma), env).module).isomorphic);
      // Omega^n(A) is never 1_A_1 below the period.
      BimoduleResolver<Rationals> res(a, env);
      auto one = algebra_as_bimodule(a, env);
      for (std::size_t n = 1; n < *r.period; ++n)
        CHECK(!iso(res.syzygy(n).module, one.module).isomorphic);
    }
  }
}
