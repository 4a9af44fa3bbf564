#include <doctest.h>

#include <random>

#include "peri/matrix.hpp"
#include "support.hpp"

using namespace peri;

TEST_SUITE("linalg") {
  TEST_CASE("rref of identity and zero") {
    Rationals q;
    auto r = rref(Matrix<Rationals>::identity(q, 2));
    CHECK(r.rank == 2);
    CHECK(r.reduced == Matrix<Rationals>::identity(q, 2));
    CHECK(r.pivot_columns == std::vector<std::size_t>{0, 1});
    auto z = rref(Matrix<Rationals>(q, 3, 3));
    CHECK(z.rank == 0);
    CHECK(z.reduced.is_zero());
    CHECK(z.pivot_columns.empty());
  }

  TEST_CASE("rank over GF(2)") {
    FiniteField f(2);
    CHECK(rank(Matrix<FiniteField>::from_ints(f, 2, 2, {1, 1, 1, 1})) == 1);
  }

  TEST_CASE("nullspace examples") {
    Rationals q;
    CHECK(nullspace(Matrix<Rationals>::identity(q, 3)).cols() == 0);
    CHECK(nullspace(Matrix<Rationals>(q, 3, 3)) == Matrix<Rationals>::identity(q, 3));
    auto ns = nullspace(Matrix<Rationals>::from_ints(q, 1, 2, {1, 2}));
    REQUIRE(ns.cols() == 1);
    CHECK(ns(0, 0) == -2 * ns(1, 0));
    CHECK(ns(1, 0) != 0);
  }

  TEST_CASE("solve examples") {
    Rationals q;
    auto b = Matrix<Rationals>::from_ints(q, 2, 1, {3, 4});
    CHECK(*solve(Matrix<Rationals>::identity(q, 2), b) == b);
    CHECK_FALSE(solve(Matrix<Rationals>::from_ints(q, 2, 1, {1, 1}), Matrix<Rationals>::from_ints(q, 2, 1, {1, 2})));
    auto x = solve(Matrix<Rationals>::from_ints(q, 1, 1, {2}), Matrix<Rationals>::from_ints(q, 1, 1, {1}));
    REQUIRE(x);
    CHECK((*x)(0, 0) == mpq_class(1, 2));
    CHECK_THROWS_AS(solve(Matrix<Rationals>::identity(q, 2), Matrix<Rationals>(q, 3, 1)), InputError);
  }

  TEST_CASE("finite field arithmetic") {
    FiniteField f2(2), f3(3), f4(2, 2);
    CHECK(f2.add(1, 1) == 0);
    CHECK(f3.inv(2) == 2);
    auto x = f4.generator();
    CHECK(f4.mul(x, x) == f4.add(x, 1));
    CHECK_THROWS_AS(f3.inv(0), ArithmeticError);
    CHECK(f4.modulus() == std::vector<unsigned>{1, 1, 1});
  }

  TEST_CASE("field spec parsing") {
    CHECK(FieldSpec::parse("Q") == FieldSpec::rationals());
    CHECK(FieldSpec::parse("GF(2)") == FieldSpec::galois(2));
    CHECK(FieldSpec::parse("GF(3^2)") == FieldSpec::galois(3, 2));
    CHECK_THROWS_AS(FieldSpec::parse("GF(4)"), InputError);
    CHECK_THROWS_AS(FieldSpec::parse("R"), InputError);
  }

  TEST_CASE_TEMPLATE("rank-nullity, rref idempotence and solve soundness", K, Rationals, FiniteField) {
    std::mt19937_64 rng(20261016);
    std::vector<K> fields;
    if constexpr (std::is_same_v<K, Rationals>) fields = {Rationals{}};
    else fields = {FiniteField(2), FiniteField(3), FiniteField(2, 3), FiniteField(5, 2)};
    for (const auto& f : fields)
      for (int trial = 0; trial < 40; ++trial) {
        std::size_t r = 1 + rng() % 7, c = 1 + rng() % 7;
        auto m = testing::random_matrix(f, rng, r, c, static_cast<int>(rng() % 8));
        auto rr = rref(m);
        CHECK(rr.rank + nullspace(m).cols() == c);
        CHECK(rref(rr.reduced).reduced == rr.reduced);
        CHECK((m * nullspace(m)).is_zero());
        auto rhs = testing::random_matrix(f, rng, r, 2, 3);
        if (auto x = solve(m, rhs)) CHECK(m * *x == rhs);
        auto consistent = m * testing::random_matrix(f, rng, c, 1, 2);
        auto x = solve(m, consistent);
        REQUIRE(x);
        CHECK(m * *x == consistent);
        for (const auto& v : left_kernel(m)) CHECK(is_zero_vec<K>(f, v * m));
      }
  }

  TEST_CASE("Frobenius is a field endomorphism") {
    std::mt19937_64 rng(7);
    for (auto [p, k] : {std::pair{2u, 3u}, {3u, 2u}, {5u, 2u}, {2u, 4u}}) {
      FiniteField f(p, k);
      for (int i = 0; i < 200; ++i) {
        auto a = f.random(rng), b = f.random(rng);
        CHECK(f.frobenius(f.add(a, b)) == f.add(f.frobenius(a), f.frobenius(b)));
        CHECK(f.frobenius(f.mul(a, b)) == f.mul(f.frobenius(a), f.frobenius(b)));
      }
    }
  }

  TEST_CASE("embedding GF(4) into GF(16) is a ring map") {
    FiniteField small(2, 2), big(2, 4);
    auto emb = big.embedding_from(small);
    for (std::uint32_t a = 0; a < 4; ++a)
      for (std::uint32_t b = 0; b < 4; ++b) {
        CHECK(emb[small.add(a, b)] == big.add(emb[a], emb[b]));
        CHECK(emb[small.mul(a, b)] == big.mul(emb[a], emb[b]));
      }
  }

  TEST_CASE("rank modulo a prime certifies rational rank") {
    Rationals q;
    auto m = Matrix<Rationals>::from_ints(q, 2, 2, {1, 2, 3, 4});
    m(0, 0) = mpq_class(1, 3);
    CHECK(rank_mod_prime(m, 1000000007ULL) == 2u);
    CHECK_FALSE(rank_mod_prime(m, 3));
  }

  TEST_CASE("subspace coordinates") {
    Rationals q;
    auto s = Subspace<Rationals>::span(q, 3, {{1, 1, 0}, {0, 1, 1}});
    CHECK(s.dim() == 2);
    CHECK(s.contains({1, 2, 1}));
    CHECK_FALSE(s.contains({1, 0, 0}));
    Vec<Rationals> v{2, 3, 1};
    auto c = s.coordinates(v);
    Vec<Rationals> back(3, 0);
    for (std::size_t i = 0; i < s.dim(); ++i)
      for (std::size_t j = 0; j < 3; ++j) back[j] += c[i] * s.basis()[i][j];
    CHECK(back == v);
  }
}
