#pragma once

#include <cstdint>
#include <memory>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "peri/error.hpp"

namespace peri {

/// Ground field description: Q (characteristic 0) or GF(p^k).
struct FieldSpec {
  unsigned characteristic = 0;
  unsigned extension_degree = 1;

  static FieldSpec rationals() { return {0, 1}; }
  static FieldSpec galois(unsigned p, unsigned k = 1) { return {p, k}; }

  /// Throws InputError when the invariants fail (p prime, k >= 1, Q has k = 1).
  void validate() const;
  /// Accepts "Q", "GF(p)", "GF(p^k)".
  static FieldSpec parse(std::string_view text);
  std::string str() const;

  bool operator==(const FieldSpec&) const = default;
};

bool is_prime(unsigned n);

/// The rationals, backed by GMP.
class Rationals {
 public:
  using Elem = mpq_class;

  FieldSpec spec() const { return FieldSpec::rationals(); }
  unsigned characteristic() const { return 0; }

  Elem zero() const { return Elem(0); }
  Elem one() const { return Elem(1); }
  Elem from_int(long long n) const { return Elem(static_cast<long>(n)); }
  Elem from_rational(const mpq_class& q) const { return q; }

  bool is_zero(const Elem& a) const { return sgn(a) == 0; }
  bool is_one(const Elem& a) const { return a == 1; }
  bool equal(const Elem& a, const Elem& b) const { return a == b; }

  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem sub(const Elem& a, const Elem& b) const { return a - b; }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
  Elem neg(const Elem& a) const { return -a; }
  Elem inv(const Elem& a) const {
    if (is_zero(a)) throw ArithmeticError("inverse of zero");
    return 1 / a;
  }
  void add_to(Elem& y, const Elem& x) const { y += x; }
  /// y -= f * x
  void sub_mul_to(Elem& y, const Elem& f, const Elem& x) const { y -= f * x; }
  void add_mul_to(Elem& y, const Elem& f, const Elem& x) const { y += f * x; }
  void mul_to(Elem& y, const Elem& f) const { y *= f; }

  /// Uniform integer in [-range, range].
  Elem random(std::mt19937_64& rng, long range = 1L << 20) const {
    std::uniform_int_distribution<long> d(-range, range);
    return Elem(d(rng));
  }

  std::string str(const Elem& a) const { return a.get_str(); }
  bool operator==(const Rationals&) const { return true; }
};

/// GF(p^k) with elements encoded as integers sum c_i p^i for the polynomial
/// sum c_i x^i modulo the field's fixed primitive modulus.
class FiniteField {
 public:
  using Elem = std::uint32_t;

  explicit FiniteField(unsigned p = 2, unsigned k = 1);

  FieldSpec spec() const { return {t_->p, t_->k}; }
  unsigned characteristic() const { return t_->p; }
  unsigned degree() const { return t_->k; }
  std::uint32_t order() const { return t_->q; }
  /// Coefficients c_0..c_k of the monic modulus (c_k = 1).
  const std::vector<unsigned>& modulus() const { return t_->modulus; }

  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  Elem from_int(long long n) const {
    long long p = t_->p;
    return static_cast<Elem>(((n % p) + p) % p);
  }
  /// Throws ArithmeticError when the denominator vanishes in this field.
  Elem from_rational(const mpq_class& q) const;
  /// The class of x (a primitive element).
  Elem generator() const { return t_->k == 1 ? t_->exp[1] : static_cast<Elem>(t_->p); }

  bool is_zero(Elem a) const { return a == 0; }
  bool is_one(Elem a) const { return a == 1; }
  bool equal(Elem a, Elem b) const { return a == b; }

  Elem add(Elem a, Elem b) const {
    if (t_->k == 1) {
      Elem s = a + b;
      return s >= t_->p ? s - t_->p : s;
    }
    if (t_->p == 2) return a ^ b;
    return digit_add(a, b, false);
  }
  Elem sub(Elem a, Elem b) const {
    if (t_->k == 1) return a >= b ? a - b : a + t_->p - b;
    if (t_->p == 2) return a ^ b;
    return digit_add(a, b, true);
  }
  Elem neg(Elem a) const { return sub(0, a); }
  Elem mul(Elem a, Elem b) const {
    if (a == 0 || b == 0) return 0;
    if (t_->k == 1) return static_cast<Elem>((std::uint64_t(a) * b) % t_->p);
    return t_->exp[t_->log[a] + t_->log[b]];
  }
  Elem inv(Elem a) const {
    if (a == 0) throw ArithmeticError("inverse of zero in " + spec().str());
    return t_->exp[(t_->q - 1 - t_->log[a]) % (t_->q - 1)];
  }
  Elem pow(Elem a, std::uint64_t e) const;
  Elem frobenius(Elem a) const { return pow(a, t_->p); }

  void add_to(Elem& y, Elem x) const { y = add(y, x); }
  void sub_mul_to(Elem& y, Elem f, Elem x) const { y = sub(y, mul(f, x)); }
  void add_mul_to(Elem& y, Elem f, Elem x) const { y = add(y, mul(f, x)); }
  void mul_to(Elem& y, Elem f) const { y = mul(y, f); }

  Elem random(std::mt19937_64& rng, long = 0) const {
    std::uniform_int_distribution<std::uint32_t> d(0, t_->q - 1);
    return d(rng);
  }

  std::string str(Elem a) const;
  bool operator==(const FiniteField& o) const { return t_->p == o.t_->p && t_->k == o.t_->k; }

  /// Image of every element of `small` in `*this` under a fixed embedding.
  /// Requires small.degree() to divide degree().
  std::vector<Elem> embedding_from(const FiniteField& small) const;

 private:
  struct Tables {
    unsigned p = 2, k = 1;
    std::uint32_t q = 2;
    std::vector<unsigned> modulus;
    std::vector<Elem> exp;  // length 2(q-1)
    std::vector<std::uint32_t> log;
  };
  Elem digit_add(Elem a, Elem b, bool subtract) const;
  static std::shared_ptr<const Tables> make_tables(unsigned p, unsigned k);

  std::shared_ptr<const Tables> t_;
};

}  // namespace peri
