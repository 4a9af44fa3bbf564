#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "peri/field.hpp"

namespace peri {

/// Dense row vector.
template <class K>
using Vec = std::vector<typename K::Elem>;

/// Sorted (index, value) pairs with no explicit zeros.
template <class K>
using SparseVec = std::vector<std::pair<std::uint32_t, typename K::Elem>>;

/// Dense row-major matrix over K.
template <class K>
class Matrix {
 public:
  using Elem = typename K::Elem;

  Matrix() = default;
  Matrix(K field, std::size_t rows, std::size_t cols)
      : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols, field_.zero()) {}

  static Matrix identity(const K& field, std::size_t n);
  static Matrix from_rows(const K& field, std::size_t cols, const std::vector<Vec<K>>& rows);
  static Matrix from_ints(const K& field, std::size_t rows, std::size_t cols,
                          const std::vector<long long>& entries);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const K& field() const { return field_; }

  Elem& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Elem& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  std::span<Elem> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const Elem> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
  Vec<K> row_vec(std::size_t r) const { return Vec<K>(row(r).begin(), row(r).end()); }
  Vec<K> col_vec(std::size_t c) const;
  void set_row(std::size_t r, const Vec<K>& v);

  Matrix transpose() const;
  bool is_zero() const;
  bool operator==(const Matrix& o) const;
  std::string str() const;

 private:
  K field_{};
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Elem> data_;
};

template <class K>
Matrix<K> operator*(const Matrix<K>& a, const Matrix<K>& b);
template <class K>
Matrix<K> operator+(const Matrix<K>& a, const Matrix<K>& b);
template <class K>
Matrix<K> operator-(const Matrix<K>& a, const Matrix<K>& b);
template <class K>
Matrix<K> scaled(const Matrix<K>& a, const typename K::Elem& s);
/// Row vector times matrix.
template <class K>
Vec<K> operator*(const Vec<K>& v, const Matrix<K>& m);

template <class K>
struct RrefResult {
  std::size_t rank = 0;
  Matrix<K> reduced;
  std::vector<std::size_t> pivot_columns;
};

/// Reduced row-echelon form.
template <class K>
RrefResult<K> rref(Matrix<K> m);
template <class K>
std::size_t rank(const Matrix<K>& m);
/// Basis of the right kernel, one vector per column of the result.
template <class K>
Matrix<K> nullspace(const Matrix<K>& m);
/// Rows v with v * m = 0. Each returned row has a 1 at its entry of
/// `free_columns` (same order) and zeros at the other free columns.
template <class K>
std::vector<Vec<K>> left_kernel(const Matrix<K>& m, std::vector<std::size_t>* free_columns = nullptr);
/// Some x with m * x = rhs, or nullopt when inconsistent. Throws InputError on
/// a row-count mismatch.
template <class K>
std::optional<Matrix<K>> solve(const Matrix<K>& m, const Matrix<K>& rhs);
template <class K>
std::optional<Matrix<K>> inverse(const Matrix<K>& m);

/// Rank of an integer-valued image of a rational matrix modulo a prime;
/// nullopt when some denominator is divisible by the prime. A full rank modulo
/// p certifies full rank over Q.
std::optional<std::size_t> rank_mod_prime(const Matrix<Rationals>& m, std::uint64_t prime);

// ---------------------------------------------------------------------------

/// Row-major sparse matrix; used for module actions (row vector convention).
template <class K>
struct SparseMatrix {
  std::size_t rows = 0, cols = 0;
  std::vector<SparseVec<K>> data;

  static SparseMatrix zero(std::size_t r, std::size_t c) { return {r, c, std::vector<SparseVec<K>>(r)}; }
  static SparseMatrix identity(const K& field, std::size_t n);
  static SparseMatrix from_dense(const Matrix<K>& m);
  Matrix<K> to_dense(const K& field) const;
  std::size_t nonzeros() const;
};

/// v * m
template <class K>
Vec<K> row_times(const K& field, std::span<const typename K::Elem> v, const SparseMatrix<K>& m);
template <class K>
SparseMatrix<K> multiply(const K& field, const SparseMatrix<K>& a, const SparseMatrix<K>& b);
template <class K>
SparseMatrix<K> add_scaled(const K& field, const SparseMatrix<K>& a, const typename K::Elem& s,
                           const SparseMatrix<K>& b);
template <class K>
bool sparse_equal(const K& field, const SparseMatrix<K>& a, const SparseMatrix<K>& b);

template <class K>
SparseVec<K> sparsify(const K& field, std::span<const typename K::Elem> v);
template <class K>
Vec<K> densify(const K& field, const SparseVec<K>& v, std::size_t n);
/// y += s * x for sparse x.
template <class K>
void axpy(const K& field, SparseVec<K>& y, const typename K::Elem& s, const SparseVec<K>& x);

// ---------------------------------------------------------------------------

/// A subspace of K^n kept as a reduced basis: row i has a 1 at pivots()[i] and
/// zeros at every other pivot. Coordinates of a member are its pivot entries.
template <class K>
class Subspace {
 public:
  using Elem = typename K::Elem;

  Subspace() = default;
  Subspace(K field, std::size_t ambient) : field_(std::move(field)), ambient_(ambient) {}
  /// Adopts a basis already in the reduced form described above.
  static Subspace from_reduced(K field, std::size_t ambient, std::vector<Vec<K>> basis,
                               std::vector<std::size_t> pivots);
  static Subspace span(const K& field, std::size_t ambient, const std::vector<Vec<K>>& vectors);

  std::size_t dim() const { return basis_.size(); }
  std::size_t ambient() const { return ambient_; }
  const K& field() const { return field_; }
  const std::vector<Vec<K>>& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  /// Reduces v modulo the subspace in place; returns true when v becomes zero.
  bool reduce(Vec<K>& v) const;
  bool contains(Vec<K> v) const { return reduce(v); }
  /// Returns true if v enlarged the subspace.
  bool insert(Vec<K> v);
  /// Coordinates of a member with respect to basis().
  Vec<K> coordinates(const Vec<K>& v) const;
  bool contains_all(const Subspace& other) const;

 private:
  K field_{};
  std::size_t ambient_ = 0;
  std::vector<Vec<K>> basis_;
  std::vector<std::size_t> pivots_;
};

template <class K>
bool is_zero_vec(const K& field, std::span<const typename K::Elem> v);

}  // namespace peri
