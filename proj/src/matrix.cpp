#include "peri/matrix.hpp"

#include <algorithm>
#include <sstream>

namespace peri {

template <class K>
bool is_zero_vec(const K& field, std::span<const typename K::Elem> v) {
  for (const auto& x : v)
    if (!field.is_zero(x)) return false;
  return true;
}

template <class K>
Matrix<K> Matrix<K>::identity(const K& field, std::size_t n) {
  Matrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = field.one();
  return m;
}

template <class K>
Matrix<K> Matrix<K>::from_rows(const K& field, std::size_t cols, const std::vector<Vec<K>>& rows) {
  Matrix m(field, rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) m.set_row(r, rows[r]);
  return m;
}

template <class K>
Matrix<K> Matrix<K>::from_ints(const K& field, std::size_t rows, std::size_t cols,
                               const std::vector<long long>& entries) {
  if (entries.size() != rows * cols) throw InputError("from_ints: entry count mismatch");
  Matrix m(field, rows, cols);
  for (std::size_t i = 0; i < entries.size(); ++i) m.data_[i] = field.from_int(entries[i]);
  return m;
}

template <class K>
Vec<K> Matrix<K>::col_vec(std::size_t c) const {
  Vec<K> v;
  v.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v.push_back((*this)(r, c));
  return v;
}

template <class K>
void Matrix<K>::set_row(std::size_t r, const Vec<K>& v) {
  if (v.size() != cols_) throw InputError("set_row: length mismatch");
  std::copy(v.begin(), v.end(), data_.begin() + r * cols_);
}

template <class K>
Matrix<K> Matrix<K>::transpose() const {
  Matrix t(field_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

template <class K>
bool Matrix<K>::is_zero() const {
  return is_zero_vec<K>(field_, std::span<const Elem>(data_));
}

template <class K>
bool Matrix<K>::operator==(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) return false;
  for (std::size_t i = 0; i < data_.size(); ++i)
    if (!field_.equal(data_[i], o.data_[i])) return false;
  return true;
}

template <class K>
std::string Matrix<K>::str() const {
  std::ostringstream os;
  for (std::size_t r = 0; r < rows_; ++r) {
    os << '[';
    for (std::size_t c = 0; c < cols_; ++c) os << (c ? " " : "") << field_.str((*this)(r, c));
    os << "]\n";
  }
  return os.str();
}

template <class K>
Matrix<K> operator*(const Matrix<K>& a, const Matrix<K>& b) {
  if (a.cols() != b.rows()) throw InputError("matrix product: shape mismatch");
  const K& f = a.field();
  Matrix<K> c(f, a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const auto& x = a(i, k);
      if (f.is_zero(x)) continue;
      for (std::size_t j = 0; j < b.cols(); ++j)
        if (!f.is_zero(b(k, j))) f.add_mul_to(c(i, j), x, b(k, j));
    }
  return c;
}

template <class K>
Matrix<K> operator+(const Matrix<K>& a, const Matrix<K>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw InputError("matrix sum: shape mismatch");
  Matrix<K> c = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) a.field().add_to(c(i, j), b(i, j));
  return c;
}

template <class K>
Matrix<K> operator-(const Matrix<K>& a, const Matrix<K>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw InputError("matrix difference: shape mismatch");
  Matrix<K> c = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = a.field().sub(a(i, j), b(i, j));
  return c;
}

template <class K>
Matrix<K> scaled(const Matrix<K>& a, const typename K::Elem& s) {
  Matrix<K> c = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) a.field().mul_to(c(i, j), s);
  return c;
}

template <class K>
Vec<K> operator*(const Vec<K>& v, const Matrix<K>& m) {
  if (v.size() != m.rows()) throw InputError("vector-matrix product: shape mismatch");
  const K& f = m.field();
  Vec<K> out(m.cols(), f.zero());
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (f.is_zero(v[i])) continue;
    auto row = m.row(i);
    for (std::size_t j = 0; j < out.size(); ++j)
      if (!f.is_zero(row[j])) f.add_mul_to(out[j], v[i], row[j]);
  }
  return out;
}

namespace {

// Full Gauss-Jordan in place; returns pivot columns. Rows past the rank end up zero.
template <class K>
std::vector<std::size_t> reduce_in_place(Matrix<K>& m) {
  const K& f = m.field();
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && f.is_zero(m(p, c))) ++p;
    if (p == m.rows()) continue;
    if (p != r)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
    auto inv = f.inv(m(r, c));
    for (std::size_t j = c; j < m.cols(); ++j) f.mul_to(m(r, j), inv);
    std::vector<std::size_t> nz;
    for (std::size_t j = c + 1; j < m.cols(); ++j)
      if (!f.is_zero(m(r, j))) nz.push_back(j);
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || f.is_zero(m(i, c))) continue;
      auto factor = m(i, c);
      for (std::size_t j : nz) f.sub_mul_to(m(i, j), factor, m(r, j));
      m(i, c) = f.zero();
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

template <class K>
RrefResult<K> rref(Matrix<K> m) {
  auto piv = reduce_in_place(m);
  return {piv.size(), std::move(m), std::move(piv)};
}

template <class K>
std::size_t rank(const Matrix<K>& m) {
  if (m.rows() > m.cols()) {
    Matrix<K> t = m.transpose();
    return reduce_in_place(t).size();
  }
  Matrix<K> c = m;
  return reduce_in_place(c).size();
}

template <class K>
Matrix<K> nullspace(const Matrix<K>& m) {
  const K& f = m.field();
  auto rr = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : rr.pivot_columns) is_pivot[c] = true;
  std::vector<std::size_t> free;
  for (std::size_t c = 0; c < m.cols(); ++c)
    if (!is_pivot[c]) free.push_back(c);
  Matrix<K> ns(f, m.cols(), free.size());
  for (std::size_t k = 0; k < free.size(); ++k) {
    ns(free[k], k) = f.one();
    for (std::size_t i = 0; i < rr.rank; ++i) ns(rr.pivot_columns[i], k) = f.neg(rr.reduced(i, free[k]));
  }
  return ns;
}

template <class K>
std::vector<Vec<K>> left_kernel(const Matrix<K>& m, std::vector<std::size_t>* free_columns) {
  const K& f = m.field();
  auto rr = rref(m.transpose());
  const std::size_t n = m.rows();
  std::vector<bool> is_pivot(n, false);
  for (auto c : rr.pivot_columns) is_pivot[c] = true;
  std::vector<std::size_t> free;
  for (std::size_t c = 0; c < n; ++c)
    if (!is_pivot[c]) free.push_back(c);
  std::vector<Vec<K>> out;
  out.reserve(free.size());
  for (auto fc : free) {
    Vec<K> v(n, f.zero());
    v[fc] = f.one();
    for (std::size_t i = 0; i < rr.rank; ++i) v[rr.pivot_columns[i]] = f.neg(rr.reduced(i, fc));
    out.push_back(std::move(v));
  }
  if (free_columns) *free_columns = std::move(free);
  return out;
}

template <class K>
std::optional<Matrix<K>> solve(const Matrix<K>& m, const Matrix<K>& rhs) {
  if (m.rows() != rhs.rows()) throw InputError("solve: row count mismatch");
  const K& f = m.field();
  Matrix<K> aug(f, m.rows(), m.cols() + rhs.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
    for (std::size_t j = 0; j < rhs.cols(); ++j) aug(i, m.cols() + j) = rhs(i, j);
  }
  auto piv = reduce_in_place(aug);
  Matrix<K> x(f, m.cols(), rhs.cols());
  for (std::size_t i = 0; i < piv.size(); ++i) {
    if (piv[i] >= m.cols()) return std::nullopt;
    for (std::size_t j = 0; j < rhs.cols(); ++j) x(piv[i], j) = aug(i, m.cols() + j);
  }
  return x;
}

template <class K>
std::optional<Matrix<K>> inverse(const Matrix<K>& m) {
  if (m.rows() != m.cols()) return std::nullopt;
  if (rank(m) != m.rows()) return std::nullopt;
  return solve(m, Matrix<K>::identity(m.field(), m.rows()));
}

std::optional<std::size_t> rank_mod_prime(const Matrix<Rationals>& m, std::uint64_t prime) {
  using u128 = unsigned __int128;
  auto mulmod = [prime](std::uint64_t a, std::uint64_t b) { return std::uint64_t(u128(a) * b % prime); };
  auto powmod = [&](std::uint64_t a, std::uint64_t e) {
    std::uint64_t r = 1;
    while (e) {
      if (e & 1) r = mulmod(r, a);
      a = mulmod(a, a);
      e >>= 1;
    }
    return r;
  };
  mpz_class P(std::to_string(prime));
  auto reduce = [&](const mpz_class& z) {
    mpz_class r = z % P;
    if (r < 0) r += P;
    return std::stoull(r.get_str());
  };
  const std::size_t R = m.rows(), C = m.cols();
  std::vector<std::uint64_t> a(R * C);
  for (std::size_t i = 0; i < R; ++i)
    for (std::size_t j = 0; j < C; ++j) {
      const mpq_class& q = m(i, j);
      if (sgn(q) == 0) continue;
      std::uint64_t d = reduce(q.get_den());
      if (d == 0) return std::nullopt;
      a[i * C + j] = mulmod(reduce(q.get_num()), powmod(d, prime - 2));
    }
  std::size_t r = 0;
  for (std::size_t c = 0; c < C && r < R; ++c) {
    std::size_t p = r;
    while (p < R && a[p * C + c] == 0) ++p;
    if (p == R) continue;
    if (p != r)
      for (std::size_t j = 0; j < C; ++j) std::swap(a[p * C + j], a[r * C + j]);
    std::uint64_t inv = powmod(a[r * C + c], prime - 2);
    for (std::size_t i = r + 1; i < R; ++i) {
      std::uint64_t fac = mulmod(a[i * C + c], inv);
      if (!fac) continue;
      for (std::size_t j = c; j < C; ++j)
        a[i * C + j] = (a[i * C + j] + prime - mulmod(fac, a[r * C + j])) % prime;
    }
    ++r;
  }
  return r;
}

// ---------------------------------------------------------------------------

template <class K>
SparseMatrix<K> SparseMatrix<K>::identity(const K& field, std::size_t n) {
  SparseMatrix s = zero(n, n);
  for (std::size_t i = 0; i < n; ++i) s.data[i].push_back({static_cast<std::uint32_t>(i), field.one()});
  return s;
}

template <class K>
SparseMatrix<K> SparseMatrix<K>::from_dense(const Matrix<K>& m) {
  SparseMatrix s = zero(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) s.data[i] = sparsify<K>(m.field(), m.row(i));
  return s;
}

template <class K>
Matrix<K> SparseMatrix<K>::to_dense(const K& field) const {
  Matrix<K> m(field, rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (const auto& [j, x] : data[i]) m(i, j) = x;
  return m;
}

template <class K>
std::size_t SparseMatrix<K>::nonzeros() const {
  std::size_t n = 0;
  for (const auto& r : data) n += r.size();
  return n;
}

template <class K>
Vec<K> row_times(const K& field, std::span<const typename K::Elem> v, const SparseMatrix<K>& m) {
  if (v.size() != m.rows) throw InputError("row_times: shape mismatch");
  Vec<K> out(m.cols, field.zero());
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (field.is_zero(v[i])) continue;
    for (const auto& [j, x] : m.data[i]) field.add_mul_to(out[j], v[i], x);
  }
  return out;
}

template <class K>
SparseVec<K> sparsify(const K& field, std::span<const typename K::Elem> v) {
  SparseVec<K> s;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!field.is_zero(v[i])) s.push_back({static_cast<std::uint32_t>(i), v[i]});
  return s;
}

template <class K>
Vec<K> densify(const K& field, const SparseVec<K>& v, std::size_t n) {
  Vec<K> d(n, field.zero());
  for (const auto& [i, x] : v) d[i] = x;
  return d;
}

template <class K>
void axpy(const K& field, SparseVec<K>& y, const typename K::Elem& s, const SparseVec<K>& x) {
  if (field.is_zero(s) || x.empty()) return;
  SparseVec<K> out;
  out.reserve(y.size() + x.size());
  std::size_t i = 0, j = 0;
  while (i < y.size() || j < x.size()) {
    if (j == x.size() || (i < y.size() && y[i].first < x[j].first)) {
      out.push_back(std::move(y[i++]));
    } else if (i == y.size() || x[j].first < y[i].first) {
      out.push_back({x[j].first, field.mul(s, x[j].second)});
      ++j;
    } else {
      auto v = y[i].second;
      field.add_mul_to(v, s, x[j].second);
      if (!field.is_zero(v)) out.push_back({y[i].first, std::move(v)});
      ++i, ++j;
    }
  }
  y = std::move(out);
}

template <class K>
SparseMatrix<K> multiply(const K& field, const SparseMatrix<K>& a, const SparseMatrix<K>& b) {
  if (a.cols != b.rows) throw InputError("sparse product: shape mismatch");
  SparseMatrix<K> c = SparseMatrix<K>::zero(a.rows, b.cols);
  Vec<K> acc(b.cols, field.zero());
  std::vector<char> touched(b.cols, 0);
  std::vector<std::uint32_t> idx;
  for (std::size_t i = 0; i < a.rows; ++i) {
    idx.clear();
    for (const auto& [k, x] : a.data[i])
      for (const auto& [j, y] : b.data[k]) {
        if (!touched[j]) touched[j] = 1, idx.push_back(j);
        field.add_mul_to(acc[j], x, y);
      }
    std::sort(idx.begin(), idx.end());
    for (auto j : idx) {
      if (!field.is_zero(acc[j])) c.data[i].push_back({j, acc[j]});
      acc[j] = field.zero();
      touched[j] = 0;
    }
  }
  return c;
}

template <class K>
SparseMatrix<K> add_scaled(const K& field, const SparseMatrix<K>& a, const typename K::Elem& s,
                           const SparseMatrix<K>& b) {
  if (a.rows != b.rows || a.cols != b.cols) throw InputError("sparse sum: shape mismatch");
  SparseMatrix<K> c = a;
  for (std::size_t i = 0; i < a.rows; ++i) axpy(field, c.data[i], s, b.data[i]);
  return c;
}

template <class K>
bool sparse_equal(const K& field, const SparseMatrix<K>& a, const SparseMatrix<K>& b) {
  if (a.rows != b.rows || a.cols != b.cols) return false;
  for (std::size_t i = 0; i < a.rows; ++i) {
    if (a.data[i].size() != b.data[i].size()) return false;
    for (std::size_t k = 0; k < a.data[i].size(); ++k)
      if (a.data[i][k].first != b.data[i][k].first || !field.equal(a.data[i][k].second, b.data[i][k].second))
        return false;
  }
  return true;
}

// ---------------------------------------------------------------------------

template <class K>
Subspace<K> Subspace<K>::from_reduced(K field, std::size_t ambient, std::vector<Vec<K>> basis,
                                      std::vector<std::size_t> pivots) {
  Subspace s(std::move(field), ambient);
  s.basis_ = std::move(basis);
  s.pivots_ = std::move(pivots);
  return s;
}

template <class K>
Subspace<K> Subspace<K>::span(const K& field, std::size_t ambient, const std::vector<Vec<K>>& vectors) {
  Subspace s(field, ambient);
  for (const auto& v : vectors) s.insert(v);
  return s;
}

template <class K>
bool Subspace<K>::reduce(Vec<K>& v) const {
  if (v.size() != ambient_) throw InputError("Subspace: vector length mismatch");
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    auto c = v[pivots_[i]];
    if (field_.is_zero(c)) continue;
    const auto& b = basis_[i];
    for (std::size_t j = 0; j < ambient_; ++j)
      if (!field_.is_zero(b[j])) field_.sub_mul_to(v[j], c, b[j]);
  }
  return is_zero_vec<K>(field_, std::span<const Elem>(v));
}

template <class K>
bool Subspace<K>::insert(Vec<K> v) {
  if (reduce(v)) return false;
  std::size_t p = 0;
  while (field_.is_zero(v[p])) ++p;
  auto inv = field_.inv(v[p]);
  for (auto& x : v) field_.mul_to(x, inv);
  for (auto& b : basis_) {
    auto c = b[p];
    if (field_.is_zero(c)) continue;
    for (std::size_t j = 0; j < ambient_; ++j)
      if (!field_.is_zero(v[j])) field_.sub_mul_to(b[j], c, v[j]);
  }
  basis_.push_back(std::move(v));
  pivots_.push_back(p);
  return true;
}

template <class K>
Vec<K> Subspace<K>::coordinates(const Vec<K>& v) const {
  Vec<K> c;
  c.reserve(pivots_.size());
  for (auto p : pivots_) c.push_back(v[p]);
  return c;
}

template <class K>
bool Subspace<K>::contains_all(const Subspace& other) const {
  for (const auto& b : other.basis_)
    if (!contains(b)) return false;
  return true;
}

#define PERI_INSTANTIATE_MATRIX(K)                                                                 \
  template class Matrix<K>;                                                                        \
  template class Subspace<K>;                                                                      \
  template struct SparseMatrix<K>;                                                                 \
  template bool is_zero_vec<K>(const K&, std::span<const K::Elem>);                                \
  template Matrix<K> operator*(const Matrix<K>&, const Matrix<K>&);                                \
  template Matrix<K> operator+(const Matrix<K>&, const Matrix<K>&);                                \
  template Matrix<K> operator-(const Matrix<K>&, const Matrix<K>&);                                \
  template Matrix<K> scaled(const Matrix<K>&, const K::Elem&);                                     \
  template Vec<K> operator*(const Vec<K>&, const Matrix<K>&);                                      \
  template RrefResult<K> rref(Matrix<K>);                                                          \
  template std::size_t rank(const Matrix<K>&);                                                     \
  template Matrix<K> nullspace(const Matrix<K>&);                                                  \
  template std::vector<Vec<K>> left_kernel(const Matrix<K>&, std::vector<std::size_t>*);           \
  template std::optional<Matrix<K>> solve(const Matrix<K>&, const Matrix<K>&);                     \
  template std::optional<Matrix<K>> inverse(const Matrix<K>&);                                     \
  template Vec<K> row_times(const K&, std::span<const K::Elem>, const SparseMatrix<K>&);           \
  template SparseMatrix<K> multiply(const K&, const SparseMatrix<K>&, const SparseMatrix<K>&);     \
  template SparseMatrix<K> add_scaled(const K&, const SparseMatrix<K>&, const K::Elem&,            \
                                      const SparseMatrix<K>&);                                     \
  template bool sparse_equal(const K&, const SparseMatrix<K>&, const SparseMatrix<K>&);            \
  template SparseVec<K> sparsify(const K&, std::span<const K::Elem>);                              \
  template Vec<K> densify(const K&, const SparseVec<K>&, std::size_t);                             \
  template void axpy(const K&, SparseVec<K>&, const K::Elem&, const SparseVec<K>&);

PERI_INSTANTIATE_MATRIX(Rationals)
PERI_INSTANTIATE_MATRIX(FiniteField)

}  // namespace peri
