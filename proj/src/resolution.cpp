#include <algorithm>
#include <cmath>
#include <random>
#include <type_traits>

#include "module_detail.hpp"
#include "peri/module.hpp"

namespace peri {

using detail::apply;

template <class K>
ProjectivePresentation<K> projective_cover(const ModuleRep<K>& m) {
  const K& f = m.field();
  const auto& a = m.algebra;
  if (a->parts().top.empty()) throw InputError("projective covers need a basic algebra: " + a->name());
  const std::size_t d = m.dim();
  ProjectivePresentation<K> p;

  auto rad = radical_of(m);
  for (std::size_t v = 0; v < a->vertex_count(); ++v)
    for (std::size_t i = 0; i < d; ++i) {
      if (m.vertex[i] != v) continue;
      Vec<K> u(d, f.zero());
      u[i] = f.one();
      if (rad.insert(std::move(u))) {
        p.summands.push_back(static_cast<std::uint32_t>(v));
        p.top.push_back(static_cast<std::uint32_t>(i));
      }
    }

  p.cover = zero_module(a);
  std::size_t dp = 0;
  for (auto v : p.summands) {
    p.offsets.push_back(static_cast<std::uint32_t>(dp));
    dp += a->tree(v).basis.size();
  }
  // Direct sums of indecomposable projectives, built in one pass.
  p.cover.vertex.reserve(dp);
  for (auto v : p.summands)
    for (auto b : a->tree(v).basis) p.cover.vertex.push_back(a->right_vertex(b));
  for (std::size_t g = 0; g < a->generators().size(); ++g) {
    auto s = SparseMatrix<K>::zero(dp, dp);
    for (std::size_t k = 0; k < p.summands.size(); ++k) {
      const auto& t = a->tree(p.summands[k]);
      const std::uint32_t off = p.offsets[k];
      for (std::size_t j = 0; j < t.basis.size(); ++j) {
        auto& row = s.data[off + j];
        for (const auto& [b, c] : a->right_action(g).data[t.basis[j]]) row.push_back({off + a->position(b), c});
        std::sort(row.begin(), row.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
      }
    }
    p.cover.action[g] = std::move(s);
  }

  p.surjection = Matrix<K>(f, dp, d);
  for (std::size_t k = 0; k < p.summands.size(); ++k) {
    auto o = orbit(m, {{p.top[k], f.one()}}, p.summands[k]);
    for (std::size_t j = 0; j < o.size(); ++j)
      for (const auto& [i, c] : o[j]) p.surjection(p.offsets[k] + j, i) = c;
  }

  auto kernel_vectors = left_kernel(p.surjection);
  if (dp - kernel_vectors.size() != d) throw ConsistencyError("projective cover is not surjective");
  auto h = detail::HomogeneousBasis<K>::build(f, p.cover.vertex, a->vertex_count(), kernel_vectors);
  if (h.rows.size() != kernel_vectors.size()) throw ConsistencyError("syzygy lost homogeneity");
  p.kernel = h.module(p.cover);
  p.kernel_pivots = h.pivots;
  p.inclusion = Matrix<K>::from_rows(f, dp, h.rows);

  // Preimages: each basis vector is a top generator times an algebra element.
  if (d > 0) {
    auto x = solve(p.surjection.transpose(), Matrix<K>::identity(f, d));
    if (!x) throw ConsistencyError("projective cover has no section");
    auto xt = x->transpose();
    for (std::size_t i = 0; i < d; ++i) p.preimages.push_back(xt.row_vec(i));
  }
  return p;
}

template <class K>
void check_presentation(const ModuleRep<K>& m, const ProjectivePresentation<K>& p) {
  const K& f = m.field();
  const auto& a = *m.algebra;
  const std::size_t dp = p.cover.dim();
  if (dp != m.dim() + p.kernel.dim()) throw ConsistencyError("dimensions do not add up");
  if (rank(p.surjection) != m.dim()) throw ConsistencyError("cover map not surjective");
  if (!(p.inclusion * p.surjection).is_zero()) throw ConsistencyError("kernel does not map to zero");
  if (rank(p.inclusion) != p.kernel.dim()) throw ConsistencyError("kernel inclusion not injective");
  for (std::size_t g = 0; g < a.generators().size(); ++g) {
    auto pg = p.cover.action[g].to_dense(f);
    if (!(pg * p.surjection == p.surjection * m.action[g].to_dense(f)))
      throw ConsistencyError("cover map is not a module map");
    if (!(p.kernel.action[g].to_dense(f) * p.inclusion == p.inclusion * pg))
      throw ConsistencyError("kernel inclusion is not a module map");
  }
  for (std::size_t z = 0; z < p.kernel.dim(); ++z)
    for (std::size_t k = 0; k < p.summands.size(); ++k) {
      const auto& t = a.tree(p.summands[k]);
      auto top = f.zero();
      for (std::size_t j = 0; j < t.basis.size(); ++j)
        for (const auto& [v, c] : a.top(t.basis[j]))
          if (v == p.summands[k]) f.add_mul_to(top, p.inclusion(z, p.offsets[k] + j), c);
      if (!f.is_zero(top)) throw ConsistencyError("syzygy is not inside the radical of the cover");
    }
}

template <class K>
ResolutionLedger<K> resolve(const ModuleRep<K>& m, std::size_t steps, bool verify) {
  ResolutionLedger<K> r;
  r.syzygies.push_back(m);
  for (std::size_t s = 0; s <= steps; ++s) {
    auto p = projective_cover(r.syzygies.back());
    if (verify) check_presentation(r.syzygies.back(), p);
    std::vector<std::size_t> mult(m.algebra->vertex_count(), 0);
    for (auto v : p.summands) ++mult[v];
    r.multiplicity.push_back(std::move(mult));
    r.syzygies.push_back(p.kernel);
    r.steps.push_back(std::move(p));
  }
  return r;
}

template <class K>
std::size_t ext_dim(AlgebraPtr<K> a, std::size_t i, std::size_t j, std::size_t r) {
  if (j >= a->vertex_count()) throw InputError("vertex out of range");
  return resolve(simple(a, i), r).multiplicity[r][j];
}

template <class K>
std::vector<std::vector<std::vector<std::size_t>>> ext_tables(AlgebraPtr<K> a, std::size_t up_to) {
  const std::size_t nv = a->vertex_count();
  std::vector<std::vector<std::vector<std::size_t>>> t(up_to + 1, std::vector<std::vector<std::size_t>>(nv));
  for (std::size_t i = 0; i < nv; ++i) {
    auto led = resolve(simple(a, i), up_to);
    for (std::size_t r = 0; r <= up_to; ++r) t[r][i] = led.multiplicity[r];
  }
  return t;
}

template <class K>
std::vector<Matrix<K>> hom_space(const ModuleRep<K>& m, const ModuleRep<K>& n) {
  const K& f = m.field();
  const std::size_t dm = m.dim(), dn = n.dim();
  if (dm == 0 || dn == 0) return {};
  auto p = projective_cover(m);
  // Unknown (s, j): the top of summand s goes to basis vector j of N.
  struct Unknown {
    std::size_t summand, target;
  };
  std::vector<Unknown> unknowns;
  std::vector<std::vector<SparseVec<K>>> phi;
  for (std::size_t s = 0; s < p.summands.size(); ++s)
    for (std::size_t j = 0; j < dn; ++j)
      if (n.vertex[j] == p.summands[s]) {
        unknowns.push_back({s, j});
        phi.push_back(orbit(n, {{static_cast<std::uint32_t>(j), f.one()}}, p.summands[s]));
      }
  if (unknowns.empty()) return {};
  auto image = [&](std::size_t u, std::span<const typename K::Elem> x) {
    SparseVec<K> y;
    const auto s = unknowns[u].summand;
    for (std::size_t k = 0; k < phi[u].size(); ++k) {
      const auto& c = x[p.offsets[s] + k];
      if (!f.is_zero(c)) axpy(f, y, c, phi[u][k]);
    }
    return y;
  };
  const std::size_t nk = p.kernel.dim();
  std::vector<Vec<K>> solutions;
  if (nk == 0) {
    for (std::size_t u = 0; u < unknowns.size(); ++u) {
      Vec<K> e(unknowns.size(), f.zero());
      e[u] = f.one();
      solutions.push_back(std::move(e));
    }
  } else {
    Matrix<K> c(f, unknowns.size(), nk * dn);
    for (std::size_t u = 0; u < unknowns.size(); ++u)
      for (std::size_t z = 0; z < nk; ++z)
        for (const auto& [i, x] : image(u, p.inclusion.row(z))) c(u, z * dn + i) = x;
    solutions = left_kernel(c);
  }
  std::vector<Matrix<K>> out;
  for (const auto& sol : solutions) {
    Matrix<K> t(f, dm, dn);
    for (std::size_t i = 0; i < dm; ++i) {
      SparseVec<K> row;
      for (std::size_t u = 0; u < unknowns.size(); ++u)
        if (!f.is_zero(sol[u])) axpy(f, row, sol[u], image(u, p.preimages[i]));
      for (const auto& [j, x] : row) t(i, j) = x;
    }
    out.push_back(std::move(t));
  }
  return out;
}

namespace {

template <class K>
std::optional<Matrix<K>> search_invertible(const K& f, const std::vector<Matrix<K>>& basis, std::uint64_t seed,
                                           std::size_t trials) {
  const std::size_t d = basis[0].rows();
  for (const auto& t : basis)
    if (rank(t) == d) return t;
  std::mt19937_64 rng(seed);
  auto combine = [&](const std::vector<typename K::Elem>& c) {
    Matrix<K> t(f, d, d);
    for (std::size_t k = 0; k < basis.size(); ++k)
      if (!f.is_zero(c[k])) t = t + scaled(basis[k], c[k]);
    return t;
  };
  if constexpr (std::is_same_v<K, FiniteField>) {
    // Exhaustive when small: complete over the base field.
    double total = 1;
    for (std::size_t k = 0; k < basis.size(); ++k) total *= f.order();
    if (total <= 65536) {
      std::vector<typename K::Elem> c(basis.size(), f.zero());
      const std::uint64_t q = f.order();
      for (std::uint64_t code = 1; code < static_cast<std::uint64_t>(total); ++code) {
        std::uint64_t x = code;
        for (std::size_t k = 0; k < basis.size(); ++k) {
          c[k] = static_cast<typename K::Elem>(x % q);
          x /= q;
        }
        auto t = combine(c);
        if (rank(t) == d) return t;
      }
      return std::nullopt;
    }
  } else {
    if (basis.size() <= 4) {
      std::vector<typename K::Elem> c(basis.size());
      std::size_t total = 1;
      for (std::size_t k = 0; k < basis.size(); ++k) total *= 5;
      for (std::size_t code = 1; code < total; ++code) {
        std::size_t x = code;
        for (std::size_t k = 0; k < basis.size(); ++k) {
          c[k] = f.from_int(static_cast<long>(x % 5) - 2);
          x /= 5;
        }
        auto t = combine(c);
        if (rank(t) == d) return t;
      }
    }
  }
  for (std::size_t trial = 0; trial < trials; ++trial) {
    std::vector<typename K::Elem> c;
    for (std::size_t k = 0; k < basis.size(); ++k) c.push_back(f.random(rng));
    auto t = combine(c);
    if (rank(t) == d) return t;
  }
  return std::nullopt;
}

}  // namespace

template <class K>
IsoResult<K> iso(const ModuleRep<K>& m, const ModuleRep<K>& n, std::uint64_t seed) {
  const K& f = m.field();
  IsoResult<K> r;
  if (m.algebra != n.algebra && m.algebra->dim() != n.algebra->dim())
    throw InputError("modules over different algebras");
  if (m.dimension_vector() != n.dimension_vector()) return r;
  unsigned base_degree = 1;
  if constexpr (std::is_same_v<K, FiniteField>) base_degree = f.degree();
  if (m.dim() == 0) {
    r.isomorphic = true;
    r.intertwiner = Matrix<K>(f, 0, 0);
    r.field_degree = base_degree;
    return r;
  }
  auto h = hom_space(m, n);
  if (h.empty() || h.size() != hom_space(n, m).size()) return r;
  if (auto t = search_invertible(f, h, seed, 64)) {
    r.isomorphic = true;
    r.intertwiner = std::move(t);
    r.field_degree = base_degree;
    return r;
  }
  if constexpr (std::is_same_v<K, FiniteField>) {
    if (h.size() <= 16) {
      for (unsigned degree = 2 * f.degree(); degree <= 4 * f.degree(); degree *= 2) {
        if (std::pow(double(f.characteristic()), degree) > double(1u << 30)) break;
        FiniteField big(f.characteristic(), degree);
        auto emb = big.embedding_from(f);
        std::vector<Matrix<FiniteField>> hb;
        for (const auto& t : h) {
          Matrix<FiniteField> u(big, t.rows(), t.cols());
          for (std::size_t i = 0; i < t.rows(); ++i)
            for (std::size_t j = 0; j < t.cols(); ++j) u(i, j) = emb[t(i, j)];
          hb.push_back(std::move(u));
        }
        if (search_invertible(big, hb, seed + degree, 64)) {
          r.isomorphic = true;
          r.field_degree = degree;
          return r;
        }
      }
    }
  }
  return r;
}

template <class K>
bool is_projective(const ModuleRep<K>& m) {
  return projective_cover(m).kernel.dim() == 0;
}

#define PERI_INSTANTIATE_RESOLUTION(K)                                                               \
  template ProjectivePresentation<K> projective_cover(const ModuleRep<K>&);                          \
  template void check_presentation(const ModuleRep<K>&, const ProjectivePresentation<K>&);           \
  template ResolutionLedger<K> resolve(const ModuleRep<K>&, std::size_t, bool);                      \
  template std::size_t ext_dim(AlgebraPtr<K>, std::size_t, std::size_t, std::size_t);                \
  template std::vector<std::vector<std::vector<std::size_t>>> ext_tables(AlgebraPtr<K>, std::size_t); \
  template std::vector<Matrix<K>> hom_space(const ModuleRep<K>&, const ModuleRep<K>&);               \
  template IsoResult<K> iso(const ModuleRep<K>&, const ModuleRep<K>&, std::uint64_t);                \
  template bool is_projective(const ModuleRep<K>&);

PERI_INSTANTIATE_RESOLUTION(Rationals)
PERI_INSTANTIATE_RESOLUTION(FiniteField)

}  // namespace peri
