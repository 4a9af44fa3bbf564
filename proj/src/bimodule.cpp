#include <map>

#include "module_detail.hpp"
#include "peri/module.hpp"

namespace peri {

template <class K>
AlgebraPtr<K> envelope_of(const AlgebraPtr<K>& a) {
  return std::make_shared<const Algebra<K>>(enveloping(*a));
}

template <class K>
BimoduleRep<K> bimodule_from_actions(const AlgebraPtr<K>& a, AlgebraPtr<K> env, const std::vector<Matrix<K>>& left,
                                     const std::vector<Matrix<K>>& right) {
  if (!env) env = envelope_of(a);
  const K& f = a->field();
  const std::size_t n = a->dim();
  auto lb = detail::basis_matrices(*a, left, true);
  auto rb = detail::basis_matrices(*a, right, false);
  const std::size_t d = left.empty() ? 0 : left[0].rows();
  std::vector<Matrix<K>> acts;
  for (const auto& g : env->generators()) {
    Matrix<K> m(f, d, d);
    for (const auto& [xy, c] : g) m = m + scaled(lb[xy / n] * rb[xy % n], c);
    acts.push_back(std::move(m));
  }
  return {a, env, make_module(env, std::move(acts))};
}

template <class K>
BimoduleRep<K> algebra_as_bimodule(const AlgebraPtr<K>& a, AlgebraPtr<K> env) {
  return twist(identity_automorphism(a), std::move(env));
}

template <class K>
BimoduleRep<K> twist(const Automorphism<K>& sigma, AlgebraPtr<K> env) {
  const auto& a = sigma.source;
  const K& f = a->field();
  const std::size_t n = a->dim();
  std::vector<Matrix<K>> left, right;
  for (const auto& g : a->generators()) {
    Matrix<K> l(f, n, n), r(f, n, n);
    auto sg = sigma(g);
    for (std::size_t b = 0; b < n; ++b) {
      for (const auto& [i, c] : a->multiply(g, a->unit(b))) l(b, i) = c;
      for (const auto& [i, c] : a->multiply(a->unit(b), sg)) r(b, i) = c;
    }
    left.push_back(std::move(l));
    right.push_back(std::move(r));
  }
  return bimodule_from_actions(a, std::move(env), left, right);
}

template <class K>
std::pair<std::vector<Matrix<K>>, std::vector<Matrix<K>>> bimodule_actions(const BimoduleRep<K>& m) {
  const K& f = m.base->field();
  const auto& a = *m.base;
  const std::size_t n = a.dim(), d = m.module.dim();
  std::vector<Matrix<K>> cache(n * n);
  std::vector<bool> have(n * n, false);
  auto act = [&](std::size_t xy) -> const Matrix<K>& {
    if (!have[xy]) {
      cache[xy] = basis_action(m.module, xy).to_dense(f);
      have[xy] = true;
    }
    return cache[xy];
  };
  std::vector<Matrix<K>> left, right;
  for (const auto& g : a.generators()) {
    Matrix<K> l(f, d, d), r(f, d, d);
    for (const auto& [x, c] : g)
      for (std::size_t v = 0; v < a.vertex_count(); ++v) {
        const std::size_t e = a.idempotent(v);
        l = l + scaled(act(x * n + e), c);
        r = r + scaled(act(e * n + x), c);
      }
    left.push_back(std::move(l));
    right.push_back(std::move(r));
  }
  return {std::move(left), std::move(right)};
}

template <class K>
std::pair<std::vector<Matrix<K>>, std::vector<Matrix<K>>> detail::tensor_quotient(
    const K& f, std::size_t dm, std::size_t dn, const std::vector<std::pair<Matrix<K>, Matrix<K>>>& balance,
    const std::vector<Matrix<K>>& left, const std::vector<Matrix<K>>& right) {
  const std::size_t d = dm * dn;
  Subspace<K> rel(f, d);
  for (const auto& [p, q] : balance)
    for (std::size_t i = 0; i < dm; ++i)
      for (std::size_t j = 0; j < dn; ++j) {
        Vec<K> v(d, f.zero());
        for (std::size_t k = 0; k < dm; ++k)
          if (!f.is_zero(p(i, k))) f.add_to(v[k * dn + j], p(i, k));
        for (std::size_t k = 0; k < dn; ++k)
          if (!f.is_zero(q(j, k))) f.sub_mul_to(v[i * dn + k], f.one(), q(j, k));
        rel.insert(std::move(v));
      }
  std::vector<bool> pivot(d, false);
  for (auto p : rel.pivots()) pivot[p] = true;
  std::vector<std::size_t> free;
  for (std::size_t c = 0; c < d; ++c)
    if (!pivot[c]) free.push_back(c);
  const std::size_t q = free.size();
  // Quotient coordinates of a vector are its entries at non-pivot columns after reduction.
  auto project = [&](const Matrix<K>& x, const Matrix<K>& y) {
    Matrix<K> out(f, q, q);
    for (std::size_t r = 0; r < q; ++r) {
      const std::size_t i = free[r] / dn, j = free[r] % dn;
      Vec<K> v(d, f.zero());
      for (std::size_t a = 0; a < dm; ++a) {
        if (f.is_zero(x(i, a))) continue;
        for (std::size_t b = 0; b < dn; ++b)
          if (!f.is_zero(y(j, b))) f.add_mul_to(v[a * dn + b], x(i, a), y(j, b));
      }
      rel.reduce(v);
      for (std::size_t c = 0; c < q; ++c) out(r, c) = v[free[c]];
    }
    return out;
  };
  std::vector<Matrix<K>> lq, rq;
  const auto im = Matrix<K>::identity(f, dm), in = Matrix<K>::identity(f, dn);
  for (const auto& l : left) lq.push_back(project(l, in));
  for (const auto& r : right) rq.push_back(project(im, r));
  return {std::move(lq), std::move(rq)};
}

template <class K>
BimoduleRep<K> tensor(const BimoduleRep<K>& m, const BimoduleRep<K>& n) {
  auto [ml, mr] = bimodule_actions(m);
  auto [nl, nr] = bimodule_actions(n);
  std::vector<std::pair<Matrix<K>, Matrix<K>>> balance;
  for (std::size_t g = 0; g < mr.size(); ++g) balance.push_back({mr[g], nl[g]});
  auto [left, right] =
      detail::tensor_quotient(m.base->field(), m.module.dim(), n.module.dim(), balance, ml, nr);
  return bimodule_from_actions(m.base, m.envelope, left, right);
}

template <class K>
void happel_check(const AlgebraPtr<K>& a, const ResolutionLedger<K>& ledger) {
  const std::size_t nv = a->vertex_count();
  auto tables = ext_tables(a, ledger.multiplicity.size() - 1);
  for (std::size_t r = 0; r < ledger.multiplicity.size(); ++r)
    for (std::size_t i = 0; i < nv; ++i)
      for (std::size_t j = 0; j < nv; ++j)
        if (ledger.multiplicity[r][i * nv + j] != tables[r][i][j])
          throw ConsistencyError("bimodule resolution of " + a->name() + " disagrees with Ext at degree " +
                                 std::to_string(r) + ", vertices " + a->vertex_name(i) + ", " + a->vertex_name(j));
}

template <class K>
ResolutionLedger<K> bimodule_resolve(const AlgebraPtr<K>& a, std::size_t steps, AlgebraPtr<K> env) {
  auto m = algebra_as_bimodule(a, std::move(env));
  auto ledger = resolve(m.module, steps);
  happel_check(a, ledger);
  return ledger;
}

template <class K>
std::vector<std::size_t> hochschild_dims(const AlgebraPtr<K>& a, std::size_t up_to, AlgebraPtr<K> env) {
  if (!env) env = envelope_of(a);
  const K& f = a->field();
  const std::size_t n = a->dim(), nv = a->vertex_count();
  auto ledger = bimodule_resolve(a, up_to + 1, env);
  // Cochains on step r: for each summand at (i, j), a value in e_i A e_j.
  auto cochain_basis = [&](std::size_t r) {
    std::vector<std::pair<std::size_t, std::size_t>> out;  // (summand, algebra basis element)
    const auto& st = ledger.steps[r];
    for (std::size_t s = 0; s < st.summands.size(); ++s) {
      const std::size_t i = st.summands[s] / nv, j = st.summands[s] % nv;
      for (std::size_t b = 0; b < n; ++b)
        if (a->left_vertex(b) == i && a->right_vertex(b) == j) out.push_back({s, b});
    }
    return out;
  };
  std::vector<std::size_t> ranks;
  std::vector<std::size_t> dims;
  for (std::size_t r = 0; r <= up_to; ++r) {
    auto src = cochain_basis(r), dst = cochain_basis(r + 1);
    dims.push_back(src.size());
    const auto& st = ledger.steps[r];
    const auto& next = ledger.steps[r + 1];
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> dst_index;
    for (std::size_t k = 0; k < dst.size(); ++k) dst_index[dst[k]] = k;
    Matrix<K> delta(f, src.size(), dst.size());
    for (std::size_t t = 0; t < next.summands.size(); ++t) {
      // Image in P^r of the top of summand t of P^{r+1}.
      auto z = st.inclusion.row(next.top[t]);
      for (std::size_t k = 0; k < src.size(); ++k) {
        const auto [s, c] = src[k];
        const auto& tree = env->tree(st.summands[s]);
        SparseVec<K> value;
        for (std::size_t j = 0; j < tree.basis.size(); ++j) {
          const auto& coeff = z[st.offsets[s] + j];
          if (f.is_zero(coeff)) continue;
          const std::size_t xy = tree.basis[j];
          axpy(f, value, coeff, a->multiply(a->multiply(a->unit(xy / n), a->unit(c)), a->unit(xy % n)));
        }
        for (const auto& [b, x] : value) {
          auto it = dst_index.find({t, b});
          if (it == dst_index.end()) throw ConsistencyError("Hochschild coboundary leaves its summand");
          delta(k, it->second) = x;
        }
      }
    }
    ranks.push_back(rank(delta));
  }
  std::vector<std::size_t> hh;
  for (std::size_t r = 0; r <= up_to; ++r) hh.push_back(dims[r] - ranks[r] - (r ? ranks[r - 1] : 0));
  return hh;
}

AlgebraPtr<FiniteField> extend_scalars(const Algebra<FiniteField>& a, const FiniteField& big) {
  auto emb = big.embedding_from(a.field());
  auto parts = a.parts();
  parts.field = big;
  auto lift = [&](SparseVec<FiniteField>& v) {
    for (auto& [i, x] : v) x = emb[x];
  };
  for (auto& x : parts.table) lift(x);
  for (auto& x : parts.generators) lift(x);
  for (auto& x : parts.radical_basis) lift(x);
  for (auto& x : parts.top) lift(x);
  return std::make_shared<const Algebra<FiniteField>>(std::move(parts));
}

ModuleRep<FiniteField> extend_scalars(const ModuleRep<FiniteField>& m, AlgebraPtr<FiniteField> big) {
  auto emb = big->field().embedding_from(m.field());
  ModuleRep<FiniteField> out{std::move(big), m.vertex, m.action};
  for (auto& g : out.action)
    for (auto& row : g.data)
      for (auto& [i, x] : row) x = emb[x];
  return out;
}

#define PERI_INSTANTIATE_BIMODULE(K)                                                                         \
  template AlgebraPtr<K> envelope_of(const AlgebraPtr<K>&);                                                  \
  template BimoduleRep<K> bimodule_from_actions(const AlgebraPtr<K>&, AlgebraPtr<K>, const std::vector<Matrix<K>>&, \
                                                const std::vector<Matrix<K>>&);                              \
  template BimoduleRep<K> algebra_as_bimodule(const AlgebraPtr<K>&, AlgebraPtr<K>);                          \
  template BimoduleRep<K> twist(const Automorphism<K>&, AlgebraPtr<K>);                                      \
  template std::pair<std::vector<Matrix<K>>, std::vector<Matrix<K>>> bimodule_actions(const BimoduleRep<K>&); \
  template BimoduleRep<K> tensor(const BimoduleRep<K>&, const BimoduleRep<K>&);                              \
  template std::pair<std::vector<Matrix<K>>, std::vector<Matrix<K>>> detail::tensor_quotient(                \
      const K&, std::size_t, std::size_t, const std::vector<std::pair<Matrix<K>, Matrix<K>>>&,               \
      const std::vector<Matrix<K>>&, const std::vector<Matrix<K>>&);                                         \
  template void happel_check(const AlgebraPtr<K>&, const ResolutionLedger<K>&);                              \
  template ResolutionLedger<K> bimodule_resolve(const AlgebraPtr<K>&, std::size_t, AlgebraPtr<K>);           \
  template std::vector<std::size_t> hochschild_dims(const AlgebraPtr<K>&, std::size_t, AlgebraPtr<K>);

PERI_INSTANTIATE_BIMODULE(Rationals)
PERI_INSTANTIATE_BIMODULE(FiniteField)

}  // namespace peri
