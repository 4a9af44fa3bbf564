#include "peri/module.hpp"

#include <algorithm>
#include <random>

#include "module_detail.hpp"

namespace peri {

namespace detail {

template <class K>
SparseVec<K> apply(const K& f, const SparseVec<K>& x, const SparseMatrix<K>& m) {
  SparseVec<K> y;
  for (const auto& [i, c] : x) axpy(f, y, c, m.data[i]);
  return y;
}

template <class K>
HomogeneousBasis<K> HomogeneousBasis<K>::build(const K& f, const std::vector<std::uint32_t>& ambient_vertex,
                                               std::size_t vertices, const std::vector<Vec<K>>& vectors) {
  HomogeneousBasis<K> h;
  const std::size_t n = ambient_vertex.size();
  std::vector<Subspace<K>> parts(vertices, Subspace<K>(f, n));
  for (const auto& v : vectors) {
    std::vector<Vec<K>> split(vertices);
    for (std::size_t i = 0; i < n; ++i) {
      if (f.is_zero(v[i])) continue;
      auto& s = split[ambient_vertex[i]];
      if (s.empty()) s.assign(n, f.zero());
      s[i] = v[i];
    }
    for (std::size_t w = 0; w < vertices; ++w)
      if (!split[w].empty()) parts[w].insert(std::move(split[w]));
  }
  for (std::size_t w = 0; w < vertices; ++w) {
    // Keep pivots ascending inside each vertex block.
    std::vector<std::size_t> order(parts[w].dim());
    for (std::size_t k = 0; k < order.size(); ++k) order[k] = k;
    std::sort(order.begin(), order.end(),
              [&](std::size_t x, std::size_t y) { return parts[w].pivots()[x] < parts[w].pivots()[y]; });
    for (auto k : order) {
      h.rows.push_back(parts[w].basis()[k]);
      h.pivots.push_back(static_cast<std::uint32_t>(parts[w].pivots()[k]));
      h.vertex.push_back(static_cast<std::uint32_t>(w));
    }
  }
  return h;
}

template <class K>
Vec<K> HomogeneousBasis<K>::coordinates(const K& f, const Vec<K>& v) const {
  Vec<K> c(rows.size(), f.zero());
  for (std::size_t k = 0; k < rows.size(); ++k) c[k] = v[pivots[k]];
  return c;
}

template <class K>
ModuleRep<K> HomogeneousBasis<K>::module(const ModuleRep<K>& ambient) const {
  const K& f = ambient.field();
  ModuleRep<K> out{ambient.algebra, vertex, {}};
  const std::size_t d = rows.size();
  for (const auto& g : ambient.action) {
    auto m = SparseMatrix<K>::zero(d, d);
    for (std::size_t k = 0; k < d; ++k) {
      auto image = densify(f, apply(f, sparsify(f, std::span<const typename K::Elem>(rows[k])), g), ambient.dim());
      m.data[k] = sparsify(f, std::span<const typename K::Elem>(coordinates(f, image)));
    }
    out.action.push_back(std::move(m));
  }
  return out;
}

template <class K>
std::vector<Matrix<K>> basis_matrices(const Algebra<K>& a, const std::vector<Matrix<K>>& gens, bool left) {
  const K& f = a.field();
  const std::size_t d = gens.empty() ? 0 : gens[0].rows();
  std::vector<Matrix<K>> out(a.dim(), Matrix<K>(f, d, d));
  for (std::size_t v = 0; v < a.vertex_count(); ++v) {
    const auto& t = a.tree(v);
    std::vector<Matrix<K>> words;
    for (std::size_t w = 0; w < t.parent.size(); ++w) {
      if (t.parent[w] < 0) words.push_back(gens[v]);
      else if (left) words.push_back(gens[t.gen[w]] * words[t.parent[w]]);
      else words.push_back(words[t.parent[w]] * gens[t.gen[w]]);
    }
    for (std::size_t k = 0; k < t.basis.size(); ++k) {
      Matrix<K> m(f, d, d);
      for (const auto& [w, c] : t.inverse.data[k]) m = m + scaled(words[w], c);
      out[t.basis[k]] = std::move(m);
    }
  }
  return out;
}

}  // namespace detail

using detail::apply;

template <class K>
std::vector<std::size_t> ModuleRep<K>::dimension_vector() const {
  std::vector<std::size_t> d(algebra->vertex_count(), 0);
  for (auto v : vertex) ++d[v];
  return d;
}

template <class K>
ModuleRep<K> make_module(AlgebraPtr<K> a, std::vector<Matrix<K>> gens) {
  const K& f = a->field();
  const std::size_t nv = a->vertex_count();
  if (gens.size() != a->generators().size()) throw InputError("one action matrix per generator expected");
  const std::size_t d = gens.empty() ? 0 : gens[0].rows();
  for (std::size_t v = 0; v < nv; ++v)
    if (!sparse_equal(f, SparseMatrix<K>{1, a->dim(), {a->generators()[v]}},
                      SparseMatrix<K>{1, a->dim(), {a->unit(a->idempotent(v))}}))
      throw ConsistencyError("generators must start with the vertex idempotents");
  Matrix<K> sum(f, d, d);
  for (std::size_t v = 0; v < nv; ++v) {
    for (std::size_t w = 0; w < nv; ++w) {
      auto p = gens[v] * gens[w];
      if (!(v == w ? p == gens[v] : p.is_zero())) throw InputError("idempotents do not act orthogonally");
    }
    sum = sum + gens[v];
  }
  if (!(sum == Matrix<K>::identity(f, d))) throw InputError("idempotents do not sum to the identity");

  std::vector<std::uint32_t> vertex(d, 0);
  bool homogeneous = true;
  for (std::size_t i = 0; i < d && homogeneous; ++i) {
    std::size_t hits = 0;
    for (std::size_t v = 0; v < nv; ++v) {
      bool unit_row = true, zero_row = true;
      for (std::size_t j = 0; j < d; ++j) {
        const auto& x = gens[v](i, j);
        if (!f.is_zero(x)) zero_row = false;
        if (!(j == i ? f.is_one(x) : f.is_zero(x))) unit_row = false;
      }
      if (unit_row) {
        ++hits;
        vertex[i] = static_cast<std::uint32_t>(v);
      } else if (!zero_row) {
        homogeneous = false;
      }
    }
    if (hits != 1) homogeneous = false;
  }
  if (!homogeneous) {
    std::vector<Vec<K>> rows;
    for (std::size_t v = 0; v < nv; ++v) {
      auto r = rref(gens[v]);
      for (std::size_t k = 0; k < r.rank; ++k) {
        rows.push_back(r.reduced.row_vec(k));
        vertex[rows.size() - 1] = static_cast<std::uint32_t>(v);
      }
    }
    auto q = Matrix<K>::from_rows(f, d, rows);
    auto qi = inverse(q);
    if (!qi) throw ConsistencyError("vertex decomposition is not a basis");
    for (auto& g : gens) g = q * g * *qi;
  }
  ModuleRep<K> m{std::move(a), std::move(vertex), {}};
  for (const auto& g : gens) m.action.push_back(SparseMatrix<K>::from_dense(g));
  return m;
}

template <class K>
std::vector<SparseVec<K>> orbit(const ModuleRep<K>& m, const SparseVec<K>& x, std::size_t v) {
  const K& f = m.field();
  const auto& t = m.algebra->tree(v);
  std::vector<SparseVec<K>> words;
  words.reserve(t.parent.size());
  for (std::size_t w = 0; w < t.parent.size(); ++w) {
    if (t.parent[w] < 0) words.push_back(apply(f, x, m.action[v]));
    else words.push_back(apply(f, words[t.parent[w]], m.action[t.gen[w]]));
  }
  std::vector<SparseVec<K>> out(t.basis.size());
  for (std::size_t k = 0; k < t.basis.size(); ++k)
    for (const auto& [w, c] : t.inverse.data[k]) axpy(f, out[k], c, words[w]);
  return out;
}

template <class K>
SparseMatrix<K> basis_action(const ModuleRep<K>& m, std::size_t b) {
  const K& f = m.field();
  const auto v = m.algebra->left_vertex(b);
  const auto k = m.algebra->position(b);
  auto out = SparseMatrix<K>::zero(m.dim(), m.dim());
  for (std::size_t i = 0; i < m.dim(); ++i)
    if (m.vertex[i] == v) out.data[i] = orbit(m, {{static_cast<std::uint32_t>(i), f.one()}}, v)[k];
  return out;
}

template <class K>
void check_module(const ModuleRep<K>& m) {
  const K& f = m.field();
  const auto& a = *m.algebra;
  const std::size_t d = m.dim(), n = a.dim();
  if (m.action.size() != a.generators().size()) throw ConsistencyError("module has the wrong number of actions");
  // act[i][b] = e_i * b
  std::vector<std::vector<SparseVec<K>>> act(d, std::vector<SparseVec<K>>(n));
  for (std::size_t i = 0; i < d; ++i) {
    auto o = orbit(m, {{static_cast<std::uint32_t>(i), f.one()}}, m.vertex[i]);
    const auto& t = a.tree(m.vertex[i]);
    for (std::size_t k = 0; k < t.basis.size(); ++k) act[i][t.basis[k]] = std::move(o[k]);
  }
  auto times = [&](const SparseVec<K>& x, const SparseVec<K>& el) {
    SparseVec<K> y;
    for (const auto& [i, c] : x)
      for (const auto& [b, e] : el) axpy(f, y, f.mul(c, e), act[i][b]);
    return y;
  };
  for (std::size_t i = 0; i < d; ++i) {
    SparseVec<K> ei{{static_cast<std::uint32_t>(i), f.one()}};
    if (!sparse_equal(f, SparseMatrix<K>{1, d, {times(ei, a.one())}}, SparseMatrix<K>{1, d, {ei}}))
      throw ConsistencyError("unit does not act as the identity");
    for (std::size_t g = 0; g < a.generators().size(); ++g)
      if (!sparse_equal(f, SparseMatrix<K>{1, d, {times(ei, a.generators()[g])}},
                        SparseMatrix<K>{1, d, {m.action[g].data[i]}}))
        throw ConsistencyError("generator action disagrees with the algebra");
    for (std::size_t x = 0; x < n; ++x) {
      if (act[i][x].empty()) continue;
      for (std::size_t y = 0; y < n; ++y) {
        auto lhs = times(act[i][x], a.unit(y));
        auto rhs = times(ei, a.product(x, y));
        if (!sparse_equal(f, SparseMatrix<K>{1, d, {lhs}}, SparseMatrix<K>{1, d, {rhs}}))
          throw ConsistencyError("module axiom fails for " + a.label(x) + " * " + a.label(y));
      }
    }
  }
}

template <class K>
ModuleRep<K> simple(AlgebraPtr<K> a, std::size_t v) {
  if (v >= a->vertex_count()) throw InputError("vertex out of range");
  const K& f = a->field();
  ModuleRep<K> m{a, {static_cast<std::uint32_t>(v)}, {}};
  for (const auto& g : a->generators()) {
    auto s = SparseMatrix<K>::zero(1, 1);
    auto c = a->top_of(g)[v];
    if (!f.is_zero(c)) s.data[0].push_back({0, c});
    m.action.push_back(std::move(s));
  }
  return m;
}

template <class K>
ModuleRep<K> indec_projective(AlgebraPtr<K> a, std::size_t v) {
  if (v >= a->vertex_count()) throw InputError("vertex out of range");
  const auto& t = a->tree(v);
  const std::size_t d = t.basis.size();
  ModuleRep<K> m{a, {}, {}};
  for (auto b : t.basis) m.vertex.push_back(a->right_vertex(b));
  for (std::size_t g = 0; g < a->generators().size(); ++g) {
    auto s = SparseMatrix<K>::zero(d, d);
    for (std::size_t k = 0; k < d; ++k)
      for (const auto& [b, c] : a->right_action(g).data[t.basis[k]]) s.data[k].push_back({a->position(b), c});
    for (auto& row : s.data)
      std::sort(row.begin(), row.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    m.action.push_back(std::move(s));
  }
  return m;
}

template <class K>
ModuleRep<K> zero_module(AlgebraPtr<K> a) {
  ModuleRep<K> m{a, {}, {}};
  m.action.assign(a->generators().size(), SparseMatrix<K>::zero(0, 0));
  return m;
}

template <class K>
ModuleRep<K> direct_sum(const ModuleRep<K>& x, const ModuleRep<K>& y) {
  const std::size_t dx = x.dim(), d = dx + y.dim();
  ModuleRep<K> m{x.algebra, x.vertex, {}};
  m.vertex.insert(m.vertex.end(), y.vertex.begin(), y.vertex.end());
  for (std::size_t g = 0; g < x.action.size(); ++g) {
    auto s = SparseMatrix<K>::zero(d, d);
    for (std::size_t i = 0; i < dx; ++i) s.data[i] = x.action[g].data[i];
    for (std::size_t i = 0; i < y.dim(); ++i)
      for (const auto& [j, c] : y.action[g].data[i])
        s.data[dx + i].push_back({static_cast<std::uint32_t>(dx + j), c});
    m.action.push_back(std::move(s));
  }
  return m;
}

template <class K>
ModuleRep<K> submodule(const ModuleRep<K>& m, const std::vector<SparseVec<K>>& basis) {
  const K& f = m.field();
  std::vector<Vec<K>> dense;
  for (const auto& v : basis) dense.push_back(densify(f, v, m.dim()));
  auto h = detail::HomogeneousBasis<K>::build(f, m.vertex, m.algebra->vertex_count(), dense);
  return h.module(m);
}

template <class K>
Subspace<K> radical_of(const ModuleRep<K>& m) {
  const K& f = m.field();
  const std::size_t d = m.dim();
  Subspace<K> s(f, d);
  for (auto g : m.algebra->radical_generators())
    for (std::size_t i = 0; i < d; ++i) {
      const auto& row = m.action[g].data[i];
      if (row.empty()) continue;
      // Split by vertex so the subspace stays homogeneous.
      std::vector<Vec<K>> split(m.algebra->vertex_count());
      for (const auto& [j, c] : row) {
        auto& v = split[m.vertex[j]];
        if (v.empty()) v.assign(d, f.zero());
        v[j] = c;
      }
      for (auto& v : split)
        if (!v.empty()) s.insert(std::move(v));
    }
  return s;
}

#define PERI_INSTANTIATE_MODULE(K)                                                                \
  template struct ModuleRep<K>;                                                                   \
  template ModuleRep<K> make_module(AlgebraPtr<K>, std::vector<Matrix<K>>);                       \
  template std::vector<SparseVec<K>> orbit(const ModuleRep<K>&, const SparseVec<K>&, std::size_t); \
  template SparseMatrix<K> basis_action(const ModuleRep<K>&, std::size_t);                        \
  template void check_module(const ModuleRep<K>&);                                                \
  template ModuleRep<K> simple(AlgebraPtr<K>, std::size_t);                                       \
  template ModuleRep<K> indec_projective(AlgebraPtr<K>, std::size_t);                             \
  template ModuleRep<K> zero_module(AlgebraPtr<K>);                                               \
  template ModuleRep<K> direct_sum(const ModuleRep<K>&, const ModuleRep<K>&);                     \
  template ModuleRep<K> submodule(const ModuleRep<K>&, const std::vector<SparseVec<K>>&);         \
  template Subspace<K> radical_of(const ModuleRep<K>&);                                           \
  template struct detail::HomogeneousBasis<K>;                                                    \
  template SparseVec<K> detail::apply(const K&, const SparseVec<K>&, const SparseMatrix<K>&);     \
  template std::vector<Matrix<K>> detail::basis_matrices(const Algebra<K>&, const std::vector<Matrix<K>>&, bool);

PERI_INSTANTIATE_MODULE(Rationals)
PERI_INSTANTIATE_MODULE(FiniteField)

}  // namespace peri
