#include "peri/graded.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <type_traits>
#include <tuple>

#include "module_detail.hpp"

namespace peri {

namespace {

template <class K>
Vec<K> dense(const Algebra<K>& a, const SparseVec<K>& x) {
  return densify(a.field(), x, a.dim());
}

/// Basis of U intersected with W.
template <class K>
std::vector<Vec<K>> intersect(const K& f, const Subspace<K>& u, const Subspace<K>& w) {
  const std::size_t n = u.ambient();
  if (u.dim() == 0 || w.dim() == 0) return {};
  std::vector<Vec<K>> rows(u.basis());
  rows.insert(rows.end(), w.basis().begin(), w.basis().end());
  auto ker = left_kernel(Matrix<K>::from_rows(f, n, rows));
  std::vector<Vec<K>> out;
  for (const auto& c : ker) {
    Vec<K> v(n, f.zero());
    for (std::size_t i = 0; i < u.dim(); ++i)
      if (!f.is_zero(c[i]))
        for (std::size_t j = 0; j < n; ++j) f.add_mul_to(v[j], c[i], u.basis()[i][j]);
    out.push_back(std::move(v));
  }
  return out;
}

template <class K>
Subspace<K> radical_space(const Algebra<K>& a) {
  Subspace<K> j(a.field(), a.dim());
  for (const auto& r : a.radical_basis()) j.insert(dense(a, r));
  return j;
}

/// Generators for a constructed algebra: derive_generators, plus a complement
/// of span(idempotents) + J when the algebra is not basic, so that the
/// spanning trees reach every e_vA.
template <class K>
void finish_generators(typename Algebra<K>::Parts& p) {
  derive_generators<K>(p);
  if (!p.top.empty()) return;
  const K& f = p.field;
  const std::size_t n = p.labels.size();
  Subspace<K> span(f, n);
  for (auto e : p.idempotents) span.insert(densify(f, SparseVec<K>{{e, f.one()}}, n));
  for (const auto& r : p.radical_basis) span.insert(densify(f, r, n));
  for (std::size_t b = 0; b < n; ++b) {
    SparseVec<K> x{{static_cast<std::uint32_t>(b), f.one()}};
    if (span.insert(densify(f, x, n))) {
      p.generators.push_back(x);
      p.generator_names.push_back(p.labels[b]);
    }
  }
}

}  // namespace

// ---------------------------------------------------------------------------
// Gradings

template <class K>
Grading<K> grading_by_arrows(AlgebraPtr<K> a, FiniteGroup g, const std::vector<std::size_t>& arrow_degree) {
  if (!a->monomial()) throw InputError("grading by arrow degrees needs a monomial basis");
  Grading<K> gr{a, std::move(g), {}, std::nullopt};
  for (const auto& p : a->paths()) {
    std::size_t d = gr.group.identity();
    for (auto arrow : p.arrows) {
      if (arrow >= arrow_degree.size()) throw InputError("missing arrow degree");
      d = gr.group.mul(d, arrow_degree[arrow]);
    }
    gr.degree.push_back(static_cast<std::uint32_t>(d));
  }
  check_grading(gr);
  return gr;
}

template <class K>
Grading<K> trivial_grading(AlgebraPtr<K> a, FiniteGroup g) {
  std::vector<std::uint32_t> deg(a->dim(), 0);
  Grading<K> gr{std::move(a), std::move(g), std::move(deg), std::nullopt};
  return gr;
}

template <class K>
Grading<K> grading_by_generators(AlgebraPtr<K> a, FiniteGroup g,
                                 const std::vector<std::pair<SparseVec<K>, std::size_t>>& generators) {
  const K& f = a->field();
  const std::size_t n = a->dim(), nv = a->vertex_count();
  // Homogeneous components split by vertex pair: key (degree, i, j).
  using Key = std::tuple<std::size_t, std::size_t, std::size_t>;
  std::map<Key, Subspace<K>> pieces;
  std::vector<std::pair<SparseVec<K>, std::size_t>> queue;
  auto add = [&](const SparseVec<K>& x, std::size_t d) {
    std::map<std::pair<std::size_t, std::size_t>, SparseVec<K>> split;
    for (const auto& [b, c] : x) split[{a->left_vertex(b), a->right_vertex(b)}].push_back({b, c});
    for (auto& [ij, y] : split) {
      auto it = pieces.try_emplace({d, ij.first, ij.second}, f, n).first;
      if (it->second.insert(dense(*a, y))) queue.push_back({std::move(y), d});
    }
  };
  for (std::size_t v = 0; v < nv; ++v) add(a->unit(a->idempotent(v)), g.identity());
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const auto [w, d] = queue[head];
    for (const auto& [x, dx] : generators) {
      auto y = a->multiply(w, x);
      if (!y.empty()) add(y, g.mul(d, dx));
    }
  }
  std::size_t total = 0;
  Subspace<K> all(f, n);
  for (const auto& [k, s] : pieces) {
    total += s.dim();
    for (const auto& b : s.basis()) all.insert(b);
  }
  if (all.dim() < n) throw InputError("graded generators do not generate " + a->name());
  if (total > n) throw InputError("grading is not compatible with the relations of " + a->name());

  // Already homogeneous: keep the basis.
  std::vector<std::uint32_t> degree(n, 0);
  bool homogeneous = true;
  for (std::size_t b = 0; b < n && homogeneous; ++b) {
    homogeneous = false;
    for (const auto& [k, s] : pieces)
      if (s.contains(dense(*a, a->unit(b)))) {
        degree[b] = static_cast<std::uint32_t>(std::get<0>(k));
        homogeneous = true;
        break;
      }
  }
  if (homogeneous) {
    Grading<K> gr{a, std::move(g), std::move(degree), std::nullopt};
    check_grading(gr);
    return gr;
  }

  // New basis: idempotents, then per piece a basis of its part in J followed
  // by a complement.
  auto jac = radical_space(*a);
  std::vector<Vec<K>> rows;
  std::vector<std::uint32_t> deg, lv, rv;
  for (std::size_t v = 0; v < nv; ++v) {
    rows.push_back(dense(*a, a->unit(a->idempotent(v))));
    deg.push_back(0);
    lv.push_back(static_cast<std::uint32_t>(v));
    rv.push_back(static_cast<std::uint32_t>(v));
  }
  for (const auto& [k, s] : pieces) {
    const auto [d, i, j] = k;
    Subspace<K> chosen(f, n);
    if (d == g.identity() && i == j) chosen.insert(rows[i]);
    std::vector<Vec<K>> candidates = intersect(f, s, jac);
    candidates.insert(candidates.end(), s.basis().begin(), s.basis().end());
    for (auto& c : candidates)
      if (chosen.insert(c)) {
        rows.push_back(c);
        deg.push_back(static_cast<std::uint32_t>(d));
        lv.push_back(static_cast<std::uint32_t>(i));
        rv.push_back(static_cast<std::uint32_t>(j));
      }
  }
  auto p = Matrix<K>::from_rows(f, n, rows);
  auto pinv = inverse(p);
  if (!pinv) throw ConsistencyError("homogeneous basis is not a basis");
  auto to_new = [&](const SparseVec<K>& x) { return sparsify<K>(f, dense(*a, x) * *pinv); };
  auto from_new = [&](std::size_t k) { return sparsify<K>(f, rows[k]); };

  const auto& old = a->parts();
  typename Algebra<K>::Parts q;
  q.field = f;
  q.name = a->name();
  q.vertex_names = old.vertex_names;
  for (std::size_t k = 0; k < n; ++k) {
    auto x = from_new(k);
    q.labels.push_back(x.size() == 1 && f.is_one(x[0].second) ? a->label(x[0].first) : "(" + a->str(x) + ")");
  }
  q.left_vertex = lv;
  q.right_vertex = rv;
  for (std::size_t v = 0; v < nv; ++v) q.idempotents.push_back(static_cast<std::uint32_t>(v));
  q.table.resize(n * n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) q.table[x * n + y] = to_new(a->multiply(from_new(x), from_new(y)));
  for (const auto& gen : old.generators) q.generators.push_back(to_new(gen));
  q.generator_names = old.generator_names;
  q.radical_generators = old.radical_generators;
  for (const auto& r : old.radical_basis) q.radical_basis.push_back(to_new(r));
  if (!old.top.empty())
    for (std::size_t k = 0; k < n; ++k) {
      Vec<K> t(nv, f.zero());
      for (const auto& [b, c] : from_new(k))
        for (const auto& [v, l] : old.top[b]) f.add_mul_to(t[v], c, l);
      q.top.push_back(sparsify<K>(f, t));
    }
  q.presentation = old.presentation;
  q.loewy_length = a->loewy_length();
  auto b = std::make_shared<const Algebra<K>>(std::move(q));
  std::vector<SparseVec<K>> images;
  for (const auto& gen : old.generators) images.push_back(to_new(gen));
  auto map = check_algebra_map<K>(a, b, images, true);
  Grading<K> gr{b, std::move(g), std::move(deg), std::move(map)};
  check_grading(gr);
  return gr;
}

template <class K>
Grading<K> grading_from_spec(AlgebraPtr<K> a, const GradingSpec& spec) {
  if (!a->presentation()) throw InputError("grading needs a presentation");
  const auto& quiver = a->presentation()->quiver;
  if (spec.by_arrows()) {
    std::vector<std::size_t> deg(quiver.arrows.size(), spec.group.identity());
    for (const auto& [arrow, d] : spec.arrow_degrees) deg[arrow] = d;
    if (a->monomial()) return grading_by_arrows(a, spec.group, deg);
    std::vector<std::pair<SparseVec<K>, std::size_t>> gens;
    for (std::size_t arrow = 0; arrow < deg.size(); ++arrow)
      gens.push_back({a->generators()[a->vertex_count() + arrow], deg[arrow]});
    return grading_by_generators(a, spec.group, gens);
  }
  std::vector<std::pair<SparseVec<K>, std::size_t>> gens;
  for (const auto& [arrow, d] : spec.arrow_degrees) gens.push_back({a->generators()[a->vertex_count() + arrow], d});
  for (const auto& [expr, d] : spec.generator_degrees) gens.push_back({combination_element(*a, expr), d});
  return grading_by_generators(a, spec.group, gens);
}

template <class K>
void check_grading(const Grading<K>& gr) {
  const auto& a = *gr.algebra;
  const std::size_t n = a.dim();
  if (gr.degree.size() != n) throw ConsistencyError("grading has the wrong size");
  for (std::size_t v = 0; v < a.vertex_count(); ++v)
    if (gr.degree[a.idempotent(v)] != gr.group.identity())
      throw ConsistencyError("idempotent " + a.vertex_name(v) + " is not in degree e");
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      const auto d = gr.group.mul(gr.degree[x], gr.degree[y]);
      for (const auto& [z, c] : a.product(x, y))
        if (gr.degree[z] != d)
          throw ConsistencyError("product " + a.label(x) + " * " + a.label(y) + " leaves degree " +
                                 gr.group.name(d));
    }
}

template <class K>
std::vector<SparseVec<K>> graded_radical(const Grading<K>& gr) {
  const auto& a = *gr.algebra;
  const K& f = a.field();
  const std::size_t n = a.dim();
  auto jac = radical_space(a);
  std::map<std::tuple<std::size_t, std::size_t, std::size_t>, Subspace<K>> pieces;
  for (std::size_t b = 0; b < n; ++b)
    pieces.try_emplace({gr.degree[b], a.left_vertex(b), a.right_vertex(b)}, f, n)
        .first->second.insert(dense(a, a.unit(b)));
  std::vector<SparseVec<K>> out;
  for (const auto& [k, s] : pieces)
    for (const auto& v : intersect(f, s, jac)) out.push_back(sparsify<K>(f, v));
  return out;
}

template <class K>
bool is_radical_grading(const Grading<K>& gr) {
  return graded_radical(gr).size() == radical_space(*gr.algebra).dim();
}

template <class K>
bool degree_preserving(const Grading<K>& gr, const Automorphism<K>& sigma) {
  const auto& a = *gr.algebra;
  for (std::size_t b = 0; b < a.dim(); ++b)
    for (std::size_t c = 0; c < a.dim(); ++c)
      if (!a.field().is_zero(sigma.matrix(b, c)) && gr.degree[c] != gr.degree[b]) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Smash products and skew group algebras

template <class K>
Smash<K> smash(const Grading<K>& gr) {
  const auto& a = *gr.algebra;
  const K& f = a.field();
  const auto& g = gr.group;
  const std::size_t n = a.dim(), m = g.order(), nv = a.vertex_count(), nb = n * m;
  auto idx = [&](std::size_t x, std::size_t h) { return static_cast<std::uint32_t>(x * m + h); };
  typename Algebra<K>::Parts p;
  p.field = f;
  p.name = a.name() + "#" + g.label();
  for (std::size_t i = 0; i < nv; ++i)
    for (std::size_t h = 0; h < m; ++h) p.vertex_names.push_back(a.vertex_name(i) + "p" + g.name(h));
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t h = 0; h < m; ++h) {
      p.labels.push_back(a.label(x) + "p" + g.name(h));
      p.left_vertex.push_back(static_cast<std::uint32_t>(a.left_vertex(x) * m + g.mul(gr.degree[x], h)));
      p.right_vertex.push_back(static_cast<std::uint32_t>(a.right_vertex(x) * m + h));
    }
  for (std::size_t i = 0; i < nv; ++i)
    for (std::size_t h = 0; h < m; ++h) p.idempotents.push_back(idx(a.idempotent(i), h));
  p.table.resize(nb * nb);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t gx = 0; gx < m; ++gx)
      for (std::size_t y = 0; y < n; ++y)
        for (std::size_t h = 0; h < m; ++h) {
          if (gr.degree[y] != g.mul(gx, g.inv(h))) continue;
          auto& out = p.table[idx(x, gx) * nb + idx(y, h)];
          for (const auto& [z, c] : a.product(x, y)) out.push_back({idx(z, h), c});
        }
  for (const auto& r : graded_radical(gr))
    for (std::size_t h = 0; h < m; ++h) {
      SparseVec<K> x;
      for (const auto& [k, c] : r) x.push_back({idx(k, h), c});
      p.radical_basis.push_back(std::move(x));
    }
  finish_generators<K>(p);
  auto b = std::make_shared<const Algebra<K>>(std::move(p));

  auto lift = [&](const SparseVec<K>& x) {
    SparseVec<K> out;
    for (const auto& [k, c] : x)
      for (std::size_t h = 0; h < m; ++h) out.push_back({idx(k, h), c});
    return out;
  };
  std::vector<SparseVec<K>> images;
  for (const auto& gen : a.generators()) images.push_back(lift(gen));
  Smash<K> s{gr, b, check_algebra_map<K>(gr.algebra, b, images, false), {}};
  for (std::size_t x = 0; x < m; ++x) {
    std::vector<SparseVec<K>> act;
    for (const auto& gen : b->generators()) {
      SparseVec<K> y;
      for (const auto& [k, c] : gen) y.push_back({idx(k / m, g.mul(k % m, x)), c});
      std::sort(y.begin(), y.end(), [](const auto& u, const auto& v) { return u.first < v.first; });
      act.push_back(std::move(y));
    }
    s.action.push_back(check_automorphism<K>(b, std::move(act)));
  }
  return s;
}

template <class K>
void check_smash(const Smash<K>& s) {
  const auto& b = *s.algebra;
  const K& f = b.field();
  const auto& g = s.grading.group;
  const std::size_t nb = b.dim(), m = g.order();
  if (!(s.action[g.identity()].matrix == Matrix<K>::identity(f, nb)))
    throw ConsistencyError("identity of " + g.label() + " acts nontrivially");
  for (std::size_t x = 0; x < m; ++x)
    for (std::size_t y = 0; y < m; ++y)
      if (!(s.action[x].matrix * s.action[y].matrix == s.action[g.mul(x, y)].matrix))
        throw ConsistencyError("group action on " + b.name() + " is not a right action");
  Matrix<K> stacked(f, nb, nb * m);
  for (std::size_t x = 0; x < m; ++x)
    for (std::size_t i = 0; i < nb; ++i)
      for (std::size_t j = 0; j < nb; ++j)
        stacked(i, x * nb + j) = f.sub(s.action[x].matrix(i, j), i == j ? f.one() : f.zero());
  auto fixed = left_kernel(stacked);
  auto image = Subspace<K>::span(f, nb, fixed);
  for (std::size_t k = 0; k < s.embedding.matrix.rows(); ++k)
    if (!image.contains(s.embedding.matrix.row_vec(k)))
      throw ConsistencyError("embedded element is not invariant");
  if (fixed.size() != s.grading.algebra->dim() || rank(s.embedding.matrix) != fixed.size())
    throw ConsistencyError("invariants of " + b.name() + " differ from the embedded algebra");
}

template <class K>
AlgebraPtr<K> skew_group_algebra(const AlgebraPtr<K>& bp, const FiniteGroup& g,
                                 const std::vector<Automorphism<K>>& action) {
  const auto& b = *bp;
  const K& f = b.field();
  const std::size_t n = b.dim(), m = g.order(), nv = b.vertex_count(), ns = n * m;
  if (action.size() != m) throw InputError("one automorphism per group element required");
  if (f.characteristic() != 0 && m % f.characteristic() == 0)
    throw InputError("skew group algebra radical needs |G| invertible in the field");
  // perm[x][w]: e_w^x = e_{perm[x][w]}.
  std::vector<std::vector<std::uint32_t>> perm(m, std::vector<std::uint32_t>(nv));
  for (std::size_t x = 0; x < m; ++x)
    for (std::size_t w = 0; w < nv; ++w) {
      auto img = action[x](b.unit(b.idempotent(w)));
      bool found = false;
      for (std::size_t u = 0; u < nv && !found; ++u)
        if (img == b.unit(b.idempotent(u))) {
          perm[x][w] = static_cast<std::uint32_t>(u);
          found = true;
        }
      if (!found) throw InputError("group action does not permute the vertex idempotents");
    }
  auto idx = [&](std::size_t x, std::size_t h) { return static_cast<std::uint32_t>(x * m + h); };
  typename Algebra<K>::Parts p;
  p.field = f;
  p.name = b.name() + "*" + g.label();
  p.vertex_names = b.vertex_names();
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t h = 0; h < m; ++h) {
      p.labels.push_back(b.label(x) + "." + g.name(h));
      p.left_vertex.push_back(b.left_vertex(x));
      p.right_vertex.push_back(perm[h][b.right_vertex(x)]);
    }
  for (std::size_t v = 0; v < nv; ++v) p.idempotents.push_back(idx(b.idempotent(v), g.identity()));
  p.table.resize(ns * ns);
  for (std::size_t y = 0; y < n; ++y)
    for (std::size_t gx = 0; gx < m; ++gx) {
      auto moved = action[g.inv(gx)](b.unit(y));
      for (std::size_t x = 0; x < n; ++x) {
        auto prod = b.multiply(b.unit(x), moved);
        for (std::size_t h = 0; h < m; ++h) {
          auto& out = p.table[idx(x, gx) * ns + idx(y, h)];
          for (const auto& [z, c] : prod) out.push_back({idx(z, g.mul(gx, h)), c});
        }
      }
    }
  for (const auto& r : b.radical_basis())
    for (std::size_t h = 0; h < m; ++h) {
      SparseVec<K> x;
      for (const auto& [k, c] : r) x.push_back({idx(k, h), c});
      p.radical_basis.push_back(std::move(x));
    }
  finish_generators<K>(p);
  return std::make_shared<const Algebra<K>>(std::move(p));
}

template <class K>
std::vector<std::size_t> block_profile(const Algebra<K>& a) {
  const K& f = a.field();
  const std::size_t n = a.dim(), nv = a.vertex_count();
  std::vector<std::size_t> parent(nv);
  for (std::size_t v = 0; v < nv; ++v) parent[v] = v;
  auto find = [&](std::size_t v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (std::size_t v = 0; v < nv; ++v)
    for (std::size_t w = 0; w < nv; ++w) {
      std::size_t total = 0;
      for (std::size_t b = 0; b < n; ++b) total += a.left_vertex(b) == v && a.right_vertex(b) == w;
      Subspace<K> rad(f, n);
      for (const auto& r : a.radical_basis()) {
        SparseVec<K> part;
        for (const auto& [k, c] : r)
          if (a.left_vertex(k) == v && a.right_vertex(k) == w) part.push_back({k, c});
        if (!part.empty()) rad.insert(densify(f, part, n));
      }
      const std::size_t top = total - rad.dim();
      if (v == w && top != 1)
        throw InputError("vertex " + a.vertex_name(v) + " of " + a.name() + " is not primitive modulo the radical");
      if (v != w && top > 0) parent[find(v)] = find(w);
    }
  std::map<std::size_t, std::size_t> sizes;
  for (std::size_t v = 0; v < nv; ++v) ++sizes[find(v)];
  std::vector<std::size_t> out;
  for (const auto& [r, s] : sizes) out.push_back(s);
  std::sort(out.rbegin(), out.rend());
  return out;
}

// ---------------------------------------------------------------------------
// Graded modules

template <class K>
GradedModule<K> graded_simple(const Grading<K>& gr, std::size_t v, std::size_t d) {
  return {simple(gr.algebra, v), {static_cast<std::uint32_t>(d)}};
}

template <class K>
GradedModule<K> graded_projective(const Grading<K>& gr, std::size_t v, std::size_t d) {
  GradedModule<K> m{indec_projective(gr.algebra, v), {}};
  for (auto b : gr.algebra->tree(v).basis) m.degree.push_back(static_cast<std::uint32_t>(gr.group.mul(d, gr.degree[b])));
  return m;
}

template <class K>
GradedModule<K> shift(const GradedModule<K>& m, const FiniteGroup& g, std::size_t d) {
  GradedModule<K> out = m;
  for (auto& t : out.degree) t = static_cast<std::uint32_t>(g.mul(d, t));
  return out;
}

template <class K>
void check_graded(const Grading<K>& gr, const GradedModule<K>& m) {
  const auto& a = *gr.algebra;
  if (m.degree.size() != m.module.dim()) throw ConsistencyError("graded module has the wrong number of degrees");
  for (std::size_t b = 0; b < a.dim(); ++b) {
    auto act = basis_action(m.module, b);
    for (std::size_t i = 0; i < act.rows; ++i)
      for (const auto& [j, c] : act.data[i])
        if (m.degree[j] != gr.group.mul(m.degree[i], gr.degree[b]))
          throw ConsistencyError("module action by " + a.label(b) + " is not graded");
  }
}

template <class K>
ModuleRep<K> smash_module(const Smash<K>& s, const GradedModule<K>& m) {
  const auto& a = *s.grading.algebra;
  const auto& g = s.grading.group;
  const K& f = a.field();
  const std::size_t d = m.module.dim(), order = s.order();
  std::vector<SparseMatrix<K>> acts;
  for (std::size_t b = 0; b < a.dim(); ++b) acts.push_back(basis_action(m.module, b));
  std::vector<Matrix<K>> gens;
  for (const auto& gen : s.algebra->generators()) {
    Matrix<K> out(f, d, d);
    for (const auto& [k, c] : gen) {
      const std::size_t x = k / order, gx = k % order;
      for (std::size_t i = 0; i < d; ++i) {
        const std::size_t label = g.inv(m.degree[i]);
        if (s.grading.degree[x] != g.mul(label, g.inv(gx))) continue;
        for (const auto& [j, y] : acts[x].data[i]) f.add_mul_to(out(i, j), c, y);
      }
    }
    gens.push_back(std::move(out));
  }
  return make_module(s.algebra, std::move(gens));
}

// ---------------------------------------------------------------------------
// Graded bimodules and the functors F_x

namespace {

/// Left and right action matrices of every basis element of A.
template <class K>
std::pair<std::vector<Matrix<K>>, std::vector<Matrix<K>>> side_actions(const BimoduleRep<K>& m) {
  const auto& a = *m.base;
  const K& f = a.field();
  const std::size_t n = a.dim(), d = m.module.dim();
  std::vector<Matrix<K>> left, right;
  for (std::size_t x = 0; x < n; ++x) {
    Matrix<K> l(f, d, d), r(f, d, d);
    for (std::size_t v = 0; v < a.vertex_count(); ++v) {
      const std::size_t e = a.idempotent(v);
      l = l + basis_action(m.module, x * n + e).to_dense(f);
      r = r + basis_action(m.module, e * n + x).to_dense(f);
    }
    left.push_back(std::move(l));
    right.push_back(std::move(r));
  }
  return {std::move(left), std::move(right)};
}

}  // namespace

template <class K>
GradedBimodule<K> graded_twist(const Grading<K>& gr, const Automorphism<K>& sigma, AlgebraPtr<K> env) {
  if (!degree_preserving(gr, sigma)) throw InputError("automorphism does not preserve degrees");
  return {twist(sigma, std::move(env)), gr.degree};
}

template <class K>
GradedBimodule<K> graded_algebra_bimodule(const Grading<K>& gr, AlgebraPtr<K> env) {
  return graded_twist(gr, identity_automorphism(gr.algebra), std::move(env));
}

template <class K>
GradedBimodule<K> graded_projective_bimodule(const Grading<K>& gr, std::size_t i, std::size_t j, std::size_t d,
                                             AlgebraPtr<K> env) {
  const auto& a = gr.algebra;
  if (!env) env = envelope_of(a);
  const std::size_t n = a->dim(), nv = a->vertex_count();
  if (i >= nv || j >= nv) throw InputError("vertex out of range");
  GradedBimodule<K> m{{a, env, indec_projective(env, i * nv + j)}, {}};
  // Basis element x*n + y of the envelope is x (x) y.
  for (auto xy : env->tree(i * nv + j).basis)
    m.degree.push_back(
        static_cast<std::uint32_t>(gr.group.mul(gr.group.mul(gr.degree[xy / n], d), gr.degree[xy % n])));
  return m;
}

template <class K>
GradedBimodule<K> shift(const GradedBimodule<K>& m, const FiniteGroup& g, std::size_t d) {
  if (!g.is_central(d)) throw InputError("bimodule shift needs a central element");
  GradedBimodule<K> out = m;
  for (auto& t : out.degree) t = static_cast<std::uint32_t>(g.mul(d, t));
  return out;
}

template <class K>
void check_graded(const Grading<K>& gr, const GradedBimodule<K>& m) {
  const auto& a = *gr.algebra;
  const std::size_t d = m.bimodule.module.dim();
  if (m.degree.size() != d) throw ConsistencyError("graded bimodule has the wrong number of degrees");
  auto [left, right] = side_actions(m.bimodule);
  for (std::size_t x = 0; x < a.dim(); ++x)
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) {
        if (!a.field().is_zero(left[x](i, j)) && m.degree[j] != gr.group.mul(gr.degree[x], m.degree[i]))
          throw ConsistencyError("left action by " + a.label(x) + " is not graded");
        if (!a.field().is_zero(right[x](i, j)) && m.degree[j] != gr.group.mul(m.degree[i], gr.degree[x]))
          throw ConsistencyError("right action by " + a.label(x) + " is not graded");
      }
}

template <class K>
BimoduleRep<K> lift_bimodule(const Smash<K>& s, const GradedBimodule<K>& m, std::size_t x, AlgebraPtr<K> env) {
  const auto& g = s.grading.group;
  const auto& deg = s.grading.degree;
  const K& f = s.algebra->field();
  const std::size_t order = s.order(), d = m.bimodule.module.dim(), dim = d * order;
  if (x >= order) throw InputError("group element out of range");
  auto [la, ra] = side_actions(m.bimodule);
  std::vector<Matrix<K>> left, right;
  for (const auto& gen : s.algebra->generators()) {
    Matrix<K> l(f, dim, dim), r(f, dim, dim);
    for (const auto& [k, c] : gen) {
      const std::size_t a = k / order, ga = k % order;
      for (std::size_t i = 0; i < d; ++i)
        for (std::size_t h = 0; h < order; ++h) {
          // a p_ga . m_i p_h = a m_i p_h when ga = deg(m_i) h x.
          if (ga == g.mul(g.mul(m.degree[i], h), x))
            for (std::size_t j = 0; j < d; ++j)
              if (!f.is_zero(la[a](i, j))) f.add_mul_to(l(i * order + h, j * order + h), c, la[a](i, j));
          // (m_i p_h)(a p_ga) = m_i a_{h ga^-1} p_ga.
          if (deg[a] == g.mul(h, g.inv(ga)))
            for (std::size_t j = 0; j < d; ++j)
              if (!f.is_zero(ra[a](i, j))) f.add_mul_to(r(i * order + h, j * order + ga), c, ra[a](i, j));
        }
    }
    left.push_back(std::move(l));
    right.push_back(std::move(r));
  }
  return bimodule_from_actions(s.algebra, std::move(env), left, right);
}

template <class K>
BimoduleRep<K> twisted_smash(const Smash<K>& s, std::size_t x, AlgebraPtr<K> env) {
  return twist(s.action.at(x), std::move(env));
}

template <class K>
BimoduleRep<K> smash_tensor_square(const Smash<K>& s, AlgebraPtr<K> env) {
  const auto& b = *s.algebra;
  const K& f = b.field();
  const std::size_t nb = b.dim();
  auto mult = [&](const SparseVec<K>& y, bool on_left) {
    Matrix<K> out(f, nb, nb);
    for (std::size_t r = 0; r < nb; ++r)
      for (const auto& [c, v] : on_left ? b.multiply(y, b.unit(r)) : b.multiply(b.unit(r), y)) out(r, c) = v;
    return out;
  };
  std::vector<std::pair<Matrix<K>, Matrix<K>>> balance;
  for (const auto& gen : s.grading.algebra->generators()) {
    auto y = s.embedding(gen);
    balance.push_back({mult(y, false), mult(y, true)});
  }
  std::vector<Matrix<K>> left, right;
  for (const auto& gen : b.generators()) {
    left.push_back(mult(gen, true));
    right.push_back(mult(gen, false));
  }
  auto [lq, rq] = detail::tensor_quotient(f, nb, nb, balance, left, right);
  return bimodule_from_actions(s.algebra, std::move(env), lq, rq);
}

template <class K>
IsoResult<K> check_lemma22(const Smash<K>& s, AlgebraPtr<K> env) {
  if (!env) env = envelope_of(s.algebra);
  auto lhs = smash_tensor_square(s, env);
  auto rhs = twisted_smash(s, 0, env).module;
  for (std::size_t x = 1; x < s.order(); ++x) rhs = direct_sum(rhs, twisted_smash(s, x, env).module);
  return iso(lhs.module, rhs);
}

// ---------------------------------------------------------------------------

template <class K>
bool is_indecomposable(const ModuleRep<K>& m, std::uint64_t seed, std::size_t samples) {
  const K& f = m.field();
  const std::size_t d = m.dim();
  if (d == 0) return false;
  auto end = hom_space(m, m);
  std::mt19937_64 rng(seed);
  std::vector<Matrix<K>> tests = end;
  for (std::size_t s = 0; s < samples; ++s) {
    Matrix<K> t(f, d, d);
    for (const auto& e : end) t = t + scaled(e, f.random(rng, 8));
    tests.push_back(std::move(t));
  }
  auto power = [&](Matrix<K> base, std::uint64_t e) {
    auto out = Matrix<K>::identity(f, d);
    for (; e; e >>= 1, base = base * base)
      if (e & 1) out = out * base;
    return out;
  };
  const auto id = Matrix<K>::identity(f, d);
  for (const auto& t : tests) {
    typename K::Elem lambda = f.zero();
    const unsigned p = f.characteristic();
    if (p == 0 || d % p != 0) {
      for (std::size_t i = 0; i < d; ++i) f.add_to(lambda, t(i, i));
      lambda = f.mul(lambda, f.inv(f.from_int(static_cast<long long>(d))));
    } else if constexpr (std::is_same_v<K, FiniteField>) {
      // (lambda + N)^(q^s) = lambda once q^s >= d.
      std::uint64_t e = f.order();
      while (e < d) e *= f.order();
      auto q = power(t, e);
      if (!(q == scaled(id, q(0, 0)))) return false;
      lambda = q(0, 0);
    }
    if (!power(t - scaled(id, lambda), d).is_zero()) return false;
  }
  return true;
}

#define PERI_INSTANTIATE_GRADED(K)                                                                               \
  template struct Grading<K>;                                                                                    \
  template struct Smash<K>;                                                                                      \
  template Grading<K> grading_by_arrows(AlgebraPtr<K>, FiniteGroup, const std::vector<std::size_t>&);           \
  template Grading<K> grading_by_generators(AlgebraPtr<K>, FiniteGroup,                                          \
                                            const std::vector<std::pair<SparseVec<K>, std::size_t>>&);           \
  template Grading<K> trivial_grading(AlgebraPtr<K>, FiniteGroup);                                               \
  template Grading<K> grading_from_spec(AlgebraPtr<K>, const GradingSpec&);                                      \
  template void check_grading(const Grading<K>&);                                                                \
  template std::vector<SparseVec<K>> graded_radical(const Grading<K>&);                                          \
  template bool is_radical_grading(const Grading<K>&);                                                           \
  template bool degree_preserving(const Grading<K>&, const Automorphism<K>&);                                    \
  template Smash<K> smash(const Grading<K>&);                                                                    \
  template void check_smash(const Smash<K>&);                                                                    \
  template AlgebraPtr<K> skew_group_algebra(const AlgebraPtr<K>&, const FiniteGroup&,                            \
                                            const std::vector<Automorphism<K>>&);                                \
  template std::vector<std::size_t> block_profile(const Algebra<K>&);                                            \
  template GradedModule<K> graded_simple(const Grading<K>&, std::size_t, std::size_t);                           \
  template GradedModule<K> graded_projective(const Grading<K>&, std::size_t, std::size_t);                       \
  template GradedModule<K> shift(const GradedModule<K>&, const FiniteGroup&, std::size_t);                       \
  template void check_graded(const Grading<K>&, const GradedModule<K>&);                                         \
  template ModuleRep<K> smash_module(const Smash<K>&, const GradedModule<K>&);                                   \
  template GradedBimodule<K> graded_twist(const Grading<K>&, const Automorphism<K>&, AlgebraPtr<K>);             \
  template GradedBimodule<K> graded_algebra_bimodule(const Grading<K>&, AlgebraPtr<K>);                          \
  template GradedBimodule<K> graded_projective_bimodule(const Grading<K>&, std::size_t, std::size_t, std::size_t, \
                                                        AlgebraPtr<K>);                                          \
  template GradedBimodule<K> shift(const GradedBimodule<K>&, const FiniteGroup&, std::size_t);                   \
  template void check_graded(const Grading<K>&, const GradedBimodule<K>&);                                       \
  template BimoduleRep<K> lift_bimodule(const Smash<K>&, const GradedBimodule<K>&, std::size_t, AlgebraPtr<K>);  \
  template BimoduleRep<K> twisted_smash(const Smash<K>&, std::size_t, AlgebraPtr<K>);                            \
  template BimoduleRep<K> smash_tensor_square(const Smash<K>&, AlgebraPtr<K>);                                   \
  template IsoResult<K> check_lemma22(const Smash<K>&, AlgebraPtr<K>);                                           \
  template bool is_indecomposable(const ModuleRep<K>&, std::uint64_t, std::size_t);

PERI_INSTANTIATE_GRADED(Rationals)
PERI_INSTANTIATE_GRADED(FiniteField)

}  // namespace peri
