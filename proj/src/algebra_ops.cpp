#include <algorithm>
#include <deque>
#include <random>
#include <set>

#include "peri/algebra.hpp"

namespace peri {

namespace {

template <class K>
SparseVec<K> tensor(const K& f, const SparseVec<K>& x, const SparseVec<K>& y, std::size_t n) {
  SparseVec<K> out;
  for (const auto& [i, a] : x)
    for (const auto& [j, b] : y) out.push_back({static_cast<std::uint32_t>(i * n + j), f.mul(a, b)});
  return out;
}

// x with its semisimple part removed: x - sum top_v(x) e_v.
template <class K>
SparseVec<K> radical_part(const Algebra<K>& a, std::size_t b) {
  SparseVec<K> x = a.unit(b);
  for (const auto& [v, l] : a.top(b)) axpy(a.field(), x, a.field().neg(l), a.unit(a.idempotent(v)));
  return x;
}

}  // namespace

template <class K>
Algebra<K> opposite(const Algebra<K>& a) {
  auto p = a.parts();
  const std::size_t n = a.dim();
  p.name = a.name().empty() ? "" : a.name() + "^op";
  std::swap(p.left_vertex, p.right_vertex);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) p.table[i * n + j] = a.product(j, i);
  if (p.presentation) {
    for (auto& arrow : p.presentation->quiver.arrows) std::swap(arrow.source, arrow.target);
    for (auto& r : p.presentation->relations)
      for (auto& t : r.terms) std::reverse(t.path.arrows.begin(), t.path.arrows.end());
  }
  for (auto& m : p.paths) std::reverse(m.arrows.begin(), m.arrows.end());
  if (p.presentation)
    for (std::size_t b = 0; b < n; ++b) p.labels[b] = path_str(p.presentation->quiver, p.paths[b]);
  return Algebra<K>(std::move(p));
}

template <class K>
Algebra<K> enveloping(const Algebra<K>& a) {
  const K& f = a.field();
  const std::size_t n = a.dim(), nv = a.vertex_count();
  typename Algebra<K>::Parts p;
  p.field = f;
  p.name = (a.name().empty() ? "A" : a.name()) + "^e";
  for (std::size_t i = 0; i < nv; ++i)
    for (std::size_t j = 0; j < nv; ++j) p.vertex_names.push_back("(" + a.vertex_name(i) + "," + a.vertex_name(j) + ")");
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      p.labels.push_back(a.label(x) + "|" + a.label(y));
      p.left_vertex.push_back(static_cast<std::uint32_t>(a.right_vertex(x) * nv + a.left_vertex(y)));
      p.right_vertex.push_back(static_cast<std::uint32_t>(a.left_vertex(x) * nv + a.right_vertex(y)));
    }
  p.table.assign(n * n * n * n, {});
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t xp = 0; xp < n; ++xp) {
      const auto& l = a.product(xp, x);
      if (l.empty()) continue;
      for (std::size_t y = 0; y < n; ++y)
        for (std::size_t yp = 0; yp < n; ++yp) {
          const auto& r = a.product(y, yp);
          if (r.empty()) continue;
          p.table[(x * n + y) * n * n + xp * n + yp] = tensor(f, l, r, n);
        }
    }
  for (std::size_t i = 0; i < nv; ++i)
    for (std::size_t j = 0; j < nv; ++j) {
      auto e = static_cast<std::uint32_t>(a.idempotent(i) * n + a.idempotent(j));
      p.idempotents.push_back(e);
      p.generators.push_back({{e, f.one()}});
      p.generator_names.push_back(p.labels[e]);
    }
  const auto one = a.one();
  for (auto g : a.radical_generators()) {
    p.radical_generators.push_back(static_cast<std::uint32_t>(p.generators.size()));
    p.generators.push_back(tensor(f, a.generators()[g], one, n));
    p.generator_names.push_back(a.generator_name(g) + "|1");
  }
  for (auto g : a.radical_generators()) {
    p.radical_generators.push_back(static_cast<std::uint32_t>(p.generators.size()));
    p.generators.push_back(tensor(f, one, a.generators()[g], n));
    p.generator_names.push_back("1|" + a.generator_name(g));
  }
  p.top.assign(n * n, {});
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (const auto& [i, s] : a.top(x))
        for (const auto& [j, t] : a.top(y)) p.top[x * n + y].push_back({static_cast<std::uint32_t>(i * nv + j), f.mul(s, t)});
  std::vector<SparseVec<K>> rad(n);
  for (std::size_t b = 0; b < n; ++b) rad[b] = radical_part(a, b);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      if (a.top(x).size() && a.top(y).size()) {
        if (a.left_vertex(x) == a.right_vertex(x) && a.left_vertex(y) == a.right_vertex(y) &&
            a.idempotent(a.left_vertex(x)) == x && a.idempotent(a.left_vertex(y)) == y)
          continue;
        // x (x) y - top(x) (x) top(y)
        SparseVec<K> v = tensor(f, a.unit(x), a.unit(y), n);
        auto tx = a.unit(x), ty = a.unit(y);
        axpy(f, tx, f.neg(f.one()), rad[x]);
        axpy(f, ty, f.neg(f.one()), rad[y]);
        axpy(f, v, f.neg(f.one()), tensor(f, tx, ty, n));
        p.radical_basis.push_back(std::move(v));
      } else {
        p.radical_basis.push_back(tensor(f, a.unit(x), a.unit(y), n));
      }
    }
  p.loewy_length = 2 * a.loewy_length() - 1;
  return Algebra<K>(std::move(p));
}

template <class K>
Algebra<K> corner(const Algebra<K>& a, const std::vector<std::size_t>& vertices, std::string name) {
  const K& f = a.field();
  std::vector<std::int64_t> vmap(a.vertex_count(), -1);
  typename Algebra<K>::Parts p;
  p.field = f;
  p.name = std::move(name);
  for (auto v : vertices) {
    if (v >= a.vertex_count() || vmap[v] >= 0) throw InputError("corner: bad vertex list");
    vmap[v] = static_cast<std::int64_t>(p.vertex_names.size());
    p.vertex_names.push_back(a.vertex_name(v));
  }
  std::vector<std::int64_t> bmap(a.dim(), -1);
  std::vector<std::uint32_t> keep;
  for (std::size_t b = 0; b < a.dim(); ++b)
    if (vmap[a.left_vertex(b)] >= 0 && vmap[a.right_vertex(b)] >= 0) {
      bmap[b] = static_cast<std::int64_t>(keep.size());
      keep.push_back(static_cast<std::uint32_t>(b));
      p.labels.push_back(a.label(b));
      p.left_vertex.push_back(static_cast<std::uint32_t>(vmap[a.left_vertex(b)]));
      p.right_vertex.push_back(static_cast<std::uint32_t>(vmap[a.right_vertex(b)]));
    }
  auto restrict = [&](const SparseVec<K>& x) {
    SparseVec<K> out;
    for (const auto& [i, c] : x)
      if (bmap[i] >= 0) out.push_back({static_cast<std::uint32_t>(bmap[i]), c});
    return out;
  };
  const std::size_t n = keep.size();
  p.table.assign(n * n, {});
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) p.table[i * n + j] = restrict(a.product(keep[i], keep[j]));
  for (auto v : vertices) p.idempotents.push_back(static_cast<std::uint32_t>(bmap[a.idempotent(v)]));
  Subspace<K> span(f, n);
  for (const auto& r : a.radical_basis()) {
    auto x = restrict(r);
    if (!x.empty() && span.insert(densify(f, x, n))) p.radical_basis.push_back(std::move(x));
  }
  derive_generators<K>(p);
  return Algebra<K>(std::move(p));
}

// ---------------------------------------------------------------------------

template <class K>
SparseVec<K> AlgebraMap<K>::operator()(const SparseVec<K>& x) const {
  const K& f = source->field();
  Vec<K> d(source->dim(), f.zero());
  for (const auto& [i, c] : x) d[i] = c;
  auto y = d * matrix;
  return sparsify<K>(f, y);
}

template <class K>
AlgebraMap<K> check_algebra_map(AlgebraPtr<K> source, AlgebraPtr<K> target,
                                std::vector<SparseVec<K>> images, bool require_bijective) {
  const Algebra<K>& s = *source;
  const Algebra<K>& t = *target;
  const K& f = s.field();
  if (images.size() != s.generators().size()) throw InputError("algebra map: one image per generator required");
  if (s.presentation()) {
    const auto& pres = *s.presentation();
    for (const auto& r : pres.relations) {
      SparseVec<K> sum;
      for (const auto& term : r.terms) {
        SparseVec<K> x = t.one();
        for (auto arrow : term.path.arrows) x = t.multiply(x, images[s.vertex_count() + arrow]);
        axpy(f, sum, f.from_rational(term.coeff), x);
      }
      if (!sum.empty())
        throw InputError("not a homomorphism: relation " + combination_str(pres.quiver, r) + " is not killed");
    }
  }
  Matrix<K> m(f, s.dim(), t.dim());
  for (std::size_t v = 0; v < s.vertex_count(); ++v) {
    const auto& tree = s.tree(v);
    std::optional<std::size_t> gen_e;
    for (std::size_t g = 0; g < s.generators().size(); ++g)
      if (s.generators()[g] == s.unit(s.idempotent(v))) gen_e = g;
    if (!gen_e) throw ConsistencyError("vertex idempotent is not a generator");
    std::vector<SparseVec<K>> word(tree.parent.size());
    word[0] = images[*gen_e];
    for (std::size_t w = 1; w < word.size(); ++w) word[w] = t.multiply(word[tree.parent[w]], images[tree.gen[w]]);
    for (std::size_t k = 0; k < tree.basis.size(); ++k) {
      SparseVec<K> img;
      for (const auto& [w, c] : tree.inverse.data[k]) axpy(f, img, c, word[w]);
      for (const auto& [j, c] : img) m(tree.basis[k], j) = c;
    }
  }
  AlgebraMap<K> map{source, target, images, std::move(m)};
  for (std::size_t g = 0; g < images.size(); ++g)
    if (map(s.generators()[g]) != images[g]) throw InputError("not a homomorphism: generator images are inconsistent");
  if (map(s.one()) != t.one()) throw InputError("not a homomorphism: unit not preserved");
  std::vector<SparseVec<K>> rows(s.dim());
  for (std::size_t b = 0; b < s.dim(); ++b) rows[b] = sparsify<K>(f, map.matrix.row(b));
  for (std::size_t i = 0; i < s.dim(); ++i)
    for (std::size_t j = 0; j < s.dim(); ++j)
      if (map(s.product(i, j)) != t.multiply(rows[i], rows[j]))
        throw InputError("not a homomorphism: fails on " + s.label(i) + " * " + s.label(j));
  if (require_bijective && (s.dim() != t.dim() || rank(map.matrix) != s.dim()))
    throw InputError("not invertible");
  return map;
}

template <class K>
Automorphism<K> check_automorphism(AlgebraPtr<K> a, std::vector<SparseVec<K>> images) {
  return check_algebra_map(a, a, std::move(images), true);
}

template <class K>
Automorphism<K> identity_automorphism(AlgebraPtr<K> a) {
  return {a, a, a->generators(), Matrix<K>::identity(a->field(), a->dim())};
}

template <class K>
Automorphism<K> compose(const Automorphism<K>& sigma, const Automorphism<K>& tau) {
  Automorphism<K> r{tau.source, sigma.target, {}, tau.matrix * sigma.matrix};
  for (const auto& x : tau.generator_images) r.generator_images.push_back(sigma(x));
  return r;
}

template <class K>
Automorphism<K> power(const Automorphism<K>& sigma, std::size_t n) {
  auto r = identity_automorphism(sigma.source);
  for (std::size_t i = 0; i < n; ++i) r = compose(sigma, r);
  return r;
}

template <class K>
bool same_map(const AlgebraMap<K>& f, const AlgebraMap<K>& g) {
  return f.matrix == g.matrix;
}

template <class K>
std::optional<std::size_t> order(const Automorphism<K>& sigma, std::size_t bound) {
  auto id = Matrix<K>::identity(sigma.source->field(), sigma.source->dim());
  auto r = sigma;
  for (std::size_t k = 1; k <= bound; ++k) {
    if (r.matrix == id) return k;
    r = compose(sigma, r);
  }
  return std::nullopt;
}

template <class K>
bool is_unit(const Algebra<K>& a, const SparseVec<K>& u) {
  if (!a.parts().top.empty()) {
    for (const auto& c : a.top_of(u))
      if (a.field().is_zero(c)) return false;
    return true;
  }
  Matrix<K> m(a.field(), a.dim(), a.dim());
  for (std::size_t b = 0; b < a.dim(); ++b)
    for (const auto& [j, c] : a.multiply(u, a.unit(b))) m(b, j) = c;
  return rank(m) == a.dim();
}

namespace {

// Searches span(basis) for an element satisfying `good`; exhaustive over small
// finite fields, seeded random combinations otherwise.
template <class K, class Pred>
std::optional<SparseVec<K>> search_span(const K& f, const std::vector<SparseVec<K>>& basis, Pred good,
                                        std::uint64_t seed) {
  for (const auto& b : basis)
    if (good(b)) return b;
  if (basis.empty()) return std::nullopt;
  std::mt19937_64 rng(seed);
  if constexpr (std::is_same_v<K, FiniteField>) {
    double total = std::pow(double(f.order()), double(basis.size()));
    if (total <= 65536.0) {
      std::vector<std::uint32_t> digits(basis.size(), 0);
      for (;;) {
        std::size_t i = 0;
        while (i < digits.size() && ++digits[i] == f.order()) digits[i++] = 0;
        if (i == digits.size()) break;
        SparseVec<K> x;
        for (std::size_t k = 0; k < basis.size(); ++k) axpy(f, x, digits[k], basis[k]);
        if (good(x)) return x;
      }
      return std::nullopt;
    }
  }
  for (int trial = 0; trial < 64; ++trial) {
    SparseVec<K> x;
    for (const auto& b : basis) axpy(f, x, f.random(rng, 1000), b);
    if (good(x)) return x;
  }
  return std::nullopt;
}

}  // namespace

template <class K>
std::optional<SparseVec<K>> is_inner(const Automorphism<K>& sigma, std::uint64_t seed) {
  const Algebra<K>& a = *sigma.source;
  const K& f = a.field();
  const std::size_t n = a.dim(), ng = a.generators().size();
  // Row b: the constraint values of u = b, namely sigma(g) b - b g for each g.
  Matrix<K> m(f, n, n * ng);
  for (std::size_t b = 0; b < n; ++b)
    for (std::size_t g = 0; g < ng; ++g) {
      auto x = a.multiply(sigma.generator_images[g], a.unit(b));
      axpy(f, x, f.neg(f.one()), a.multiply(a.unit(b), a.generators()[g]));
      for (const auto& [j, c] : x) m(b, g * n + j) = c;
    }
  std::vector<SparseVec<K>> sols;
  for (const auto& v : left_kernel(m)) sols.push_back(sparsify<K>(f, v));
  return search_span(f, sols, [&](const SparseVec<K>& u) { return is_unit(a, u); }, seed);
}

template <class K>
std::vector<std::vector<std::size_t>> cartan(const Algebra<K>& a) {
  std::vector<std::vector<std::size_t>> c(a.vertex_count(), std::vector<std::size_t>(a.vertex_count(), 0));
  for (std::size_t b = 0; b < a.dim(); ++b) ++c[a.left_vertex(b)][a.right_vertex(b)];
  return c;
}

template <class K>
bool schurian(const Algebra<K>& a) {
  for (const auto& row : cartan(a))
    for (auto x : row)
      if (x > 1) return false;
  return true;
}

template <class K>
bool is_basic(const Algebra<K>& a) {
  return a.dim() - a.radical_basis().size() == a.vertex_count();
}

template <class K>
std::optional<std::vector<std::size_t>> nakayama_permutation(const Algebra<K>& a) {
  const K& f = a.field();
  std::vector<std::size_t> nu;
  std::set<std::size_t> seen;
  for (std::size_t v = 0; v < a.vertex_count(); ++v) {
    const auto& tree = a.tree(v);
    const std::size_t d = tree.basis.size(), nr = a.radical_generators().size();
    Matrix<K> m(f, d, nr * a.dim());
    for (std::size_t k = 0; k < d; ++k)
      for (std::size_t r = 0; r < nr; ++r)
        for (const auto& [j, c] : a.right_action(a.radical_generators()[r]).data[tree.basis[k]])
          m(k, r * a.dim() + j) = c;
    auto soc = left_kernel(m);
    if (soc.size() != 1) return std::nullopt;
    std::size_t w = a.vertex_count();
    for (std::size_t k = 0; k < d; ++k)
      if (!f.is_zero(soc[0][k])) w = a.right_vertex(tree.basis[k]);
    if (!seen.insert(w).second) return std::nullopt;
    nu.push_back(w);
  }
  return nu;
}

template <class K>
bool is_connected(const Algebra<K>& a) {
  const std::size_t nv = a.vertex_count();
  if (nv == 0) return false;
  auto c = cartan(a);
  std::vector<bool> seen(nv, false);
  std::deque<std::size_t> queue{0};
  seen[0] = true;
  while (!queue.empty()) {
    auto v = queue.front();
    queue.pop_front();
    for (std::size_t w = 0; w < nv; ++w)
      if (!seen[w] && (c[v][w] || c[w][v])) seen[w] = true, queue.push_back(w);
  }
  return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
}

#define PERI_INSTANTIATE_OPS(K)                                                                         \
  template Algebra<K> opposite(const Algebra<K>&);                                                      \
  template Algebra<K> enveloping(const Algebra<K>&);                                                    \
  template Algebra<K> corner(const Algebra<K>&, const std::vector<std::size_t>&, std::string);          \
  template struct AlgebraMap<K>;                                                                        \
  template AlgebraMap<K> check_algebra_map(AlgebraPtr<K>, AlgebraPtr<K>, std::vector<SparseVec<K>>, bool); \
  template Automorphism<K> check_automorphism(AlgebraPtr<K>, std::vector<SparseVec<K>>);                \
  template Automorphism<K> identity_automorphism(AlgebraPtr<K>);                                        \
  template Automorphism<K> compose(const Automorphism<K>&, const Automorphism<K>&);                     \
  template Automorphism<K> power(const Automorphism<K>&, std::size_t);                                  \
  template bool same_map(const AlgebraMap<K>&, const AlgebraMap<K>&);                                   \
  template std::optional<std::size_t> order(const Automorphism<K>&, std::size_t);                       \
  template bool is_unit(const Algebra<K>&, const SparseVec<K>&);                                        \
  template std::optional<SparseVec<K>> is_inner(const Automorphism<K>&, std::uint64_t);                 \
  template std::vector<std::vector<std::size_t>> cartan(const Algebra<K>&);                             \
  template bool schurian(const Algebra<K>&);                                                            \
  template bool is_basic(const Algebra<K>&);                                                            \
  template std::optional<std::vector<std::size_t>> nakayama_permutation(const Algebra<K>&);             \
  template bool is_connected(const Algebra<K>&);

PERI_INSTANTIATE_OPS(Rationals)
PERI_INSTANTIATE_OPS(FiniteField)

}  // namespace peri
