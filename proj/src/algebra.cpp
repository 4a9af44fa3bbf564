#include "peri/algebra.hpp"

#include <algorithm>
#include <deque>

namespace peri {

namespace {

template <class K>
SparseVec<K> merge_terms(const K& f, std::vector<std::pair<std::uint32_t, typename K::Elem>>& terms) {
  std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  SparseVec<K> out;
  for (auto& [i, x] : terms) {
    if (!out.empty() && out.back().first == i) {
      f.add_to(out.back().second, x);
      if (f.is_zero(out.back().second)) out.pop_back();
    } else if (!f.is_zero(x)) {
      out.push_back({i, std::move(x)});
    }
  }
  return out;
}

template <class K>
SparseVec<K> table_multiply(const K& f, const std::vector<SparseVec<K>>& table, std::size_t dim,
                            const SparseVec<K>& x, const SparseVec<K>& y) {
  std::vector<std::pair<std::uint32_t, typename K::Elem>> terms;
  for (const auto& [i, a] : x)
    for (const auto& [j, b] : y) {
      const auto& p = table[i * dim + j];
      if (p.empty()) continue;
      auto ab = f.mul(a, b);
      for (const auto& [k, c] : p) terms.push_back({k, f.mul(ab, c)});
    }
  return merge_terms<K>(f, terms);
}

}  // namespace

template <class K>
Algebra<K>::Algebra(Parts parts) : p_(std::move(parts)) {
  const std::size_t n = dim();
  if (p_.left_vertex.size() != n || p_.right_vertex.size() != n || p_.table.size() != n * n)
    throw ConsistencyError("algebra parts have inconsistent sizes");
  if (p_.vertex_names.size() != p_.idempotents.size()) {
    p_.vertex_names.clear();
    for (std::size_t v = 0; v < p_.idempotents.size(); ++v) p_.vertex_names.push_back(std::to_string(v + 1));
  }
  if (p_.generator_names.size() != p_.generators.size()) {
    p_.generator_names.clear();
    for (const auto& g : p_.generators) p_.generator_names.push_back(str(g));
  }
  if (!p_.top.empty() && p_.top.size() != n) throw ConsistencyError("algebra top map has the wrong size");
  if (p_.top.empty()) {
    radical_space_ = Subspace<K>(p_.field, n);
    for (const auto& r : p_.radical_basis) radical_space_.insert(densify(p_.field, r, n));
  }
  build_caches();
  if (p_.loewy_length == 0) p_.loewy_length = compute_loewy_length(*this);
}

template <class K>
void Algebra<K>::build_caches() {
  const K& f = field();
  const std::size_t n = dim();
  right_.clear();
  for (const auto& g : p_.generators) {
    auto m = SparseMatrix<K>::zero(n, n);
    for (std::size_t b = 0; b < n; ++b) m.data[b] = table_multiply(f, p_.table, n, unit(b), g);
    right_.push_back(std::move(m));
  }
  position_.assign(n, 0);
  trees_.assign(vertex_count(), {});
  std::vector<bool> is_idempotent_gen(p_.generators.size(), false);
  for (std::size_t g = 0; g < p_.generators.size(); ++g) {
    const auto& x = p_.generators[g];
    is_idempotent_gen[g] =
        x.size() == 1 && f.is_one(x[0].second) &&
        std::find(p_.idempotents.begin(), p_.idempotents.end(), x[0].first) != p_.idempotents.end();
  }
  for (std::size_t v = 0; v < vertex_count(); ++v) {
    auto& t = trees_[v];
    for (std::size_t b = 0; b < n; ++b)
      if (left_vertex(b) == v) {
        position_[b] = static_cast<std::uint32_t>(t.basis.size());
        t.basis.push_back(static_cast<std::uint32_t>(b));
      }
    const std::size_t d = t.basis.size();
    auto local = [&](const SparseVec<K>& x) {
      Vec<K> out(d, f.zero());
      for (const auto& [i, c] : x) {
        if (left_vertex(i) != v) throw ConsistencyError("spanning tree left its vertex");
        out[position_[i]] = c;
      }
      return out;
    };
    Subspace<K> span(f, d);
    std::vector<SparseVec<K>> words;
    std::vector<Vec<K>> rows;
    auto add = [&](SparseVec<K> w, std::int32_t parent, std::uint32_t gen) {
      auto row = local(w);
      if (!span.insert(row)) return;
      words.push_back(std::move(w));
      rows.push_back(std::move(row));
      t.parent.push_back(parent);
      t.gen.push_back(gen);
    };
    add(unit(idempotent(v)), -1, 0);
    for (std::size_t head = 0; head < words.size() && span.dim() < d; ++head)
      for (std::size_t g = 0; g < p_.generators.size() && span.dim() < d; ++g) {
        if (is_idempotent_gen[g]) continue;
        auto w = SparseVec<K>{};
        for (const auto& [i, c] : words[head]) axpy(f, w, c, right_[g].data[i]);
        if (!w.empty()) add(std::move(w), static_cast<std::int32_t>(head), static_cast<std::uint32_t>(g));
      }
    if (span.dim() != d)
      throw ConsistencyError("generators do not generate e_vA at vertex " + vertex_name(v));
    auto inv = inverse(Matrix<K>::from_rows(f, d, rows));
    t.inverse = SparseMatrix<K>::from_dense(*inv);
  }
}

template <class K>
typename Algebra<K>::Element Algebra<K>::one() const {
  Element e;
  for (auto i : p_.idempotents) e.push_back({i, field().one()});
  std::sort(e.begin(), e.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  return e;
}

template <class K>
typename Algebra<K>::Element Algebra<K>::multiply(const Element& x, const Element& y) const {
  return table_multiply(field(), p_.table, dim(), x, y);
}

template <class K>
Vec<K> Algebra<K>::top_of(const Element& x) const {
  const K& f = field();
  Vec<K> out(vertex_count(), f.zero());
  if (p_.top.empty()) throw ConsistencyError("top map unavailable for non-basic algebra " + name());
  for (const auto& [i, c] : x)
    for (const auto& [v, l] : p_.top[i]) f.add_mul_to(out[v], c, l);
  return out;
}

template <class K>
bool Algebra<K>::in_radical(const Element& x) const {
  if (!p_.top.empty()) return is_zero_vec<K>(field(), top_of(x));
  return radical_space_.contains(densify(field(), x, dim()));
}

template <class K>
std::string Algebra<K>::str(const Element& x) const {
  if (x.empty()) return "0";
  const K& f = field();
  std::string s;
  for (std::size_t k = 0; k < x.size(); ++k) {
    if (k) s += " + ";
    if (!f.is_one(x[k].second)) s += f.str(x[k].second) + "*";
    s += p_.labels[x[k].first];
  }
  return s;
}

template <class K>
std::optional<std::size_t> Algebra<K>::find_label(const std::string& label) const {
  for (std::size_t b = 0; b < dim(); ++b)
    if (p_.labels[b] == label) return b;
  return std::nullopt;
}

template <class K>
void derive_generators(typename Algebra<K>::Parts& p) {
  const K& f = p.field;
  const std::size_t n = p.labels.size();
  p.generators.clear();
  p.generator_names.clear();
  p.radical_generators.clear();
  for (std::size_t v = 0; v < p.idempotents.size(); ++v) {
    p.generators.push_back({{p.idempotents[v], f.one()}});
    p.generator_names.push_back(p.labels[p.idempotents[v]]);
  }
  Subspace<K> span(f, n);
  for (const auto& x : p.radical_basis)
    for (const auto& y : p.radical_basis) {
      auto xy = table_multiply(f, p.table, n, x, y);
      if (!xy.empty()) span.insert(densify(f, xy, n));
    }
  for (const auto& r : p.radical_basis)
    if (span.insert(densify(f, r, n))) {
      p.radical_generators.push_back(static_cast<std::uint32_t>(p.generators.size()));
      p.generators.push_back(r);
      std::string name;
      for (std::size_t k = 0; k < r.size(); ++k)
        name += (k ? "+" : "") + (f.is_one(r[k].second) ? "" : f.str(r[k].second) + "*") + p.labels[r[k].first];
      p.generator_names.push_back(name);
    }
  if (!p.top.empty()) return;
  Subspace<K> rad(f, n);
  for (const auto& r : p.radical_basis) rad.insert(densify(f, r, n));
  if (n - rad.dim() != p.idempotents.size()) return;  // not basic: no top map
  p.top.assign(n, {});
  std::vector<Vec<K>> idem;
  for (auto e : p.idempotents) {
    Vec<K> r(n, f.zero());
    r[e] = f.one();
    rad.reduce(r);
    idem.push_back(std::move(r));
  }
  for (std::size_t b = 0; b < n; ++b) {
    if (p.left_vertex[b] != p.right_vertex[b]) continue;
    const std::size_t v = p.left_vertex[b];
    Vec<K> r(n, f.zero());
    r[b] = f.one();
    if (rad.reduce(r)) continue;
    std::size_t piv = 0;
    while (f.is_zero(idem[v][piv])) ++piv;
    auto lambda = f.mul(r[piv], f.inv(idem[v][piv]));
    for (std::size_t j = 0; j < n; ++j)
      if (!f.equal(r[j], f.mul(lambda, idem[v][j]))) throw ConsistencyError("algebra is not basic");
    p.top[b].push_back({static_cast<std::uint32_t>(v), lambda});
  }
}

template <class K>
std::size_t compute_loewy_length(const Algebra<K>& a) {
  const K& f = a.field();
  const std::size_t n = a.dim();
  std::vector<SparseVec<K>> layer = a.radical_basis();
  std::size_t k = 1;
  while (!layer.empty()) {
    Subspace<K> next(f, n);
    std::vector<SparseVec<K>> out;
    for (const auto& x : layer)
      for (auto r : a.radical_generators()) {
        auto y = a.multiply(x, a.generators()[r]);
        if (y.empty()) continue;
        auto d = densify(f, y, n);
        if (next.insert(d)) out.push_back(std::move(y));
      }
    layer = std::move(out);
    ++k;
    if (k > n + 2) throw ConsistencyError("radical of " + a.name() + " is not nilpotent");
  }
  return k;
}

template <class K>
SparseVec<K> path_element(const Algebra<K>& a, const Monomial& m) {
  if (!a.presentation()) throw InputError("algebra " + a.name() + " has no presentation");
  const auto& q = a.presentation()->quiver;
  if (m.trivial()) {
    if (m.vertex >= a.vertex_count()) throw InputError("vertex out of range");
    return a.unit(a.idempotent(m.vertex));
  }
  if (!composable(q, m)) throw InputError("non-composable path " + path_str(q, m));
  SparseVec<K> x = a.unit(a.idempotent(path_target(q, m)));
  // Generators after the idempotents are the arrows, in quiver order.
  for (auto arrow : m.arrows) x = a.multiply(x, a.generators().at(a.vertex_count() + arrow));
  return x;
}

template <class K>
SparseVec<K> combination_element(const Algebra<K>& a, const Combination& c) {
  SparseVec<K> x;
  for (const auto& t : c.terms) axpy(a.field(), x, a.field().from_rational(t.coeff), path_element(a, t.path));
  return x;
}

#define PERI_INSTANTIATE_ALGEBRA(K)                                             \
  template class Algebra<K>;                                                    \
  template void derive_generators<K>(Algebra<K>::Parts&);                       \
  template std::size_t compute_loewy_length(const Algebra<K>&);                 \
  template SparseVec<K> path_element(const Algebra<K>&, const Monomial&);       \
  template SparseVec<K> combination_element(const Algebra<K>&, const Combination&);

PERI_INSTANTIATE_ALGEBRA(Rationals)
PERI_INSTANTIATE_ALGEBRA(FiniteField)

}  // namespace peri
