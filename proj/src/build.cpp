#include <algorithm>
#include <map>

#include "peri/algebra.hpp"

namespace peri {

namespace {

constexpr std::size_t kMaxPaths = 400000;

struct PathTable {
  std::vector<Monomial> paths;  // sorted by (length, lex)
  std::vector<std::uint32_t> first_of_length;
  std::vector<std::int64_t> left, right;  // [path * arrows + a]: a*p and p*a, or -1
};

PathTable enumerate_paths(const Quiver& q, std::size_t max_len) {
  PathTable t;
  const std::size_t na = q.arrows.size();
  for (std::size_t v = 0; v < q.vertex_count; ++v) t.paths.push_back({{}, v});
  t.first_of_length.push_back(0);
  std::size_t begin = 0;
  for (std::size_t len = 1; len <= max_len; ++len) {
    const std::size_t end = t.paths.size();
    t.first_of_length.push_back(static_cast<std::uint32_t>(end));
    for (std::size_t i = begin; i < end; ++i) {
      for (std::size_t a = 0; a < na; ++a) {
        const auto& p = t.paths[i];
        if (q.arrows[a].target != path_source(q, p)) continue;
        Monomial m = p;
        m.arrows.push_back(static_cast<std::uint32_t>(a));
        t.paths.push_back(std::move(m));
        if (t.paths.size() > kMaxPaths) throw InputError("path enumeration exceeds the supported size");
      }
    }
    begin = end;
  }
  std::map<std::vector<std::uint32_t>, std::uint32_t> index;
  for (std::size_t i = q.vertex_count; i < t.paths.size(); ++i)
    index.emplace(t.paths[i].arrows, static_cast<std::uint32_t>(i));
  auto lookup = [&](const std::vector<std::uint32_t>& w) -> std::int64_t {
    auto it = index.find(w);
    return it == index.end() ? std::int64_t{-1} : std::int64_t{it->second};
  };
  t.left.assign(t.paths.size() * na, -1);
  t.right.assign(t.paths.size() * na, -1);
  for (std::size_t i = 0; i < t.paths.size(); ++i) {
    const auto& p = t.paths[i];
    for (std::size_t a = 0; a < na; ++a) {
      if (q.arrows[a].source == path_target(q, p)) {
        std::vector<std::uint32_t> w{static_cast<std::uint32_t>(a)};
        w.insert(w.end(), p.arrows.begin(), p.arrows.end());
        t.left[i * na + a] = lookup(w);
      }
      if (q.arrows[a].target == path_source(q, p)) {
        auto w = p.arrows;
        w.push_back(static_cast<std::uint32_t>(a));
        t.right[i * na + a] = lookup(w);
      }
    }
  }
  return t;
}

template <class K>
class Echelon {
 public:
  Echelon(const K& f, std::size_t n) : f_(f), pivot_(n, -1) {}

  SparseVec<K> reduce(const SparseVec<K>& v) const {
    std::map<std::uint32_t, typename K::Elem> acc(v.begin(), v.end());
    auto it = acc.end();
    while (it != acc.begin()) {
      --it;
      if (f_.is_zero(it->second)) {
        it = acc.erase(it);
        continue;
      }
      auto r = pivot_[it->first];
      if (r < 0) continue;
      auto c = it->second;
      const auto& row = rows_[r];
      for (std::size_t k = 0; k + 1 < row.size(); ++k) {
        auto [pos, fresh] = acc.try_emplace(row[k].first, f_.zero());
        f_.sub_mul_to(pos->second, c, row[k].second);
      }
      it = acc.erase(it);
    }
    SparseVec<K> out;
    for (auto& [i, x] : acc)
      if (!f_.is_zero(x)) out.push_back({i, std::move(x)});
    return out;
  }

  /// Inserts a reduced nonzero vector.
  void insert(SparseVec<K> r) {
    auto inv = f_.inv(r.back().second);
    for (auto& [i, x] : r) f_.mul_to(x, inv);
    pivot_[r.back().first] = static_cast<std::int64_t>(rows_.size());
    rows_.push_back(std::move(r));
  }

  bool is_pivot(std::size_t i) const { return pivot_[i] >= 0; }

 private:
  K f_;
  std::vector<std::int64_t> pivot_;
  std::vector<SparseVec<K>> rows_;
};

template <class K>
SparseVec<K> shift(const K& f, const SparseVec<K>& v, const std::vector<std::int64_t>& ext, std::size_t na,
                   std::size_t a) {
  std::vector<std::pair<std::uint32_t, typename K::Elem>> out;
  for (const auto& [i, x] : v) {
    auto j = ext[i * na + a];
    if (j >= 0) out.push_back({static_cast<std::uint32_t>(j), x});
  }
  std::sort(out.begin(), out.end(), [](const auto& l, const auto& r) { return l.first < r.first; });
  (void)f;
  return out;
}

}  // namespace

template <class K>
Algebra<K> build_algebra(const Presentation& pres, const K& field, std::size_t length_cap, std::string name) {
  pres.validate();
  const Quiver& q = pres.quiver;
  const std::size_t na = q.arrows.size();
  std::size_t longest = 1;
  for (const auto& r : pres.relations)
    for (const auto& t : r.terms) longest = std::max(longest, t.path.arrows.size());
  if (longest > length_cap) throw InputError("relation longer than the length cap");

  for (std::size_t L = longest + 1; L <= length_cap + 1; ++L) {
    // Work in kQ modulo paths of length >= L.
    PathTable t = enumerate_paths(q, L - 1);
    const std::size_t np = t.paths.size();
    std::map<std::vector<std::uint32_t>, std::uint32_t> index;
    for (std::size_t i = q.vertex_count; i < np; ++i) index.emplace(t.paths[i].arrows, static_cast<std::uint32_t>(i));

    Echelon<K> ideal(field, np);
    std::vector<SparseVec<K>> queue;
    for (const auto& r : pres.relations) {
      std::vector<std::pair<std::uint32_t, typename K::Elem>> terms;
      for (const auto& term : r.terms) terms.push_back({index.at(term.path.arrows), field.from_rational(term.coeff)});
      std::sort(terms.begin(), terms.end(), [](const auto& l, const auto& rr) { return l.first < rr.first; });
      SparseVec<K> v;
      for (auto& [i, x] : terms) {
        if (!v.empty() && v.back().first == i) field.add_to(v.back().second, x);
        else v.push_back({i, x});
      }
      std::erase_if(v, [&](const auto& e) { return field.is_zero(e.second); });
      queue.push_back(std::move(v));
    }
    while (!queue.empty()) {
      auto v = ideal.reduce(queue.back());
      queue.pop_back();
      if (v.empty()) continue;
      for (std::size_t a = 0; a < na; ++a) {
        auto l = shift(field, v, t.left, na, a);
        if (!l.empty()) queue.push_back(std::move(l));
        auto r = shift(field, v, t.right, na, a);
        if (!r.empty()) queue.push_back(std::move(r));
      }
      ideal.insert(std::move(v));
    }

    bool vanished = true;
    for (std::size_t i = t.first_of_length[L - 1]; i < np && vanished; ++i)
      vanished = ideal.is_pivot(i);
    if (!vanished) continue;

    // Standard monomials form the basis.
    std::vector<std::int64_t> basis_of(np, -1);
    std::vector<std::size_t> path_of;
    typename Algebra<K>::Parts p;
    p.field = field;
    p.name = name;
    p.presentation = pres;
    for (std::size_t v = 0; v < q.vertex_count; ++v) p.vertex_names.push_back(q.vertex_name(v));
    for (std::size_t i = 0; i < np; ++i) {
      if (ideal.is_pivot(i)) continue;
      basis_of[i] = static_cast<std::int64_t>(p.paths.size());
      path_of.push_back(i);
      p.paths.push_back(t.paths[i]);
      p.labels.push_back(path_str(q, t.paths[i]));
      p.left_vertex.push_back(static_cast<std::uint32_t>(path_target(q, t.paths[i])));
      p.right_vertex.push_back(static_cast<std::uint32_t>(path_source(q, t.paths[i])));
    }
    const std::size_t n = p.paths.size();
    auto normal_form = [&](std::size_t path) {
      SparseVec<K> nf;
      for (auto& [i, x] : ideal.reduce({{static_cast<std::uint32_t>(path), field.one()}}))
        nf.push_back({static_cast<std::uint32_t>(basis_of[i]), x});
      return nf;
    };
    p.table.assign(n * n, {});
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        const auto& x = p.paths[i];
        const auto& y = p.paths[j];
        if (path_source(q, x) != path_target(q, y)) continue;
        std::int64_t target;
        if (x.trivial()) target = static_cast<std::int64_t>(path_of[j]);
        else if (y.trivial()) target = static_cast<std::int64_t>(path_of[i]);
        else {
          auto w = x.arrows;
          w.insert(w.end(), y.arrows.begin(), y.arrows.end());
          auto it = index.find(w);
          target = it == index.end() ? std::int64_t{-1} : std::int64_t{it->second};
        }
        if (target >= 0) p.table[i * n + j] = normal_form(static_cast<std::size_t>(target));
      }
    for (std::size_t v = 0; v < q.vertex_count; ++v) {
      p.idempotents.push_back(static_cast<std::uint32_t>(basis_of[v]));
      p.generators.push_back({{static_cast<std::uint32_t>(basis_of[v]), field.one()}});
      p.generator_names.push_back("e" + q.vertex_name(v));
    }
    p.top.assign(n, {});
    for (std::size_t v = 0; v < q.vertex_count; ++v)
      p.top[basis_of[v]].push_back({static_cast<std::uint32_t>(v), field.one()});
    for (std::size_t a = 0; a < na; ++a) {
      auto b = basis_of[index.at({static_cast<std::uint32_t>(a)})];
      if (b < 0) throw ConsistencyError("arrow " + q.arrows[a].name + " vanished");
      p.radical_generators.push_back(static_cast<std::uint32_t>(p.generators.size()));
      p.generators.push_back({{static_cast<std::uint32_t>(b), field.one()}});
      p.generator_names.push_back(q.arrows[a].name);
    }
    for (std::size_t b = q.vertex_count; b < n; ++b) p.radical_basis.push_back({{static_cast<std::uint32_t>(b), field.one()}});
    Algebra<K> alg(std::move(p));
    if (alg.loewy_length() > length_cap) throw InputError("Loewy length exceeds the length cap");
    return alg;
  }
  throw InputError("not finite-dimensional below cap " + std::to_string(length_cap));
}

template Algebra<Rationals> build_algebra(const Presentation&, const Rationals&, std::size_t, std::string);
template Algebra<FiniteField> build_algebra(const Presentation&, const FiniteField&, std::size_t, std::string);

}  // namespace peri
