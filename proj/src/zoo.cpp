#include "peri/zoo.hpp"

#include <memory>
#include <numeric>
#include <sstream>

namespace peri {

namespace {

std::string field_line(const FieldSpec& f) { return "[field]\n" + f.str() + "\n"; }

template <class K>
AlgebraPtr<K> build_from(const AlgebraDescription& d, const K& field, std::size_t cap) {
  return std::make_shared<const Algebra<K>>(build_algebra(d.presentation, field, cap, d.name));
}

/// Arrows of a path listed in traversal order, written right to left.
std::string written(const std::vector<std::string>& traversal) {
  std::string s;
  for (auto it = traversal.rbegin(); it != traversal.rend(); ++it) s += (s.empty() ? "" : "*") + *it;
  return s;
}

std::uint64_t gcd(std::uint64_t a, std::uint64_t b) { return std::gcd(a, b); }

}  // namespace

DynkinGraph DynkinGraph::make(char family, std::size_t n) {
  DynkinGraph d{family, n, {}};
  switch (family) {
    case 'A':
    case 'L':
      if (n < 1) throw InputError("rank must be at least 1");
      for (std::size_t v = 0; v + 1 < n; ++v) d.edges.push_back({v, v + 1});
      break;
    case 'D':
      if (n < 4) throw InputError("D_n needs n >= 4");
      for (std::size_t v = 0; v + 2 < n; ++v) d.edges.push_back({v, v + 1});
      d.edges.push_back({n - 3, n - 1});
      break;
    case 'E':
      if (n < 6 || n > 8) throw InputError("E_n needs 6 <= n <= 8: graph is not Dynkin");
      for (std::size_t v = 0; v + 2 < n; ++v) d.edges.push_back({v, v + 1});
      d.edges.push_back({2, n - 1});
      break;
    default:
      throw InputError(std::string("unknown graph family '") + family + "': preprojective algebra would be infinite");
  }
  return d;
}

DynkinGraph DynkinGraph::parse(std::string_view family, std::size_t n) {
  if (family.size() != 1) throw InputError("graph family is one of A, D, E, L");
  return make(static_cast<char>(std::toupper(static_cast<unsigned char>(family[0]))), n);
}

std::size_t DynkinGraph::m() const {
  switch (family) {
    case 'A':
      return n;
    case 'D':
      return 2 * n - 3;
    case 'E':
      return n == 6 ? 11 : n == 7 ? 17 : 29;
    default:
      throw InputError("Coxeter number is not defined for " + str());
  }
}

std::string DynkinGraph::str() const { return std::string(1, family) + std::to_string(n); }

// ---------------------------------------------------------------------------

AlgebraDescription preprojective_description(const DynkinGraph& d, const FieldSpec& field) {
  std::ostringstream os;
  os << field_line(field) << "[quiver]\nvertices " << d.n << '\n';
  // arrows_from[u]: (alpha, alphabar) for every alpha with source u.
  std::vector<std::vector<std::pair<std::string, std::string>>> from(d.n);
  if (d.has_loop()) {
    os << "eps: 1 -> 1\n";
    from[0].push_back({"eps", "eps"});
  }
  for (std::size_t k = 0; k < d.edges.size(); ++k) {
    const auto [u, v] = d.edges[k];
    const std::string a = "a" + std::to_string(k + 1), b = a + "bar";
    os << a << ": " << u + 1 << " -> " << v + 1 << '\n' << b << ": " << v + 1 << " -> " << u + 1 << '\n';
    from[u].push_back({a, b});
    from[v].push_back({b, a});
  }
  os << "[relations]\n";
  for (std::size_t u = 0; u < d.n; ++u) {
    std::string rel;
    for (const auto& [a, b] : from[u]) rel += (rel.empty() ? "" : " + ") + b + "*" + a;
    if (!rel.empty()) os << rel << '\n';
  }
  return parse_description(os.str(), "P(" + d.str() + ")");
}

template <class K>
AlgebraPtr<K> preprojective(const DynkinGraph& d, const K& field) {
  const std::size_t cap = d.has_loop() ? 4 * d.n + 2 : d.h() + 1;
  return build_from(preprojective_description(d, field.spec()), field, cap);
}

template <class K>
Grading<K> half_grading(const AlgebraPtr<K>& p, const DynkinGraph& d, std::size_t m) {
  if (d.has_loop()) throw InputError("the loop of " + d.str() + " has no half grading");
  const auto g = FiniteGroup::cyclic(m);
  std::vector<std::size_t> deg;
  for (std::size_t k = 0; k < d.edges.size(); ++k) {
    deg.push_back(g.identity());
    deg.push_back(g.pow(m > 1 ? 1 : 0, 1));
  }
  return grading_by_arrows(p, g, deg);
}

template <class K>
Grading<K> path_length_grading(const AlgebraPtr<K>& a, std::size_t m) {
  if (!a->presentation()) throw InputError("path length grading needs a presentation");
  const auto g = FiniteGroup::cyclic(m);
  std::vector<std::size_t> deg(a->presentation()->quiver.arrows.size(), m > 1 ? 1 : 0);
  return grading_by_arrows(a, g, deg);
}

template <class K>
Smash<K> mesh_algebra(const DynkinGraph& d, std::size_t m, const K& field) {
  if (m < 1) throw InputError("mesh algebra needs m >= 1");
  return smash(half_grading(preprojective(d, field), d, m));
}

AlgebraDescription nakayama_description(std::size_t n, std::size_t l, const FieldSpec& field) {
  if (n < 1 || l < 2) throw InputError("Nakayama algebra needs n >= 1 simples and Loewy length >= 2");
  std::ostringstream os;
  os << field_line(field) << "[quiver]\nvertices " << n << '\n';
  for (std::size_t i = 0; i < n; ++i) os << "c" << i + 1 << ": " << i + 1 << " -> " << (i + 1) % n + 1 << '\n';
  os << "[relations]\n";
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<std::string> walk;
    for (std::size_t k = 0; k < l; ++k) walk.push_back("c" + std::to_string((i + k) % n + 1));
    os << written(walk) << '\n';
  }
  return parse_description(os.str(), "N(" + std::to_string(n) + "," + std::to_string(l) + ")");
}

template <class K>
AlgebraPtr<K> nakayama(std::size_t n, std::size_t l, const K& field) {
  return build_from(nakayama_description(n, l, field.spec()), field, l + 1);
}

namespace {

/// Paths of m+1 arrows around an m-cycle, starting and ending with arrow i.
std::vector<std::string> long_cycles(const std::vector<std::string>& arrows) {
  const std::size_t m = arrows.size();
  std::vector<std::string> out;
  for (std::size_t i = 0; i < m; ++i) {
    std::vector<std::string> walk;
    for (std::size_t k = 0; k <= m; ++k) walk.push_back(arrows[(i + k) % m]);
    out.push_back(written(walk));
  }
  return out;
}

}  // namespace

AlgebraDescription nonstandard_description(std::size_t m, const FieldSpec& field) {
  if (m < 2) throw InputError("the nonstandard algebra needs m >= 2");
  if (field.characteristic != 2) throw InputError("the nonstandard algebra needs characteristic 2");
  std::ostringstream os;
  os << field_line(field) << "[quiver]\nvertices " << m << '\n';
  std::vector<std::string> a;
  for (std::size_t i = 0; i < m; ++i) {
    a.push_back("a" + std::to_string(i + 1));
    os << a.back() << ": " << i + 1 << " -> " << (i + 1) % m + 1 << '\n';
  }
  os << "b: 1 -> 1\n[relations]\n" << written(a) << " = b*b\n";
  for (const auto& c : long_cycles(a)) os << c << '\n';
  os << "a1*a" << m << " = a1*b*a" << m << '\n';
  os << "[grading]\ngroup Z/2\ne1 + b = 1\n";
  for (const auto& x : a) os << x << " = 0\n";
  return parse_description(os.str(), "D3m(" + std::to_string(m) + ")");
}

template <class K>
Grading<K> nonstandard_d3m(std::size_t m, const K& field) {
  auto d = nonstandard_description(m, field.spec());
  auto a = build_from(d, field, 4 * m + 4);
  return grading_from_spec(a, *d.grading);
}

AlgebraDescription bdoubleprime_description(std::size_t m, const FieldSpec& field) {
  if (m < 2) throw InputError("B'' needs m >= 2");
  std::ostringstream os;
  os << field_line(field) << "[quiver]\nvertices";
  for (std::size_t i = 1; i <= m; ++i) os << ' ' << i;
  for (std::size_t i = 2; i <= m; ++i) os << ' ' << i << 'p';
  os << '\n';
  auto primed = [&](std::size_t i) { return i == 1 ? std::string("1") : std::to_string(i) + "p"; };
  std::vector<std::string> a, ap;
  for (std::size_t i = 1; i <= m; ++i) {
    a.push_back("a" + std::to_string(i));
    os << a.back() << ": " << i << " -> " << i % m + 1 << '\n';
  }
  for (std::size_t i = 1; i <= m; ++i) {
    ap.push_back("ap" + std::to_string(i));
    os << ap.back() << ": " << primed(i) << " -> " << primed(i % m + 1) << '\n';
  }
  os << "[relations]\n";
  for (const auto& c : long_cycles(a)) os << c << '\n';
  for (const auto& c : long_cycles(ap)) os << c << '\n';
  os << "ap1*a" << m << "\na1*ap" << m << '\n' << written(ap) << " = " << written(a) << '\n';
  return parse_description(os.str(), "B''(" + std::to_string(m) + ")");
}

template <class K>
SmashCorner<K> bprime_bdoubleprime(std::size_t m, const K& field) {
  auto gr = nonstandard_d3m(m, field);
  auto s = smash(gr);
  const auto& b = *s.algebra;
  // Vertices of B: (i, g) = s.vertex(i, g); drop (1, 1).
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < m; ++i) keep.push_back(s.vertex(i, 0));
  for (std::size_t i = 1; i < m; ++i) keep.push_back(s.vertex(i, 1));
  auto bprime = std::make_shared<const Algebra<K>>(corner(b, keep, "B'(" + std::to_string(m) + ")"));
  std::vector<std::int64_t> vpos(b.vertex_count(), -1), bpos(b.dim(), -1);
  for (std::size_t k = 0; k < keep.size(); ++k) vpos[keep[k]] = static_cast<std::int64_t>(k);
  std::int64_t next = 0;
  for (std::size_t x = 0; x < b.dim(); ++x)
    if (vpos[b.left_vertex(x)] >= 0 && vpos[b.right_vertex(x)] >= 0) bpos[x] = next++;
  auto to_corner = [&](const SparseVec<K>& x) {
    SparseVec<K> out;
    for (const auto& [i, c] : x) {
      if (bpos[i] < 0) throw ConsistencyError("element leaves the corner");
      out.push_back({static_cast<std::uint32_t>(bpos[i]), c});
    }
    return out;
  };
  // Elements of A, then a p_g.
  const auto& q = gr.rebase->source->presentation()->quiver;
  auto el = [&](const std::string& text) {
    return (*gr.rebase)(combination_element(*gr.rebase->source, parse_combination(q, text)));
  };
  auto at = [&](const SparseVec<K>& x, std::size_t g) {
    SparseVec<K> out;
    for (const auto& [k, c] : x) out.push_back({static_cast<std::uint32_t>(s.basis(k, g)), c});
    return to_corner(out);
  };
  const std::string am = "a" + std::to_string(m);
  std::vector<SparseVec<K>> images;
  for (std::size_t i = 1; i <= m; ++i) images.push_back(at(el("e" + std::to_string(i)), 0));
  for (std::size_t i = 2; i <= m; ++i) images.push_back(at(el("e" + std::to_string(i)), 1));
  for (std::size_t i = 1; i <= m; ++i) images.push_back(at(el("a" + std::to_string(i)), 0));
  for (std::size_t i = 1; i <= m; ++i) {
    if (i == 1)
      images.push_back(at(el("a1 + a1*b"), 0));
    else if (i == m)
      images.push_back(at(el(am + " + b*" + am), 1));
    else
      images.push_back(at(el("a" + std::to_string(i)), 1));
  }
  auto bpp = build_from(bdoubleprime_description(m, field.spec()), field, 2 * m + 4);
  auto phi = check_algebra_map<K>(bpp, bprime, images, true);
  return {std::move(s), std::move(bprime), std::move(bpp), std::move(phi)};
}

// ---------------------------------------------------------------------------

std::string SelfInjectiveType::str() const {
  std::string f = std::to_string(f_num) + (f_den == 1 ? "" : "/" + std::to_string(f_den));
  return "(" + tree.str() + ", " + f + ", " + std::to_string(t) + ")" + (nonstandard ? " nonstandard" : "");
}

Table52Entry table52(const SelfInjectiveType& type, unsigned characteristic) {
  const auto& d = type.tree;
  const std::uint64_t n = d.n, t = type.t;
  const bool char2 = characteristic == 2;
  Table52Entry e;
  auto bad = [&] { return InputError("type " + type.str() + " is not a row of the period table"); };
  auto s_over = [&](std::uint64_t den) -> std::uint64_t {
    // f = s / den with s a positive integer.
    if ((type.f_num * den) % type.f_den != 0) throw bad();
    return type.f_num * den / type.f_den;
  };
  if (type.nonstandard) {
    if (d.family != 'D' || n % 3 != 0 || type.f_num * 3 != type.f_den || t != 1) throw bad();
    const std::uint64_t m = n / 3;
    e.row = "(D_3m, 1/3, 1) nonstandard";
    e.cases = "nonstandard";
    e.candidates = {2 * m - 1, 2 * (2 * m - 1), 4 * (2 * m - 1)};
    return e;
  }
  switch (d.family) {
    case 'A':
      if (t == 1) {
        const std::uint64_t s = s_over(n);
        e.row = "(A_n, s/n, 1)";
        if (char2 && n == 1 && s % 2 == 1) {
          e.cases = "char 2, n = 1, s odd";
          e.candidates = {s};
        } else {
          e.cases = "otherwise";
          e.candidates = {2 * s / gcd(s, n + 1)};
        }
        return e;
      }
      if (t == 2 && n % 2 == 1 && n >= 3) {
        const std::uint64_t s = s_over(1), m = (n - 1) / 2, g = gcd(s, m + 1);
        e.row = "(A_2m+1, s, 2)";
        if (char2 && ((s + m + 1) / g) % 2 == 0) {
          e.cases = "char 2, (s+m+1)/(s,m+1) even";
          e.candidates = {s * (2 * m + 1) / g};
        } else {
          e.cases = "otherwise";
          e.candidates = {2 * s * (2 * m + 1) / g};
        }
        return e;
      }
      throw bad();
    case 'D':
      if (t == 1 && type.f_den == 3 && type.f_num % 3 != 0 && n % 3 == 0) {
        const std::uint64_t s = type.f_num, m = n / 3, g = gcd(s, 6 * m - 2);
        e.row = "(D_3m, s/3, 1)";
        if (char2 && m % 2 == 0 && s % 2 == 1) {
          e.cases = "char 2, m even, s odd";
          e.candidates = {s * (2 * m - 1) / g};
        } else {
          e.cases = "otherwise";
          e.candidates = {2 * s * (2 * m - 1) / g};
        }
        e.functorial_only = s <= 3;
        return e;
      }
      if (t == 1) {
        const std::uint64_t s = s_over(1), g = gcd(s, 2 * n - 2);
        e.row = "(D_n, s, 1)";
        if (char2 && n % 2 == 0 && s % 2 == 1) {
          e.cases = "char 2, n even, s odd";
          e.candidates = {s * (2 * n - 3) / g};
        } else {
          e.cases = "otherwise";
          e.candidates = {2 * s * (2 * n - 3) / g};
        }
        e.functorial_only = s <= 1;
        return e;
      }
      if (t == 2) {
        const std::uint64_t s = s_over(1), g = gcd(s, n - 1), base = s * (2 * n - 3) / g;
        e.row = "(D_n, s, 2)";
        if (n % 2 == 1 && ((s + n - 1) / g) % 2 == 0) {
          e.cases = "n odd, (s+n-1)/(s,n-1) even";
          e.candidates = {base, 2 * base, 4 * base};
        } else {
          e.cases = "otherwise";
          e.candidates = {2 * base, 4 * base};
        }
        e.functorial_only = s <= 1;
        return e;
      }
      if (t == 3 && n == 4) {
        const std::uint64_t s = s_over(1);
        e.row = "(D_4, s, 3)";
        if (char2 && s % 2 == 1) {
          e.cases = "char 2, s odd";
          e.candidates = {5 * s, 15 * s};
        } else {
          e.cases = "otherwise";
          e.candidates = {10 * s / gcd(s, 2), 30 * s / gcd(s, 2)};
        }
        e.functorial_only = s <= 1;
        return e;
      }
      throw bad();
    case 'E': {
      const std::uint64_t s = s_over(1);
      e.functorial_only = s <= 1;
      if (n == 6 && t == 1) {
        e.row = "(E_6, s, 1)";
        e.cases = "-";
        e.candidates = {22 * s / gcd(s, 12)};
        return e;
      }
      if (n == 6 && t == 2) {
        const std::uint64_t g = gcd(s, 6);
        e.row = "(E_6, s, 2)";
        if (s % 4 == 2) {
          e.cases = "s = 2 mod 4";
          e.candidates = {11 * s / g, 22 * s / g, 44 * s / g};
        } else {
          e.cases = "s != 2 mod 4";
          e.candidates = {22 * s / g, 44 * s / g};
        }
        return e;
      }
      if ((n == 7 || n == 8) && t == 1) {
        const std::uint64_t m = d.m(), h = m + 1, g = gcd(s, h);
        e.row = n == 7 ? "(E_7, s, 1)" : "(E_8, s, 1)";
        if (char2 && s % 2 == 1) {
          e.cases = "char 2, s odd";
          e.candidates = {m * s / g};
        } else {
          e.cases = "otherwise";
          e.candidates = {2 * m * s / g};
        }
        return e;
      }
      throw bad();
    }
    default:
      throw bad();
  }
}

MeshPeriod mesh_period_formula(const DynkinGraph& d, std::uint64_t m, unsigned characteristic) {
  if (m < 1) throw InputError("mesh period needs m >= 1");
  const std::uint64_t h = d.h();
  const bool even_type = (d.family == 'D' && d.n % 2 == 0) || (d.family == 'E' && d.n != 6);
  if (characteristic == 2 && even_type) return {3 * m / gcd(h / 2, m), true};
  return {6 * m / gcd(h, m), d.family != 'A' && characteristic != 2};
}

#define PERI_INSTANTIATE_ZOO(K)                                                               \
  template AlgebraPtr<K> preprojective(const DynkinGraph&, const K&);                        \
  template Grading<K> half_grading(const AlgebraPtr<K>&, const DynkinGraph&, std::size_t);   \
  template Grading<K> path_length_grading(const AlgebraPtr<K>&, std::size_t);                \
  template Smash<K> mesh_algebra(const DynkinGraph&, std::size_t, const K&);                 \
  template AlgebraPtr<K> nakayama(std::size_t, std::size_t, const K&);                       \
  template Grading<K> nonstandard_d3m(std::size_t, const K&);                                \
  template SmashCorner<K> bprime_bdoubleprime(std::size_t, const K&);

PERI_INSTANTIATE_ZOO(Rationals)
PERI_INSTANTIATE_ZOO(FiniteField)

}  // namespace peri
