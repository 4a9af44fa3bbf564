#include "peri/quiver.hpp"

#include <set>

#include "peri/error.hpp"

namespace peri {

std::optional<std::size_t> Quiver::find_arrow(std::string_view name) const {
  for (std::size_t i = 0; i < arrows.size(); ++i)
    if (arrows[i].name == name) return i;
  return std::nullopt;
}

std::optional<std::size_t> Quiver::find_vertex(std::string_view name) const {
  for (std::size_t v = 0; v < vertex_count; ++v)
    if (vertex_name(v) == name) return v;
  return std::nullopt;
}

std::string Quiver::vertex_name(std::size_t v) const {
  if (v < vertex_names.size()) return vertex_names[v];
  return std::to_string(v + 1);
}

void Quiver::validate() const {
  if (!vertex_names.empty() && vertex_names.size() != vertex_count)
    throw InputError("quiver: vertex name count does not match vertex count");
  std::set<std::string> seen;
  for (std::size_t v = 0; v < vertex_count; ++v)
    if (!seen.insert(vertex_name(v)).second) throw InputError("quiver: duplicate vertex name " + vertex_name(v));
  seen.clear();
  for (const auto& a : arrows) {
    if (a.name.empty()) throw InputError("quiver: empty arrow name");
    if (!seen.insert(a.name).second) throw InputError("quiver: duplicate arrow name " + a.name);
    if (a.source >= vertex_count || a.target >= vertex_count)
      throw InputError("quiver: arrow " + a.name + " has an endpoint out of range");
  }
}

std::size_t path_target(const Quiver& q, const Monomial& p) {
  return p.trivial() ? p.vertex : q.arrows[p.arrows.front()].target;
}

std::size_t path_source(const Quiver& q, const Monomial& p) {
  return p.trivial() ? p.vertex : q.arrows[p.arrows.back()].source;
}

bool composable(const Quiver& q, const Monomial& p) {
  for (std::size_t i = 0; i + 1 < p.arrows.size(); ++i)
    if (q.arrows[p.arrows[i]].source != q.arrows[p.arrows[i + 1]].target) return false;
  return true;
}

std::string path_str(const Quiver& q, const Monomial& p) {
  if (p.trivial()) return "e" + q.vertex_name(p.vertex);
  std::string s;
  for (std::size_t i = 0; i < p.arrows.size(); ++i) {
    if (i) s += '*';
    s += q.arrows[p.arrows[i]].name;
  }
  return s;
}

std::string combination_str(const Quiver& q, const Combination& c) {
  if (c.terms.empty()) return "0";
  std::string s;
  for (std::size_t i = 0; i < c.terms.size(); ++i) {
    const auto& t = c.terms[i];
    mpq_class a = abs(t.coeff);
    if (i) s += sgn(t.coeff) < 0 ? " - " : " + ";
    else if (sgn(t.coeff) < 0) s += "-";
    if (a != 1) s += a.get_str() + " ";
    s += path_str(q, t.path);
  }
  return s;
}

void Presentation::validate() const {
  quiver.validate();
  for (const auto& r : relations) {
    if (r.terms.empty()) throw InputError("relation with no terms");
    std::optional<std::pair<std::size_t, std::size_t>> ends;
    for (const auto& t : r.terms) {
      for (auto a : t.path.arrows)
        if (a >= quiver.arrows.size()) throw InputError("relation refers to an unknown arrow");
      if (!composable(quiver, t.path)) throw InputError("non-composable path " + path_str(quiver, t.path));
      if (t.path.arrows.size() < 2)
        throw InputError("non-admissible relation: path " + path_str(quiver, t.path) + " has length below 2");
      std::pair e{path_target(quiver, t.path), path_source(quiver, t.path)};
      if (ends && *ends != e)
        throw InputError("relation " + combination_str(quiver, r) + " mixes paths with different endpoints");
      ends = e;
    }
  }
}

}  // namespace peri
