#include "peri/description.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace peri {

namespace {

struct LocalError {
  std::size_t offset;
  std::string what;
};

std::string_view trim(std::string_view s, std::size_t* lead = nullptr) {
  std::size_t a = 0;
  while (a < s.size() && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  std::size_t b = s.size();
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  if (lead) *lead = a;
  return s.substr(a, b - a);
}

bool is_number(std::string_view t) {
  if (t.empty()) return false;
  std::size_t slash = 0;
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (t[i] == '/') {
      if (i == 0 || i + 1 == t.size() || slash++) return false;
    } else if (!std::isdigit(static_cast<unsigned char>(t[i]))) {
      return false;
    }
  }
  return true;
}

Monomial path_at(const Quiver& q, const std::vector<std::pair<std::string_view, std::size_t>>& tokens,
                 std::string_view whole, std::size_t offset) {
  Monomial m;
  for (const auto& [tok, off] : tokens) {
    if (auto a = q.find_arrow(tok)) {
      m.arrows.push_back(static_cast<std::uint32_t>(*a));
      continue;
    }
    if (tok.size() > 1 && tok[0] == 'e') {
      if (auto v = q.find_vertex(tok.substr(1))) {
        if (tokens.size() != 1) throw LocalError{off, "idempotent " + std::string(tok) + " inside a product"};
        m.vertex = *v;
        return m;
      }
    }
    throw LocalError{off, "unknown arrow '" + std::string(tok) + "'"};
  }
  if (m.arrows.empty()) throw LocalError{offset, "empty path"};
  if (!composable(q, m)) throw LocalError{offset, "non-composable path " + std::string(whole)};
  return m;
}

Combination combination_at(const Quiver& q, std::string_view text, std::size_t base) {
  Combination c;
  std::size_t i = 0;
  bool first = true;
  while (i < text.size()) {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    if (i == text.size()) break;
    int sign = 1;
    if (text[i] == '+' || text[i] == '-') {
      sign = text[i] == '-' ? -1 : 1;
      ++i;
    } else if (!first) {
      throw LocalError{base + i, "expected '+' or '-'"};
    }
    std::size_t start = i;
    while (i < text.size() && text[i] != '+' && text[i] != '-') ++i;
    std::size_t lead = 0;
    auto term = trim(text.substr(start, i - start), &lead);
    const std::size_t term_off = base + start + lead;
    if (term.empty()) throw LocalError{term_off, "missing term"};
    std::vector<std::pair<std::string_view, std::size_t>> tokens;
    std::size_t j = 0;
    while (j < term.size()) {
      while (j < term.size() && (term[j] == '*' || std::isspace(static_cast<unsigned char>(term[j])))) ++j;
      std::size_t s = j;
      while (j < term.size() && term[j] != '*' && !std::isspace(static_cast<unsigned char>(term[j]))) ++j;
      if (j > s) tokens.push_back({term.substr(s, j - s), term_off + s});
    }
    mpq_class coeff(sign);
    std::size_t k = 0;
    while (k < tokens.size() && is_number(tokens[k].first)) {
      mpq_class x;
      if (x.set_str(std::string(tokens[k].first), 10) != 0) throw LocalError{tokens[k].second, "bad number"};
      x.canonicalize();
      coeff *= x;
      ++k;
    }
    std::vector<std::pair<std::string_view, std::size_t>> rest(tokens.begin() + static_cast<long>(k), tokens.end());
    if (rest.empty()) {
      if (sgn(coeff) == 0) {
        first = false;
        continue;  // literal 0
      }
      throw LocalError{term_off, "scalar term without a path"};
    }
    auto path = path_at(q, rest, term, term_off);
    if (sgn(coeff) != 0) c.terms.push_back({coeff, std::move(path)});
    first = false;
  }
  return c;
}

Combination combination_or_throw(const Quiver& q, std::string_view text) {
  try {
    return combination_at(q, text, 0);
  } catch (const LocalError& e) {
    throw InputError(e.what + " (column " + std::to_string(e.offset + 1) + ")");
  }
}

std::size_t parse_vertex(const Quiver& q, std::string_view t, std::size_t off) {
  if (auto v = q.find_vertex(t)) return *v;
  throw LocalError{off, "unknown vertex '" + std::string(t) + "'"};
}

}  // namespace

Monomial parse_path(const Quiver& q, std::string_view text) {
  auto c = combination_or_throw(q, text);
  if (c.terms.size() != 1 || c.terms[0].coeff != 1) throw InputError("expected a single path: " + std::string(text));
  return c.terms[0].path;
}

Combination parse_combination(const Quiver& q, std::string_view text) { return combination_or_throw(q, text); }

AlgebraDescription parse_description(std::string_view text, std::string name) {
  AlgebraDescription d;
  d.name = std::move(name);
  bool have_field = false, have_vertices = false;
  std::string section;
  std::vector<std::pair<std::string, std::size_t>> relation_lines, grading_lines;
  std::size_t line_no = 0;
  std::istringstream in{std::string(text)};
  std::string raw;
  auto fail = [&](std::size_t col, const std::string& what) { throw ParseError(line_no, col + 1, what); };
  std::optional<std::size_t> group_line;
  std::string group_text;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line(raw);
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    std::size_t lead = 0;
    auto body = trim(line, &lead);
    if (body.empty()) continue;
    if (body.front() == '[') {
      if (body.back() != ']') fail(lead, "unterminated section header");
      section = std::string(trim(body.substr(1, body.size() - 2)));
      if (section != "field" && section != "quiver" && section != "relations" && section != "grading")
        fail(lead, "unknown section [" + section + "]");
      continue;
    }
    if (section.empty()) fail(lead, "content before any section header");
    try {
      if (section == "field") {
        if (have_field) fail(lead, "field given twice");
        try {
          d.field = FieldSpec::parse(body);
        } catch (const InputError& e) {
          fail(lead, e.what());
        }
        have_field = true;
      } else if (section == "quiver") {
        auto& q = d.presentation.quiver;
        if (body.rfind("vertices", 0) == 0) {
          if (have_vertices) fail(lead, "vertices given twice");
          std::istringstream ws{std::string(body.substr(8))};
          std::vector<std::string> names;
          for (std::string w; ws >> w;) names.push_back(w);
          if (names.empty()) fail(lead, "vertices needs a count or names");
          if (names.size() == 1 && is_number(names[0]) && names[0].find('/') == std::string::npos) {
            q.vertex_count = std::stoul(names[0]);
            if (q.vertex_count == 0 || q.vertex_count > 10000) fail(lead + 9, "bad vertex count");
          } else {
            q.vertex_count = names.size();
            q.vertex_names = names;
          }
          have_vertices = true;
          continue;
        }
        if (!have_vertices) fail(lead, "arrow before vertices");
        auto colon = body.find(':');
        auto arrow_pos = body.find("->");
        if (colon == std::string_view::npos || arrow_pos == std::string_view::npos || arrow_pos < colon)
          fail(lead, "expected 'name: source -> target'");
        std::size_t l1 = 0, l2 = 0, l3 = 0;
        auto nm = trim(body.substr(0, colon), &l1);
        auto src = trim(body.substr(colon + 1, arrow_pos - colon - 1), &l2);
        auto tgt = trim(body.substr(arrow_pos + 2), &l3);
        if (nm.empty()) fail(lead, "missing arrow name");
        for (char c : nm)
          if (std::isspace(static_cast<unsigned char>(c)) || c == '*' || c == '+' || c == '-' || c == '=')
            fail(lead + l1, "invalid arrow name '" + std::string(nm) + "'");
        if (q.find_arrow(nm)) fail(lead + l1, "duplicate arrow '" + std::string(nm) + "'");
        Arrow a{std::string(nm), parse_vertex(q, src, lead + colon + 1 + l2),
                parse_vertex(q, tgt, lead + arrow_pos + 2 + l3)};
        q.arrows.push_back(std::move(a));
      } else if (section == "relations") {
        relation_lines.push_back({std::string(line), line_no});
      } else {
        if (body.rfind("group", 0) == 0) {
          group_text = std::string(trim(body.substr(5)));
          group_line = line_no;
        } else {
          grading_lines.push_back({std::string(line), line_no});
        }
      }
    } catch (const LocalError& e) {
      fail(e.offset, e.what);
    }
  }
  if (!have_field) throw ParseError(line_no + 1, 1, "missing [field] section");
  if (!have_vertices) throw ParseError(line_no + 1, 1, "missing vertices in [quiver]");
  const auto& q = d.presentation.quiver;
  for (const auto& [l, n] : relation_lines) {
    line_no = n;
    try {
      auto eq = l.find('=');
      auto lhs = combination_at(q, std::string_view(l).substr(0, eq), 0);
      if (eq != std::string::npos) {
        auto rhs = combination_at(q, std::string_view(l).substr(eq + 1), eq + 1);
        for (auto& t : rhs.terms) lhs.terms.push_back({-t.coeff, std::move(t.path)});
      }
      if (lhs.terms.empty()) fail(0, "relation is zero");
      d.presentation.relations.push_back(std::move(lhs));
    } catch (const LocalError& e) {
      fail(e.offset, e.what);
    }
  }
  try {
    d.presentation.validate();
  } catch (const InputError& e) {
    throw ParseError(line_no, 1, e.what());
  }
  if (group_line || !grading_lines.empty()) {
    if (!group_line) throw ParseError(grading_lines.front().second, 1, "grading without a group line");
    GradingSpec g;
    line_no = *group_line;
    try {
      g.group = FiniteGroup::parse(group_text);
    } catch (const InputError& e) {
      fail(0, e.what());
    }
    for (const auto& [l, n] : grading_lines) {
      line_no = n;
      auto eq = l.rfind('=');
      if (eq == std::string::npos) fail(0, "expected 'expression = degree'");
      try {
        auto lhs = combination_at(q, std::string_view(l).substr(0, eq), 0);
        std::size_t lead = 0;
        auto deg_text = trim(std::string_view(l).substr(eq + 1), &lead);
        std::size_t deg = 0;
        try {
          deg = g.group.element(deg_text);
        } catch (const InputError& e) {
          fail(eq + 1 + lead, e.what());
        }
        if (lhs.terms.size() == 1 && lhs.terms[0].coeff == 1 && lhs.terms[0].path.arrows.size() == 1)
          g.arrow_degrees.push_back({lhs.terms[0].path.arrows[0], deg});
        else
          g.generator_degrees.push_back({std::move(lhs), deg});
      } catch (const LocalError& e) {
        fail(e.offset, e.what);
      }
    }
    if (!g.generator_degrees.empty()) {
      // Arrow lines in a generator grading are generators too.
      for (auto& [a, deg] : g.arrow_degrees)
        g.generator_degrees.push_back({Combination{{Term{mpq_class(1), Monomial{{static_cast<std::uint32_t>(a)}, 0}}}}, deg});
      g.arrow_degrees.clear();
    }
    d.grading = std::move(g);
  }
  return d;
}

AlgebraDescription load_description(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  auto stem = path.substr(path.find_last_of('/') == std::string::npos ? 0 : path.find_last_of('/') + 1);
  if (auto dot = stem.rfind('.'); dot != std::string::npos) stem = stem.substr(0, dot);
  return parse_description(ss.str(), stem);
}

std::string render_description(const AlgebraDescription& d) {
  std::ostringstream os;
  const auto& q = d.presentation.quiver;
  os << "[field]\n" << d.field.str() << "\n\n[quiver]\nvertices";
  if (q.vertex_names.empty()) os << ' ' << q.vertex_count;
  else
    for (const auto& n : q.vertex_names) os << ' ' << n;
  os << '\n';
  for (const auto& a : q.arrows) os << a.name << ": " << q.vertex_name(a.source) << " -> " << q.vertex_name(a.target) << '\n';
  os << "\n[relations]\n";
  for (const auto& r : d.presentation.relations) os << combination_str(q, r) << '\n';
  if (d.grading) {
    os << "\n[grading]\ngroup " << d.grading->group.label() << '\n';
    for (const auto& [a, g] : d.grading->arrow_degrees) os << q.arrows[a].name << " = " << d.grading->group.name(g) << '\n';
    for (const auto& [c, g] : d.grading->generator_degrees) os << combination_str(q, c) << " = " << d.grading->group.name(g) << '\n';
  }
  return os.str();
}

}  // namespace peri
