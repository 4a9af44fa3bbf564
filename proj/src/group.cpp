#include "peri/group.hpp"

#include <numeric>

#include "peri/error.hpp"

namespace peri {

FiniteGroup::FiniteGroup(std::vector<std::vector<std::size_t>> table, std::vector<std::string> names,
                         std::string label)
    : table_(std::move(table)), names_(std::move(names)), label_(std::move(label)) {
  const std::size_t n = table_.size();
  if (n == 0) throw InputError("group: empty table");
  if (names_.size() != n) throw InputError("group: one name per element required");
  for (const auto& row : table_) {
    if (row.size() != n) throw InputError("group: table is not square");
    for (auto x : row)
      if (x >= n) throw InputError("group: table entry out of range");
  }
  for (std::size_t a = 0; a < n; ++a)
    if (table_[0][a] != a || table_[a][0] != a) throw InputError("group: element 0 is not the identity");
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        if (table_[table_[a][b]][c] != table_[a][table_[b][c]]) throw InputError("group: not associative");
  inverse_.assign(n, n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (table_[a][b] == 0 && table_[b][a] == 0) inverse_[a] = b;
  for (auto i : inverse_)
    if (i == n) throw InputError("group: missing inverse");
}

FiniteGroup FiniteGroup::cyclic(std::size_t m) {
  if (m == 0) throw InputError("group: Z/0 is not finite");
  std::vector<std::vector<std::size_t>> t(m, std::vector<std::size_t>(m));
  std::vector<std::string> names;
  for (std::size_t a = 0; a < m; ++a) {
    names.push_back(std::to_string(a));
    for (std::size_t b = 0; b < m; ++b) t[a][b] = (a + b) % m;
  }
  return FiniteGroup(std::move(t), std::move(names), "Z/" + std::to_string(m));
}

FiniteGroup FiniteGroup::product(const FiniteGroup& g, const FiniteGroup& h) {
  const std::size_t n = g.order() * h.order();
  std::vector<std::vector<std::size_t>> t(n, std::vector<std::size_t>(n));
  std::vector<std::string> names;
  for (std::size_t a = 0; a < n; ++a) {
    names.push_back("(" + g.name(a / h.order()) + "," + h.name(a % h.order()) + ")");
    for (std::size_t b = 0; b < n; ++b)
      t[a][b] = g.mul(a / h.order(), b / h.order()) * h.order() + h.mul(a % h.order(), b % h.order());
  }
  return FiniteGroup(std::move(t), std::move(names), g.label() + " x " + h.label());
}

FiniteGroup FiniteGroup::parse(std::string_view spec) {
  std::vector<FiniteGroup> factors;
  std::size_t pos = 0;
  while (pos <= spec.size()) {
    auto next = spec.find('x', pos);
    auto part = spec.substr(pos, next == std::string_view::npos ? std::string_view::npos : next - pos);
    while (!part.empty() && part.front() == ' ') part.remove_prefix(1);
    while (!part.empty() && part.back() == ' ') part.remove_suffix(1);
    if (part.size() < 3 || part.substr(0, 2) != "Z/") throw InputError("group: expected Z/m in '" + std::string(spec) + "'");
    std::size_t m = 0;
    for (char c : part.substr(2)) {
      if (c < '0' || c > '9') throw InputError("group: bad order in '" + std::string(part) + "'");
      m = m * 10 + static_cast<std::size_t>(c - '0');
      if (m > 100000) throw InputError("group: order too large");
    }
    factors.push_back(cyclic(m));
    if (next == std::string_view::npos) break;
    pos = next + 1;
  }
  FiniteGroup g = factors.front();
  for (std::size_t i = 1; i < factors.size(); ++i) g = product(g, factors[i]);
  return g;
}

std::size_t FiniteGroup::pow(std::size_t a, long long e) const {
  if (e < 0) return pow(inv(a), -e);
  std::size_t r = 0;
  for (long long i = 0; i < e; ++i) r = mul(r, a);
  return r;
}

std::size_t FiniteGroup::element_order(std::size_t a) const {
  std::size_t k = 1;
  for (std::size_t x = a; x != 0; x = mul(x, a)) ++k;
  return k;
}

std::size_t FiniteGroup::exponent() const {
  std::size_t e = 1;
  for (std::size_t a = 0; a < order(); ++a) e = std::lcm(e, element_order(a));
  return e;
}

bool FiniteGroup::is_abelian() const {
  for (std::size_t a = 0; a < order(); ++a)
    if (!is_central(a)) return false;
  return true;
}

bool FiniteGroup::is_central(std::size_t a) const {
  for (std::size_t b = 0; b < order(); ++b)
    if (mul(a, b) != mul(b, a)) return false;
  return true;
}

std::size_t FiniteGroup::element(std::string_view name) const {
  for (std::size_t a = 0; a < order(); ++a)
    if (names_[a] == name) return a;
  if (label_.find(' ') == std::string::npos && !name.empty()) {
    bool neg = name.front() == '-';
    long long k = 0;
    auto digits = name.substr(neg ? 1 : 0);
    bool ok = !digits.empty();
    for (char c : digits) {
      if (c < '0' || c > '9') ok = false;
      else k = (k * 10 + (c - '0')) % static_cast<long long>(order());
    }
    if (ok) return pow(1 % order(), neg ? -k : k);
  }
  throw InputError("group " + label_ + ": unknown element '" + std::string(name) + "'");
}

}  // namespace peri
