#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace peri {

/// Finite group by multiplication table; element 0 is the identity.
class FiniteGroup {
 public:
  FiniteGroup() : FiniteGroup(cyclic(1)) {}
  /// Throws InputError when the table is not a group with identity 0.
  FiniteGroup(std::vector<std::vector<std::size_t>> table, std::vector<std::string> names, std::string label);

  static FiniteGroup cyclic(std::size_t m);
  static FiniteGroup product(const FiniteGroup& g, const FiniteGroup& h);
  /// "Z/m", "Z/m x Z/n", ...
  static FiniteGroup parse(std::string_view spec);

  std::size_t order() const { return table_.size(); }
  std::size_t identity() const { return 0; }
  std::size_t mul(std::size_t a, std::size_t b) const { return table_[a][b]; }
  std::size_t inv(std::size_t a) const { return inverse_[a]; }
  std::size_t pow(std::size_t a, long long e) const;
  std::size_t element_order(std::size_t a) const;
  std::size_t exponent() const;
  bool is_abelian() const;
  bool is_central(std::size_t a) const;
  const std::string& name(std::size_t a) const { return names_[a]; }
  /// Accepts an element name, or an integer k meaning the k-th power of the
  /// first generator for cyclic groups.
  std::size_t element(std::string_view name) const;
  const std::string& label() const { return label_; }
  const std::vector<std::vector<std::size_t>>& table() const { return table_; }

 private:
  std::vector<std::vector<std::size_t>> table_;
  std::vector<std::size_t> inverse_;
  std::vector<std::string> names_;
  std::string label_;
};

}  // namespace peri
