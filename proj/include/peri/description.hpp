#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "peri/error.hpp"
#include "peri/field.hpp"
#include "peri/group.hpp"
#include "peri/quiver.hpp"

namespace peri {

/// Syntax or semantic error in an algebra description, with a 1-based position.
class ParseError : public InputError {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& what)
      : InputError("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_, column_;
};

struct GradingSpec {
  FiniteGroup group;
  /// (arrow index, group element); arrows left out have degree e.
  std::vector<std::pair<std::size_t, std::size_t>> arrow_degrees;
  /// Generator expressions such as e1 + b, each with its degree.
  std::vector<std::pair<Combination, std::size_t>> generator_degrees;

  bool by_arrows() const { return generator_degrees.empty(); }
};

struct AlgebraDescription {
  std::string name;
  FieldSpec field;
  Presentation presentation;
  std::optional<GradingSpec> grading;
};

/// Format: sections [field], [quiver], [relations], [grading]; '#' starts a
/// comment. Quiver lines are "vertices N" (or a list of names) and
/// "name: source -> target". Relations are "lhs = rhs" or "lhs" meaning = 0,
/// with paths written as "a*b" (b first). Grading lines are "group Z/m" and
/// "expr = degree".
AlgebraDescription parse_description(std::string_view text, std::string name = "");
AlgebraDescription load_description(const std::string& path);
std::string render_description(const AlgebraDescription& d);

Monomial parse_path(const Quiver& q, std::string_view text);
Combination parse_combination(const Quiver& q, std::string_view text);

}  // namespace peri
