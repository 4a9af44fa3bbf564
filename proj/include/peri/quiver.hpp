#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace peri {

struct Arrow {
  std::string name;
  std::size_t source = 0, target = 0;
};

struct Quiver {
  std::size_t vertex_count = 0;
  /// Optional display names; defaults to "1".."n".
  std::vector<std::string> vertex_names;
  std::vector<Arrow> arrows;

  std::optional<std::size_t> find_arrow(std::string_view name) const;
  std::optional<std::size_t> find_vertex(std::string_view name) const;
  std::string vertex_name(std::size_t v) const;
  /// Throws InputError on duplicate names or out-of-range endpoints.
  void validate() const;
};

/// A path in written order. "a*b" is stored {a, b}: b is traversed first.
/// A trivial path (no arrows) stands for the idempotent at `vertex`.
struct Monomial {
  std::vector<std::uint32_t> arrows;
  std::size_t vertex = 0;

  bool trivial() const { return arrows.empty(); }
  bool operator==(const Monomial&) const = default;
};

/// Left end (the target of the first written arrow).
std::size_t path_target(const Quiver& q, const Monomial& p);
/// Right end (the source of the last written arrow).
std::size_t path_source(const Quiver& q, const Monomial& p);
bool composable(const Quiver& q, const Monomial& p);
std::string path_str(const Quiver& q, const Monomial& p);

struct Term {
  mpq_class coeff;
  Monomial path;
};

/// A linear combination of paths. Used for relations and for generator
/// expressions such as e1 + b.
struct Combination {
  std::vector<Term> terms;
};

std::string combination_str(const Quiver& q, const Combination& c);

struct Presentation {
  Quiver quiver;
  std::vector<Combination> relations;

  /// Throws InputError for non-composable paths, mixed endpoints and
  /// relations containing a path of length below 2.
  void validate() const;
};

}  // namespace peri
