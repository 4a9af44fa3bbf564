#pragma once

#include <memory>
#include <random>
#include <string>

#include "peri/algebra.hpp"
#include "peri/description.hpp"

namespace testing {

template <class K>
peri::AlgebraPtr<K> algebra_from(const K& field, const std::string& text, const std::string& name = "test") {
  auto d = peri::parse_description(text, name);
  return std::make_shared<const peri::Algebra<K>>(peri::build_algebra(d.presentation, field, 64, name));
}

inline std::string kx2_text(const char* field = "Q") {
  return std::string("[field]\n") + field + "\n[quiver]\nvertices 1\nx: 1 -> 1\n[relations]\nx*x\n";
}

inline std::string pa2_text(const char* field = "Q") {
  return std::string("[field]\n") + field +
         "\n[quiver]\nvertices 2\na: 1 -> 2\nab: 2 -> 1\n[relations]\nab*a\na*ab\n";
}

/// The nonstandard algebra at m = 2 over GF(2).
inline std::string d3m2_text() {
  return "[field]\nGF(2)\n[quiver]\nvertices 2\na1: 1 -> 2\na2: 2 -> 1\nb: 1 -> 1\n"
         "[relations]\na2*a1 = b*b\na1*a2*a1\na2*a1*a2\na1*a2 = a1*b*a2\n";
}

template <class K>
peri::Matrix<K> random_matrix(const K& f, std::mt19937_64& rng, std::size_t r, std::size_t c, int zero_bias) {
  peri::Matrix<K> m(f, r, c);
  std::uniform_int_distribution<int> coin(0, 9);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j)
      if (coin(rng) >= zero_bias) m(i, j) = f.random(rng, 5);
  return m;
}

}  // namespace testing
