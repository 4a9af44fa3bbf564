#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "peri/description.hpp"
#include "peri/graded.hpp"

namespace peri {

/// Dynkin graphs A_n, D_n, E_6..8 and the graph L_n (A_n with a loop at its
/// first vertex). Vertices are 0-based here and 1-based in descriptions.
struct DynkinGraph {
  char family = 'A';
  std::size_t n = 1;
  std::vector<std::pair<std::size_t, std::size_t>> edges;

  /// Throws InputError for anything that is not Dynkin or L_n.
  static DynkinGraph make(char family, std::size_t n);
  static DynkinGraph parse(std::string_view family, std::size_t n);
  bool has_loop() const { return family == 'L'; }
  /// n, 2n-3, 11, 17, 29; h = m + 1. Not defined for L_n.
  std::size_t m() const;
  std::size_t h() const { return m() + 1; }
  std::string str() const;
};

/// Doubled quiver with arrows a<k>: u -> v and a<k>bar: v -> u for the k-th
/// edge (u < v); L_n adds the loop eps with eps-bar = eps. Relations
/// sum over s(alpha) = u of alphabar*alpha, without signs.
AlgebraDescription preprojective_description(const DynkinGraph& d, const FieldSpec& field);
template <class K>
AlgebraPtr<K> preprojective(const DynkinGraph& d, const K& field);
/// Z/m grading with a<k> in degree 0 and a<k>bar in degree 1.
template <class K>
Grading<K> half_grading(const AlgebraPtr<K>& p, const DynkinGraph& d, std::size_t m);
/// Every arrow in degree 1 of Z/m.
template <class K>
Grading<K> path_length_grading(const AlgebraPtr<K>& a, std::size_t m);
/// Mesh algebra of Z Delta / tau^m, as the smash product of the half-graded
/// preprojective algebra with Z/m.
template <class K>
Smash<K> mesh_algebra(const DynkinGraph& d, std::size_t m, const K& field);

/// Cyclic quiver on n vertices modulo all paths of length l.
AlgebraDescription nakayama_description(std::size_t n, std::size_t l, const FieldSpec& field);
template <class K>
AlgebraPtr<K> nakayama(std::size_t n, std::size_t l, const K& field);

/// Cycle a1: 1 -> 2, ..., am: m -> 1 with loop b at 1, relations
/// am*...*a1 = b*b, every path of m+1 arrows a_i...a_i is zero, and
/// a1*am = a1*b*am. Graded by Z/2 with e1 + b odd and the a_i even.
AlgebraDescription nonstandard_description(std::size_t m, const FieldSpec& field);
/// Characteristic 2 only. The grading's rebase map starts at the algebra of
/// the description.
template <class K>
Grading<K> nonstandard_d3m(std::size_t m, const K& field);

/// Vertices 1..m and 2p..mp; arrows a_i around 1..m and ap_i around
/// 1, 2p, ..., mp. Relations: m+1 cycles of a and of ap vanish,
/// ap1*am = a1*apm = 0, apm*...*ap1 = am*...*a1.
AlgebraDescription bdoubleprime_description(std::size_t m, const FieldSpec& field);

template <class K>
struct SmashCorner {
  Smash<K> smash;
  AlgebraPtr<K> bprime;         // corner at 1 - e_1 p_1
  AlgebraPtr<K> bdoubleprime;
  AlgebraMap<K> phi;            // bdoubleprime -> bprime, verified bijective
};

template <class K>
SmashCorner<K> bprime_bdoubleprime(std::size_t m, const K& field);

// ---------------------------------------------------------------------------

/// (Delta, f, t) with f = f_num / f_den.
struct SelfInjectiveType {
  DynkinGraph tree;
  std::uint64_t f_num = 1, f_den = 1;
  std::size_t t = 1;
  bool nonstandard = false;

  std::string str() const;
};

struct Table52Entry {
  std::string row;   // e.g. "(A_n, s/n, 1)"
  std::string cases; // the additional-cases column that applied
  std::vector<std::uint64_t> candidates;
  bool functorial_only = false;
};

/// Throws InputError when the type is not a row of the table.
Table52Entry table52(const SelfInjectiveType& type, unsigned characteristic);

struct MeshPeriod {
  std::uint64_t value = 0;
  /// Equality proven; otherwise the value is an upper bound (a multiple of the period).
  bool exact = false;
};

MeshPeriod mesh_period_formula(const DynkinGraph& d, std::uint64_t m, unsigned characteristic);

}  // namespace peri
