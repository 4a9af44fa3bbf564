#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "peri/graded.hpp"
#include "peri/module.hpp"
#include "peri/zoo.hpp"

namespace peri {

/// Per-simple syzygy periods. periods[i] is 0 when S_i is projective and
/// nullopt when no period was found within the bound.
struct SimpleProfile {
  std::vector<std::optional<std::size_t>> periods;
  /// simple_at[i][n-1]: Omega^n S_i is simple, for n = 1..period (or bound).
  std::vector<std::vector<bool>> simple_at;
  bool self_injective = false;
  std::size_t bound = 0;

  /// lcm of the periods, or nullopt when one is missing or projective.
  std::optional<std::size_t> lcm() const;
  /// Every Omega^n S_i is simple (a necessary condition for a twist at n).
  bool all_simple_at(std::size_t n) const;
};

template <class K>
SimpleProfile simple_period_profile(const AlgebraPtr<K>& a, std::size_t bound, std::uint64_t seed = 1);

/// Bimodule resolution of A grown on demand and checked against Ext.
template <class K>
class BimoduleResolver {
 public:
  explicit BimoduleResolver(AlgebraPtr<K> a, AlgebraPtr<K> env = nullptr);
  /// Omega^n_{A^e}(A) as a bimodule.
  BimoduleRep<K> syzygy(std::size_t n);
  const ResolutionLedger<K>& ledger() const { return ledger_; }
  const AlgebraPtr<K>& envelope() const { return env_; }
  /// Happel cross-check of everything computed so far.
  void check() const;

 private:
  AlgebraPtr<K> a_, env_;
  ResolutionLedger<K> ledger_;
};

/// sigma with M isomorphic to 1_A_sigma, found from a left generator w of M
/// via w y = sigma(y) w. nullopt when M is not of that shape. Basic algebras only.
template <class K>
std::optional<Automorphism<K>> twist_of(const BimoduleRep<K>& m);

/// Omega^n_{A^e}(A) = 1_A_sigma. Throws InputError("twist impossible at n")
/// when some Omega^n S_i is not simple.
template <class K>
std::optional<Automorphism<K>> detect_twist(const AlgebraPtr<K>& a, std::size_t n, std::uint64_t seed = 1);

template <class K>
struct TwistEvent {
  std::size_t n = 0;
  Automorphism<K> sigma;
  bool inner = false;
};

template <class K>
struct PeriodReport {
  std::string algebra, field;
  std::size_t bound = 0;
  std::uint64_t seed = 1;
  SimpleProfile simples;
  std::vector<TwistEvent<K>> twists;
  std::optional<std::size_t> period;
  /// Set when the period was re-checked by iso against 1_A_1.
  bool verified = false;
  std::vector<std::size_t> syzygy_dims;  // Omega^n_{A^e}(A), n = 0..last computed
  std::string note;

  std::string text() const;
  /// algebra, quantity, value rows.
  std::string tsv() const;
};

template <class K>
PeriodReport<K> period(const AlgebraPtr<K>& a, std::size_t bound, std::uint64_t seed = 1);

// ---------------------------------------------------------------------------

struct DivisibilityVerdict {
  std::optional<std::size_t> p_a, p_b;
  std::size_t group_order = 1, exponent = 1;
  bool b_divides = false;  // p_B | p_A exp(G)
  bool a_divides = false;  // p_A | p_B |G|
  bool pass() const { return p_a && p_b && a_divides && b_divides; }
  std::string text() const;
};

/// Radical gradings with B connected; throws InputError otherwise.
template <class K>
DivisibilityVerdict verify_thm37(const Grading<K>& gr, std::size_t bound, std::uint64_t seed = 1);

struct NonstandardVerdict {
  std::size_t m = 0;
  std::optional<std::size_t> p_a, p_bprime;
  bool sandwich = false;  // (2m-1) | p_A | 4(2m-1)
  bool phi_ok = false;
  std::vector<std::size_t> blocks;
  // Twist at n = 3, m = 2 only.
  bool twist_found = false, twist_inner = false, twist_square_inner = false, matches_reference = false;
  bool pass() const;
  std::string text() const;
};

/// Characteristic 2.
NonstandardVerdict verify_thm61(std::size_t m, const FiniteField& field, std::size_t bound, std::uint64_t seed = 1);

/// The automorphism a1 -> a1 (e1 + b), a2 -> (e1 + b) a2, b -> b + b^2 + b^3
/// of the nonstandard algebra at m = 2.
Automorphism<FiniteField> nonstandard_reference_twist(const AlgebraPtr<FiniteField>& a);

struct MeshVerdict {
  std::string representative, mesh;
  std::optional<std::size_t> p_a, p_gamma;
  bool schurian = false;
  bool divides = false;  // p_Gamma | 3 p_A
  bool equal = false;    // p_Gamma = 3 p_A
  std::string note;
  bool pass() const { return p_a && p_gamma && divides && (!schurian || equal); }
  std::string text() const;
};

/// Types (A_n, s/n, 1), represented by the Nakayama algebra with s simples and
/// Loewy length n + 1, against the mesh algebra of Z A_n / tau^s.
template <class K>
MeshVerdict verify_thm42(const DynkinGraph& d, std::uint64_t s, const K& field, std::size_t bound,
                         std::uint64_t seed = 1);

/// A and its dual as bimodules.
template <class K>
bool is_symmetric(const AlgebraPtr<K>& a, std::uint64_t seed = 1);
/// p_A - 1 for symmetric algebras; throws InputError otherwise.
template <class K>
std::optional<std::size_t> stable_cy_dimension(const AlgebraPtr<K>& a, std::size_t bound, std::uint64_t seed = 1);

/// Degree-e generation of Omega^r_{A^e}(A) (over A^e # k[G]*) against
/// Omega^r(S_i) = S_i as graded modules, for r = 1..up_to. The two agree
/// when every Omega^r(S_i) = S_i ungraded (`applies`). Abelian G, radical grading.
struct GradedGenerationRow {
  std::size_t r = 0;
  bool applies = false;
  bool generated_in_e = false;
  bool simples_fixed = false;
};
template <class K>
std::vector<GradedGenerationRow> graded_generation(const Grading<K>& gr, std::size_t up_to, std::uint64_t seed = 1);

}  // namespace peri
