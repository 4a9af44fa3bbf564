#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "peri/algebra.hpp"

namespace peri {

/// Finite-dimensional right module. The basis is vertex-homogeneous:
/// basis vector i lies in M e_{vertex[i]}. Generators act on row vectors,
/// m |-> m * action[g]; the action of an arbitrary basis element is derived
/// through the spanning trees of the algebra.
template <class K>
struct ModuleRep {
  AlgebraPtr<K> algebra;
  std::vector<std::uint32_t> vertex;
  std::vector<SparseMatrix<K>> action;

  std::size_t dim() const { return vertex.size(); }
  const K& field() const { return algebra->field(); }
  std::vector<std::size_t> dimension_vector() const;
};

/// Builds a module from generator actions, changing to a vertex-homogeneous
/// basis when the given one is not. Throws InputError when the idempotent
/// generators do not act as orthogonal idempotents summing to 1.
template <class K>
ModuleRep<K> make_module(AlgebraPtr<K> a, std::vector<Matrix<K>> generator_actions);

/// x * b for x in M e_v and every b in e_v A, indexed like tree(v).basis.
template <class K>
std::vector<SparseVec<K>> orbit(const ModuleRep<K>& m, const SparseVec<K>& x, std::size_t v);
/// Matrix of right multiplication by the algebra basis element b.
template <class K>
SparseMatrix<K> basis_action(const ModuleRep<K>& m, std::size_t b);
/// Exhaustive module-axiom check over basis pairs; throws ConsistencyError.
template <class K>
void check_module(const ModuleRep<K>& m);

template <class K>
ModuleRep<K> simple(AlgebraPtr<K> a, std::size_t v);
template <class K>
ModuleRep<K> indec_projective(AlgebraPtr<K> a, std::size_t v);
template <class K>
ModuleRep<K> zero_module(AlgebraPtr<K> a);
template <class K>
ModuleRep<K> direct_sum(const ModuleRep<K>& x, const ModuleRep<K>& y);
/// Subspace of M e_v-homogeneous vectors closed under the action.
template <class K>
ModuleRep<K> submodule(const ModuleRep<K>& m, const std::vector<SparseVec<K>>& basis);

/// span of m * r over the radical generators r.
template <class K>
Subspace<K> radical_of(const ModuleRep<K>& m);

template <class K>
struct ProjectivePresentation {
  ModuleRep<K> cover;
  std::vector<std::uint32_t> summands;    // vertex v of each e_vA in the cover
  std::vector<std::uint32_t> offsets;     // first cover coordinate of each summand
  std::vector<std::uint32_t> top;         // module basis vector sent from e_v of each summand
  Matrix<K> surjection;                   // dim cover x dim M
  ModuleRep<K> kernel;                    // the syzygy
  Matrix<K> inclusion;                    // dim kernel x dim cover
  std::vector<std::uint32_t> kernel_pivots;  // kernel coordinate k is entry kernel_pivots[k]
  std::vector<Vec<K>> preimages;          // a cover vector over each module basis vector
};

/// Minimal projective cover; the algebra must have a top map.
template <class K>
ProjectivePresentation<K> projective_cover(const ModuleRep<K>& m);
/// Throws ConsistencyError unless the presentation is exact and minimal.
template <class K>
void check_presentation(const ModuleRep<K>& m, const ProjectivePresentation<K>& p);

template <class K>
struct ResolutionLedger {
  std::vector<ModuleRep<K>> syzygies;              // syzygies[0] = M
  std::vector<ProjectivePresentation<K>> steps;    // steps[r] covers syzygies[r]
  std::vector<std::vector<std::size_t>> multiplicity;  // multiplicity[r][v]
};

/// Steps 0..n of a minimal projective resolution.
template <class K>
ResolutionLedger<K> resolve(const ModuleRep<K>& m, std::size_t steps, bool verify = false);
template <class K>
std::size_t ext_dim(AlgebraPtr<K> a, std::size_t i, std::size_t j, std::size_t r);
/// ext table for r: t[i][j] = dim Ext^r(S_i, S_j), for r = 0..up_to.
template <class K>
std::vector<std::vector<std::vector<std::size_t>>> ext_tables(AlgebraPtr<K> a, std::size_t up_to);

/// Basis of Hom_A(M, N) as dim M x dim N matrices T with (m a) T = (m T) a.
template <class K>
std::vector<Matrix<K>> hom_space(const ModuleRep<K>& m, const ModuleRep<K>& n);

template <class K>
struct IsoResult {
  bool isomorphic = false;
  /// Set when an intertwiner exists over the base field of the modules.
  std::optional<Matrix<K>> intertwiner;
  /// Degree over the prime field at which the search succeeded.
  unsigned field_degree = 0;
  explicit operator bool() const { return isomorphic; }
};

template <class K>
IsoResult<K> iso(const ModuleRep<K>& m, const ModuleRep<K>& n, std::uint64_t seed = 1);
template <class K>
bool is_projective(const ModuleRep<K>& m);

/// Bimodules are right modules over A^e. Element x (x) y acts by m |-> x m y.
template <class K>
struct BimoduleRep {
  AlgebraPtr<K> base;
  AlgebraPtr<K> envelope;
  ModuleRep<K> module;
};

template <class K>
AlgebraPtr<K> envelope_of(const AlgebraPtr<K>& a);
/// A as an A-bimodule, twisted on the right: x m y = x m sigma(y).
template <class K>
BimoduleRep<K> algebra_as_bimodule(const AlgebraPtr<K>& a, AlgebraPtr<K> env = nullptr);
template <class K>
BimoduleRep<K> twist(const Automorphism<K>& sigma, AlgebraPtr<K> env = nullptr);
/// Bimodule from left and right generator actions on a vector space (row
/// vectors, m |-> m * left[g] is x m and m |-> m * right[g] is m x).
template <class K>
BimoduleRep<K> bimodule_from_actions(const AlgebraPtr<K>& a, AlgebraPtr<K> env, const std::vector<Matrix<K>>& left,
                                     const std::vector<Matrix<K>>& right);
/// Left and right generator actions recovered from a bimodule.
template <class K>
std::pair<std::vector<Matrix<K>>, std::vector<Matrix<K>>> bimodule_actions(const BimoduleRep<K>& m);
/// M (x)_A N.
template <class K>
BimoduleRep<K> tensor(const BimoduleRep<K>& m, const BimoduleRep<K>& n);

/// Minimal bimodule resolution of A, checked against the ext tables of the
/// simples (Happel). Throws ConsistencyError on a mismatch.
template <class K>
ResolutionLedger<K> bimodule_resolve(const AlgebraPtr<K>& a, std::size_t steps, AlgebraPtr<K> env = nullptr);
template <class K>
void happel_check(const AlgebraPtr<K>& a, const ResolutionLedger<K>& ledger);
/// dim HH^r(A) for r = 0..up_to.
template <class K>
std::vector<std::size_t> hochschild_dims(const AlgebraPtr<K>& a, std::size_t up_to, AlgebraPtr<K> env = nullptr);

/// The algebra over a larger finite field containing the given one.
AlgebraPtr<FiniteField> extend_scalars(const Algebra<FiniteField>& a, const FiniteField& big);
ModuleRep<FiniteField> extend_scalars(const ModuleRep<FiniteField>& m, AlgebraPtr<FiniteField> big);

}  // namespace peri
