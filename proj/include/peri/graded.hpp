#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "peri/algebra.hpp"
#include "peri/description.hpp"
#include "peri/group.hpp"
#include "peri/module.hpp"

namespace peri {

/// G-grading of an algebra whose basis is homogeneous. Idempotents have
/// degree e. When the grading had to be rebased, `rebase` maps the original
/// algebra isomorphically onto `algebra`.
template <class K>
struct Grading {
  AlgebraPtr<K> algebra;
  FiniteGroup group;
  std::vector<std::uint32_t> degree;
  std::optional<AlgebraMap<K>> rebase;

  std::size_t order() const { return group.order(); }
};

/// Degree of a path is the product of its arrow degrees; needs a monomial basis.
template <class K>
Grading<K> grading_by_arrows(AlgebraPtr<K> a, FiniteGroup g, const std::vector<std::size_t>& arrow_degree);
/// Grading generated by homogeneous elements (with the idempotents in degree
/// e). The homogeneous components are spanned by products of generators; the
/// algebra is rebased onto a basis adapted to them. Throws InputError when
/// the components do not form a direct sum decomposition.
template <class K>
Grading<K> grading_by_generators(AlgebraPtr<K> a, FiniteGroup g,
                                 const std::vector<std::pair<SparseVec<K>, std::size_t>>& generators);
template <class K>
Grading<K> trivial_grading(AlgebraPtr<K> a, FiniteGroup g);
template <class K>
Grading<K> grading_from_spec(AlgebraPtr<K> a, const GradingSpec& spec);
/// Throws ConsistencyError unless A_g A_h lies in A_{gh} on all basis pairs.
template <class K>
void check_grading(const Grading<K>& gr);

/// Basis of J_G, the largest homogeneous ideal inside J (the sum of the
/// intersections of J with the homogeneous components).
template <class K>
std::vector<SparseVec<K>> graded_radical(const Grading<K>& gr);
template <class K>
bool is_radical_grading(const Grading<K>& gr);
template <class K>
bool degree_preserving(const Grading<K>& gr, const Automorphism<K>& sigma);

/// B = A # k[G]* with basis a p_g (index a * |G| + g) and
/// (a p_g)(b p_h) = a b_{gh^-1} p_h. Vertex (i, g) is e_i p_g, numbered
/// i * |G| + g. action[x] sends b p_h to b p_{hx}.
template <class K>
struct Smash {
  Grading<K> grading;
  AlgebraPtr<K> algebra;
  AlgebraMap<K> embedding;
  std::vector<Automorphism<K>> action;

  std::size_t order() const { return grading.order(); }
  std::size_t basis(std::size_t a, std::size_t g) const { return a * order() + g; }
  std::size_t vertex(std::size_t i, std::size_t g) const { return i * order() + g; }
};

template <class K>
Smash<K> smash(const Grading<K>& gr);
/// Invariants of the action equal the image of the embedding, and the action
/// is a right action by automorphisms.
template <class K>
void check_smash(const Smash<K>& s);

/// B * G for a right action of G on B permuting the vertex idempotents, with
/// ag . bh = a b^{g^-1} gh. The radical is J(B) * G, which needs |G|
/// invertible in k.
template <class K>
AlgebraPtr<K> skew_group_algebra(const AlgebraPtr<K>& b, const FiniteGroup& g,
                                 const std::vector<Automorphism<K>>& action);
/// Sizes of the matrix blocks of A/J, largest first, when every vertex
/// idempotent is primitive modulo J. Throws InputError otherwise.
template <class K>
std::vector<std::size_t> block_profile(const Algebra<K>& a);

// ---------------------------------------------------------------------------

template <class K>
struct GradedModule {
  ModuleRep<K> module;
  std::vector<std::uint32_t> degree;
};

template <class K>
GradedModule<K> graded_simple(const Grading<K>& gr, std::size_t v, std::size_t d);
/// e_vA[d]: basis element b sits in degree d deg(b).
template <class K>
GradedModule<K> graded_projective(const Grading<K>& gr, std::size_t v, std::size_t d);
/// M[d]_g = M_{d^-1 g}.
template <class K>
GradedModule<K> shift(const GradedModule<K>& m, const FiniteGroup& g, std::size_t d);
template <class K>
void check_graded(const Grading<K>& gr, const GradedModule<K>& m);
/// The B-module of a graded module. A vector of degree t sits at vertex
/// (i, t^-1), so S_i[d] goes to the simple at (i, d^-1).
template <class K>
ModuleRep<K> smash_module(const Smash<K>& s, const GradedModule<K>& m);

template <class K>
struct GradedBimodule {
  BimoduleRep<K> bimodule;
  std::vector<std::uint32_t> degree;
};

/// 1_A_sigma with the grading of A; sigma must preserve degrees.
template <class K>
GradedBimodule<K> graded_twist(const Grading<K>& gr, const Automorphism<K>& sigma, AlgebraPtr<K> env = nullptr);
template <class K>
GradedBimodule<K> graded_algebra_bimodule(const Grading<K>& gr, AlgebraPtr<K> env = nullptr);
/// Ae_i (x) e_jA with e_i (x) e_j in degree d.
template <class K>
GradedBimodule<K> graded_projective_bimodule(const Grading<K>& gr, std::size_t i, std::size_t j, std::size_t d,
                                             AlgebraPtr<K> env = nullptr);
/// Needs d central.
template <class K>
GradedBimodule<K> shift(const GradedBimodule<K>& m, const FiniteGroup& g, std::size_t d);
/// A_h M_g in M_{hg} and M_g A_h in M_{gh}.
template <class K>
void check_graded(const Grading<K>& gr, const GradedBimodule<K>& m);

/// F_x(M): the space of F(M) = (+)_h M p_h with right action
/// (m p_h)(a p_g) = m a_{hg^-1} p_g and left action
/// a p_g . m_k p_h = a m_k p_h when g = k h x, zero otherwise.
template <class K>
BimoduleRep<K> lift_bimodule(const Smash<K>& s, const GradedBimodule<K>& m, std::size_t x,
                             AlgebraPtr<K> env = nullptr);
/// 1_B_x, the twist of B by action[x].
template <class K>
BimoduleRep<K> twisted_smash(const Smash<K>& s, std::size_t x, AlgebraPtr<K> env = nullptr);
/// B (x)_A B as a B-bimodule.
template <class K>
BimoduleRep<K> smash_tensor_square(const Smash<K>& s, AlgebraPtr<K> env = nullptr);
/// B (x)_A B against (+)_x 1_B_x.
template <class K>
IsoResult<K> check_lemma22(const Smash<K>& s, AlgebraPtr<K> env = nullptr);

/// End(M) local: every sampled endomorphism is a scalar plus a nilpotent.
/// Samples the basis and `samples` seeded random combinations.
template <class K>
bool is_indecomposable(const ModuleRep<K>& m, std::uint64_t seed = 1, std::size_t samples = 16);

}  // namespace peri
