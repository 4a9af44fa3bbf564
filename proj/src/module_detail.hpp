#pragma once

#include <vector>

#include "peri/module.hpp"

namespace peri::detail {

template <class K>
SparseVec<K> apply(const K& f, const SparseVec<K>& x, const SparseMatrix<K>& m);

/// Basis of a homogeneous subspace of a module, reduced per vertex.
/// Row k has a 1 at pivots[k] and zeros at every other pivot.
template <class K>
struct HomogeneousBasis {
  std::vector<Vec<K>> rows;
  std::vector<std::uint32_t> pivots;
  std::vector<std::uint32_t> vertex;

  static HomogeneousBasis build(const K& f, const std::vector<std::uint32_t>& ambient_vertex, std::size_t vertices,
                                const std::vector<Vec<K>>& vectors);
  Vec<K> coordinates(const K& f, const Vec<K>& v) const;
  /// The subspace as a module; it must be closed under the action.
  ModuleRep<K> module(const ModuleRep<K>& ambient) const;
};

/// Matrices of every algebra basis element from generator matrices, acting on
/// the right (left = false) or on the left (left = true) of row vectors.
template <class K>
std::vector<Matrix<K>> basis_matrices(const Algebra<K>& a, const std::vector<Matrix<K>>& gens, bool left);

/// M (x) N modulo m P (x) n - m (x) n Q for each (P, Q) in `balance`, with
/// outer actions left (on M) and right (on N) pushed to the quotient.
template <class K>
std::pair<std::vector<Matrix<K>>, std::vector<Matrix<K>>> tensor_quotient(
    const K& f, std::size_t dm, std::size_t dn, const std::vector<std::pair<Matrix<K>, Matrix<K>>>& balance,
    const std::vector<Matrix<K>>& left, const std::vector<Matrix<K>>& right);

}  // namespace peri::detail
