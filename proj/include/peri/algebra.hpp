#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "peri/field.hpp"
#include "peri/matrix.hpp"
#include "peri/quiver.hpp"

namespace peri {

/// Finite-dimensional basic-style algebra given by a vertex-homogeneous basis
/// and structure constants. Every basis element b satisfies e_i b e_j = b for
/// i = left_vertex(b), j = right_vertex(b).
template <class K>
class Algebra {
 public:
  using Elem = typename K::Elem;
  using Element = SparseVec<K>;

  struct Parts {
    K field{};
    std::string name;
    std::vector<std::string> vertex_names;
    std::vector<std::string> labels;
    std::vector<std::uint32_t> left_vertex, right_vertex;
    std::vector<std::uint32_t> idempotents;  // basis index of e_v
    std::vector<Element> table;              // table[i*dim+j] = b_i b_j
    std::vector<Element> generators;         // idempotents first
    std::vector<std::string> generator_names;
    std::vector<std::uint32_t> radical_generators;  // indices into generators
    std::vector<Element> radical_basis;
    // Image of each basis element in A/J, as (vertex, coefficient) pairs.
    std::vector<Element> top;
    std::optional<Presentation> presentation;
    std::vector<Monomial> paths;  // filled when the basis is monomial
    std::size_t loewy_length = 0;  // 0: compute
  };

  /// Right multiplication data used to act with all of e_vA on a module.
  /// basis[k] = sum_w inverse(k, w) * word_w, word_0 = e_v and
  /// word_w = word_{parent[w]} * generators[gen[w]].
  struct SpanningTree {
    std::vector<std::uint32_t> basis;  // basis elements with left vertex v
    std::vector<std::int32_t> parent;
    std::vector<std::uint32_t> gen;
    SparseMatrix<K> inverse;
  };

  explicit Algebra(Parts parts);

  const K& field() const { return p_.field; }
  const std::string& name() const { return p_.name; }
  std::size_t dim() const { return p_.labels.size(); }
  std::size_t vertex_count() const { return p_.idempotents.size(); }
  const std::string& vertex_name(std::size_t v) const { return p_.vertex_names[v]; }
  const std::vector<std::string>& vertex_names() const { return p_.vertex_names; }
  const std::string& label(std::size_t b) const { return p_.labels[b]; }
  const std::vector<std::string>& labels() const { return p_.labels; }
  std::uint32_t left_vertex(std::size_t b) const { return p_.left_vertex[b]; }
  std::uint32_t right_vertex(std::size_t b) const { return p_.right_vertex[b]; }
  std::uint32_t idempotent(std::size_t v) const { return p_.idempotents[v]; }
  const Element& product(std::size_t i, std::size_t j) const { return p_.table[i * dim() + j]; }

  const std::vector<Element>& generators() const { return p_.generators; }
  const std::string& generator_name(std::size_t g) const { return p_.generator_names[g]; }
  const std::vector<std::uint32_t>& radical_generators() const { return p_.radical_generators; }
  const std::vector<Element>& radical_basis() const { return p_.radical_basis; }
  const Element& top(std::size_t b) const { return p_.top[b]; }
  const std::optional<Presentation>& presentation() const { return p_.presentation; }
  bool monomial() const { return !p_.paths.empty(); }
  const std::vector<Monomial>& paths() const { return p_.paths; }
  std::size_t loewy_length() const { return p_.loewy_length; }
  const Parts& parts() const { return p_; }

  /// Regular right action of generator g (row b holds b*g).
  const SparseMatrix<K>& right_action(std::size_t g) const { return right_[g]; }
  const SpanningTree& tree(std::size_t v) const { return trees_[v]; }
  /// Position of b inside tree(left_vertex(b)).basis.
  std::uint32_t position(std::size_t b) const { return position_[b]; }

  Element unit(std::size_t b) const { return {{static_cast<std::uint32_t>(b), field().one()}}; }
  Element one() const;
  Element multiply(const Element& x, const Element& y) const;
  /// Coefficient of e_v in the image of x in A/J.
  Vec<K> top_of(const Element& x) const;
  bool in_radical(const Element& x) const;
  std::string str(const Element& x) const;
  std::optional<std::size_t> find_label(const std::string& label) const;

 private:
  void build_caches();

  Parts p_;
  std::vector<SparseMatrix<K>> right_;
  std::vector<SpanningTree> trees_;
  std::vector<std::uint32_t> position_;
  Subspace<K> radical_space_;
};

template <class K>
using AlgebraPtr = std::shared_ptr<const Algebra<K>>;

/// kQ/I by truncated linear reduction (see README). Throws InputError when
/// the radical does not vanish below length_cap.
template <class K>
Algebra<K> build_algebra(const Presentation& pres, const K& field, std::size_t length_cap = 64,
                         std::string name = "");

template <class K>
Algebra<K> opposite(const Algebra<K>& a);
/// A^e = A^op (x) A with (x (x) y)(x' (x) y') = x'x (x) yy'. Vertex (i, j) is
/// numbered i * n + j and its projective is Ae_i (x) e_jA.
template <class K>
Algebra<K> enveloping(const Algebra<K>& a);
/// eAe for e the sum of the listed vertex idempotents.
template <class K>
Algebra<K> corner(const Algebra<K>& a, const std::vector<std::size_t>& vertices, std::string name = "");

/// Fills generators (idempotents, then a complement of J^2 in J chosen from
/// radical_basis) and the top map, for constructions without explicit ones.
template <class K>
void derive_generators(typename Algebra<K>::Parts& parts);
template <class K>
std::size_t compute_loewy_length(const Algebra<K>& a);

// ---------------------------------------------------------------------------

/// Linear map between algebras given on generators and checked to be
/// multiplicative on all basis pairs. Row b of `matrix` is the image of b.
template <class K>
struct AlgebraMap {
  AlgebraPtr<K> source, target;
  std::vector<SparseVec<K>> generator_images;
  Matrix<K> matrix;

  SparseVec<K> operator()(const SparseVec<K>& x) const;
};

template <class K>
using Automorphism = AlgebraMap<K>;

/// Throws InputError("not a homomorphism") or ("not invertible") when
/// `require_bijective` is set.
template <class K>
AlgebraMap<K> check_algebra_map(AlgebraPtr<K> source, AlgebraPtr<K> target,
                                std::vector<SparseVec<K>> generator_images, bool require_bijective);
template <class K>
Automorphism<K> check_automorphism(AlgebraPtr<K> a, std::vector<SparseVec<K>> generator_images);
template <class K>
Automorphism<K> identity_automorphism(AlgebraPtr<K> a);
/// Result applies tau first: (compose(sigma, tau))(x) = sigma(tau(x)).
template <class K>
Automorphism<K> compose(const Automorphism<K>& sigma, const Automorphism<K>& tau);
template <class K>
Automorphism<K> power(const Automorphism<K>& sigma, std::size_t n);
template <class K>
bool same_map(const AlgebraMap<K>& f, const AlgebraMap<K>& g);
/// Order of sigma, or nullopt beyond `bound`.
template <class K>
std::optional<std::size_t> order(const Automorphism<K>& sigma, std::size_t bound = 64);

/// A unit u with sigma(x) u = u x for all x, or nullopt when sigma is not inner.
template <class K>
std::optional<SparseVec<K>> is_inner(const Automorphism<K>& sigma, std::uint64_t seed = 1);
template <class K>
bool is_unit(const Algebra<K>& a, const SparseVec<K>& u);

template <class K>
std::vector<std::vector<std::size_t>> cartan(const Algebra<K>& a);
template <class K>
bool schurian(const Algebra<K>& a);
/// dim A - dim J = number of vertices.
template <class K>
bool is_basic(const Algebra<K>& a);
/// Nakayama permutation when every e_vA has a simple socle and the socles are
/// pairwise non-isomorphic; nullopt otherwise.
template <class K>
std::optional<std::vector<std::size_t>> nakayama_permutation(const Algebra<K>& a);
template <class K>
bool is_connected(const Algebra<K>& a);

/// Parses "2 a*b - c + e1" style expressions against the presentation of a.
template <class K>
SparseVec<K> path_element(const Algebra<K>& a, const Monomial& m);
template <class K>
SparseVec<K> combination_element(const Algebra<K>& a, const Combination& c);

}  // namespace peri
