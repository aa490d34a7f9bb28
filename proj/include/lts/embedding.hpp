#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "lts/subspace.hpp"
#include "lts/triple_system.hpp"

namespace lts {

/// An element (t, x) of L = L0 ⊕ L1, with t in quotient coordinates of L0
/// and x in E = L1.
struct EmbeddingElement {
  Vector even;
  Vector odd;
  bool is_zero() const { return lts::is_zero(even) && lts::is_zero(odd); }
  friend bool operator==(const EmbeddingElement&, const EmbeddingElement&) = default;
};

/// Outcome of the runtime checks performed while building the embedding.
struct EmbeddingCertificates {
  std::size_t well_defined_checks = 0;  ///< tensor brackets against N
  std::size_t leibniz_triples = 0;      ///< basis triples of L swept
  bool well_defined = false;
  bool leibniz = false;
  bool direct_sum = false;
};

/// The standard embedding L = L0 ⊕ L1 of a triple system E, with L1 = E and
/// L0 realized as (E⊗E)/N where N = ker φ ∩ ker ψ,
///   φ(x⊗y)(w) = {x,y,w},   ψ(x⊗y)(z) = {z,x,y} - {z,y,x}.
///
/// The product on L is
///   [(x⊗y, z), (u⊗v, w)] = ({x,y,u}⊗v - {x,y,v}⊗u + z⊗w, {x,y,w} + {z,u,v} - {z,v,u}).
///
/// Tensor coordinates index b_i⊗b_j as i*n + j. build() certifies that the
/// bracket descends to the quotient, that L satisfies the right Leibniz
/// identity [[y,z],x] = [[y,x],z] + [y,[z,x]] on basis triples, and that the
/// G-grading of L0 is direct.
class StandardEmbedding {
 public:
  /// Throws NotWellDefined, LeibnizIdentityFailure or DecompositionFailure.
  static StandardEmbedding build(const GradedLTS& e);

  const GradedLTS& system() const noexcept { return system_; }
  std::size_t tensor_dim() const noexcept { return system_.dim() * system_.dim(); }
  std::size_t even_dim() const noexcept { return quotient_.dim(); }
  const Subspace& null_space() const noexcept { return quotient_.null_space(); }
  const QuotientMap& quotient() const noexcept { return quotient_; }
  const EmbeddingCertificates& certificates() const noexcept { return certificates_; }

  // Tensor-level maps on E⊗E.
  Vector tensor(const Vector& x, const Vector& y) const;
  Vector phi(const Vector& t, const Vector& w) const;
  Vector psi(const Vector& t, const Vector& z) const;
  Vector tensor_bracket(const Vector& t, const Vector& s) const;

  // Quotient-level structure.
  Vector project(const Vector& t) const { return quotient_.project(t); }
  Vector lift(const Vector& c) const { return quotient_.lift(c); }
  /// [x, y] in L0 for x, y in quotient coordinates.
  Vector bracket_even(const Vector& x, const Vector& y) const;
  /// [x, w] in E for x in L0, w in E.
  Vector act_right(const Vector& x, const Vector& w) const;
  /// [z, x] in E for z in E, x in L0.
  Vector act_left(const Vector& z, const Vector& x) const;
  /// [z, w] in L0: the class of z⊗w.
  Vector bracket_odd(const Vector& z, const Vector& w) const;
  EmbeddingElement bracket(const EmbeddingElement& a, const EmbeddingElement& b) const;

  /// Basis of L: even basis vectors first, then b_0..b_{n-1}.
  std::vector<EmbeddingElement> basis() const;

  /// L0_g as a subspace of quotient coordinates (zero if absent).
  Subspace l0_component(const GroupElement& g) const;
  /// Nonzero components only, ordered by degree.
  const std::map<GroupElement, Subspace>& l0_components() const noexcept { return components_; }
  /// Non-identity degrees with L0_g != 0.
  std::vector<GroupElement> support_sigma0() const;

 private:
  explicit StandardEmbedding(const GradedLTS& e);
  void certify_well_defined();
  void certify_leibniz();
  void build_grading();

  GradedLTS system_;
  QuotientMap quotient_;
  std::vector<Vector> even_table_;   // m*m entries, L0-valued
  std::vector<Matrix> right_action_; // per even basis vector: rows = images of b_k
  std::vector<Matrix> left_action_;  // per even basis vector: rows = images of b_k
  std::vector<Vector> odd_table_;    // n*n entries, L0-valued
  std::map<GroupElement, Subspace> components_;
  EmbeddingCertificates certificates_;
};

/// Pairs of L0 component basis vectors whose bracket leaves L0_{g+h}.
std::vector<Violation> verify_l0_grading(const StandardEmbedding& emb);

}  // namespace lts
