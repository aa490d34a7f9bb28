#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lts/abelian_group.hpp"
#include "lts/matrix.hpp"
#include "lts/subspace.hpp"

namespace lts {

struct Term {
  std::size_t index;
  Scalar coeff;
  friend bool operator==(const Term&, const Term&) = default;
};

/// Sorted by index, no zero coefficients.
using SparseVector = std::vector<Term>;
using TripleKey = std::array<std::size_t, 3>;
using StructureConstants = std::map<TripleKey, SparseVector>;

/// A finite-dimensional triple system E with a basis b_0..b_{n-1}, each basis
/// vector homogeneous of a given degree in a finitely generated abelian group.
///
/// `constants` maps (i,j,k) to {b_i,b_j,b_k} expanded in the basis; missing
/// keys are zero products. No symmetry is assumed. The object is immutable;
/// the constructor checks indices, fields and degree canonicity but not the
/// axioms (see verify_lts_axioms / verify_grading).
class GradedLTS {
 public:
  GradedLTS(AbelianGroup group, Field field, std::vector<GroupElement> degrees, StructureConstants constants);

  const AbelianGroup& group() const noexcept { return group_; }
  Field field() const noexcept { return field_; }
  std::size_t dim() const noexcept { return degrees_.size(); }
  const std::vector<GroupElement>& degrees() const noexcept { return degrees_; }
  const GroupElement& degree(std::size_t i) const { return degrees_.at(i); }
  const StructureConstants& constants() const noexcept { return constants_; }

  /// {b_i, b_j, b_k} as a dense vector.
  const Vector& basis_product(std::size_t i, std::size_t j, std::size_t k) const {
    return table_[(i * dim() + j) * dim() + k];
  }
  /// Trilinear extension of the structure constants.
  Vector triple_product(const Vector& x, const Vector& y, const Vector& z) const;
  bool has_zero_product() const noexcept { return constants_.empty(); }

  Vector zero() const { return zero_vector(field_, dim()); }
  Vector unit(std::size_t i) const { return unit_vector(field_, dim(), i); }

  friend bool operator==(const GradedLTS& a, const GradedLTS& b) {
    return a.group_ == b.group_ && a.field_ == b.field_ && a.degrees_ == b.degrees_ && a.constants_ == b.constants_;
  }

 private:
  AbelianGroup group_;
  Field field_;
  std::vector<GroupElement> degrees_;
  StructureConstants constants_;
  std::vector<Vector> table_;
};

/// One failed instance of an identity on basis vectors.
struct Violation {
  std::string identity;              ///< e.g. "axiom1", "axiom2", "fundamental", "grading"
  std::vector<std::size_t> indices;  ///< basis indices of the arguments
  Vector residual;                   ///< left side minus right side (or offending output)
  std::string to_string() const;
};

/// Both defining identities on all n^5 basis quintuples (a,b,c,d,e):
///   {a,{b,c,d},e} = {{a,b,c},d,e} - {{a,c,b},d,e} - {{a,d,b},c,e} + {{a,d,c},b,e}
///   {a,b,{c,d,e}} = {{a,b,c},d,e} - {{a,b,d},c,e} - {{a,b,e},c,d} + {{a,b,e},d,c}
std::vector<Violation> verify_lts_axioms(const GradedLTS& e);

/// The six-term consequence of the axioms on all basis quintuples:
///   {{c,d,e},b,a} - {{c,d,e},a,b} - {{c,b,a},d,e} + {{c,a,b},d,e}
///     - {c,{a,b,d},e} - {c,d,{a,b,e}} = 0
std::vector<Violation> verify_fundamental_identity(const GradedLTS& e);

/// Nonzero coefficient of b_l in {b_i,b_j,b_k} with deg l != deg i + deg j + deg k.
std::vector<Violation> verify_grading(const GradedLTS& e);

Subspace homogeneous_component(const GradedLTS& e, const GroupElement& g);
/// Nonzero components only, ordered by degree.
std::map<GroupElement, Subspace> homogeneous_decomposition(const GradedLTS& e);
/// Non-identity degrees with a nonzero component, in canonical order.
std::vector<GroupElement> support_sigma1(const GradedLTS& e);

/// Span of {x,b_j,b_k}, {b_j,x,b_k}, {b_j,b_k,x} over basis vectors x of s.
Subspace products_with(const GradedLTS& e, const Subspace& s);
/// Least ideal containing s.
Subspace ideal_closure(const GradedLTS& e, const Subspace& s);

/// A product that escapes the candidate subspace.
struct ProductWitness {
  std::string slot;              ///< "{I,E,E}", "{E,I,E}", "{E,E,I}" or "{S,S,S}"
  std::array<Vector, 3> args;
  Vector product;
};
std::optional<ProductWitness> ideal_witness(const GradedLTS& e, const Subspace& i);
std::optional<ProductWitness> subsystem_witness(const GradedLTS& e, const Subspace& s);
inline bool is_ideal(const GradedLTS& e, const Subspace& i) { return !ideal_witness(e, i); }
inline bool is_subsystem(const GradedLTS& e, const Subspace& s) { return !subsystem_witness(e, s); }

/// Span of {a,b,c} - {a,c,b} + {b,c,a} over basis triples.
Subspace j_generators(const GradedLTS& e);
/// Ideal generated by j_generators. Throws CertificateFailure("JVanishing")
/// unless {E,E,J} = {E,J,E} = 0.
Subspace compute_J(const GradedLTS& e);
/// Direct test of {x,x,z} = 0 and {x,y,z} + {y,z,x} + {z,x,y} = 0 on basis tuples.
bool lie_triple_axioms_hold(const GradedLTS& e);
/// compute_J(e) == 0, cross-checked against lie_triple_axioms_hold.
/// Throws OracleDisagreement if the two disagree.
bool is_lie_triple(const GradedLTS& e);

Subspace annihilator(const GradedLTS& e);

}  // namespace lts
