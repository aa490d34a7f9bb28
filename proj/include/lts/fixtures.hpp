#pragma once

#include <array>
#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "lts/triple_system.hpp"

namespace lts {

using BracketConstants = std::map<std::array<std::size_t, 2>, SparseVector>;

/// A graded algebra with bilinear bracket [b_i, b_j] given by sparse
/// structure constants; missing keys are zero.
class GradedLeibnizAlgebra {
 public:
  GradedLeibnizAlgebra(AbelianGroup group, Field field, std::vector<GroupElement> degrees, BracketConstants brackets);

  const AbelianGroup& group() const noexcept { return group_; }
  Field field() const noexcept { return field_; }
  std::size_t dim() const noexcept { return degrees_.size(); }
  const std::vector<GroupElement>& degrees() const noexcept { return degrees_; }
  const BracketConstants& brackets() const noexcept { return brackets_; }

  const Vector& basis_bracket(std::size_t i, std::size_t j) const { return table_[i * dim() + j]; }
  Vector bracket(const Vector& x, const Vector& y) const;

 private:
  AbelianGroup group_;
  Field field_;
  std::vector<GroupElement> degrees_;
  BracketConstants brackets_;
  std::vector<Vector> table_;
};

/// [[y,z],x] - [[y,x],z] - [y,[z,x]] on all basis triples (y,z,x).
std::vector<Violation> verify_leibniz_identity(const GradedLeibnizAlgebra& a);
/// Nonzero coefficient of b_l in [b_i,b_j] with deg l != deg i + deg j.
std::vector<Violation> verify_algebra_grading(const GradedLeibnizAlgebra& a);

/// {x,y,z} = [[x,y],z]. Throws LeibnizIdentityFailure if the algebra fails
/// its identity or grading, and CertificateFailure("Axioms") if the result
/// fails the triple-system axioms.
GradedLTS from_leibniz_algebra(const GradedLeibnizAlgebra& a);

/// sl2 with basis e, h, f and [h,e] = 2e, [h,f] = -2f, [e,f] = h.
GradedLeibnizAlgebra sl2_algebra(const AbelianGroup& group, const std::vector<GroupElement>& degrees,
                                 Field field = Field::rational());

GradedLTS zero_system(std::size_t n, Field field = Field::rational());

/// Block sum over the product group: degrees (g, 1) then (1, h).
GradedLTS direct_sum(const GradedLTS& a, const GradedLTS& b);
/// Block sum over a shared group.
GradedLTS direct_sum_same_group(const GradedLTS& a, const GradedLTS& b);
/// Basis vector i of the result is basis vector perm[i] of e.
GradedLTS permute_basis(const GradedLTS& e, const std::vector<std::size_t>& perm);
/// Same constants, new grading. The caller checks verify_grading.
GradedLTS regrade(const GradedLTS& e, AbelianGroup group, std::vector<GroupElement> degrees);

/// Directory holding the shipped fixture files; LTS_FIXTURE_DIR overrides.
std::filesystem::path fixture_directory();

/// zero_<n> for any n, or one of sl2_Z, disjoint_sum, nonlie_J,
/// trivial_grading_sl2 (read from the fixture directory). Every result is
/// checked against the axioms and grading. Throws std::invalid_argument on
/// an unknown name.
GradedLTS builtin(std::string_view name);
/// The shipped fixture names, with zero_3 standing for the zero family.
std::vector<std::string> builtin_names();

}  // namespace lts
