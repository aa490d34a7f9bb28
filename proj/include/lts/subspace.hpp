#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "lts/matrix.hpp"

namespace lts {

/// A linear subspace of K^n stored by its canonical RREF basis.
///
/// Two subspaces are equal iff their canonical bases are identical, so
/// operator== is an exact subspace comparison.
class Subspace {
 public:
  Subspace() = default;
  static Subspace zero(Field field, std::size_t ambient_dim);
  static Subspace whole(Field field, std::size_t ambient_dim);
  static Subspace span(Field field, std::size_t ambient_dim, const std::vector<Vector>& vectors);
  static Subspace row_space(const Matrix& m);

  Field field() const noexcept { return basis_.field(); }
  std::size_t ambient_dim() const noexcept { return basis_.cols(); }
  std::size_t dim() const noexcept { return basis_.rows(); }
  bool is_zero() const noexcept { return dim() == 0; }
  bool is_whole() const noexcept { return dim() == ambient_dim(); }

  const Matrix& basis() const noexcept { return basis_; }
  Vector basis_vector(std::size_t i) const { return basis_.row_vector(i); }
  const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }

  bool contains(std::span<const Scalar> v) const;
  bool contains(const Subspace& other) const;
  /// Coefficients of v in the canonical basis, or nullopt if v is outside.
  std::optional<Vector> coordinates(std::span<const Scalar> v) const;

  friend bool operator==(const Subspace& a, const Subspace& b) = default;

 private:
  Subspace(Matrix basis, std::vector<std::size_t> pivots);
  Matrix basis_;
  std::vector<std::size_t> pivots_;
};

/// Throws std::invalid_argument on ambient dimension or field mismatch.
Subspace sum(const Subspace& a, const Subspace& b);
Subspace intersect(const Subspace& a, const Subspace& b);
/// Right kernel {x : m x = 0}, a subspace of K^{cols}.
Subspace kernel(const Matrix& m);

/// Deterministic complement of `sub` inside `within`: the canonical basis
/// rows of `within` are scanned in order and kept whenever they enlarge the
/// running span. Throws std::invalid_argument if sub is not inside within.
Subspace complete_complement(const Subspace& sub, const Subspace& within);

/// Coordinates on V / N with respect to a fixed complement W of N.
///
/// project(v) returns the coefficients of the W-component of v in the basis
/// of W; lift(c) returns the representative in W.
class QuotientMap {
 public:
  QuotientMap(Subspace null_space, Subspace complement);
  /// Complement chosen by complete_complement(null_space, whole).
  static QuotientMap greedy(const Subspace& null_space);

  const Subspace& null_space() const noexcept { return null_; }
  const Subspace& complement() const noexcept { return complement_; }
  std::size_t dim() const noexcept { return complement_.dim(); }
  std::size_t ambient_dim() const noexcept { return null_.ambient_dim(); }

  Vector project(std::span<const Scalar> v) const;
  Vector lift(std::span<const Scalar> coords) const;

 private:
  Subspace null_;
  Subspace complement_;
  Matrix projector_;  // ambient x dim
};

}  // namespace lts
