#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace lts {

class Scalar;

/// Base field descriptor: the rationals or a prime field F_p.
///
/// Scalars remember the field they were created in; mixing scalars from
/// different fields throws std::invalid_argument.
class Field {
 public:
  /// The rational field Q.
  static Field rational() noexcept { return Field{0}; }
  /// The prime field F_p. Throws std::invalid_argument unless p is a prime
  /// below 2^62.
  static Field prime(std::uint64_t p);

  bool is_rational() const noexcept { return modulus_ == 0; }
  /// 0 for Q, otherwise p.
  std::uint64_t modulus() const noexcept { return modulus_; }

  Scalar zero() const;
  Scalar one() const;
  Scalar from_int(long value) const;
  Scalar from_rational(const mpq_class& value) const;

  /// Parses "a" or "a/b" with arbitrary-precision integers and b > 0.
  /// Throws std::invalid_argument on malformed input or a zero denominator
  /// (and, over F_p, on a denominator divisible by p).
  Scalar parse(std::string_view text) const;

  std::string describe() const;

  friend bool operator==(Field a, Field b) noexcept { return a.modulus_ == b.modulus_; }

 private:
  friend class Scalar;
  explicit Field(std::uint64_t modulus) noexcept : modulus_(modulus) {}
  std::uint64_t modulus_;
};

/// An exact field element: a reduced rational or a residue in [0, p).
class Scalar {
 public:
  /// Rational zero.
  Scalar() = default;

  Field field() const noexcept;
  bool is_zero() const noexcept;
  bool is_one() const noexcept;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& other);
  Scalar& operator-=(const Scalar& other);
  Scalar& operator*=(const Scalar& other);
  /// Throws std::domain_error on division by zero.
  Scalar& operator/=(const Scalar& other);
  Scalar inverse() const;

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  friend bool operator==(const Scalar& a, const Scalar& b);

  /// "a", "-a" or "a/b" for rationals; the residue in [0, p) otherwise.
  std::string to_string() const;

  /// Exact rational value (Q only).
  const mpq_class& rational() const;
  /// Residue (F_p only).
  std::uint64_t residue() const;

 private:
  friend class Field;
  void require_same_field(const Scalar& other) const;

  std::uint64_t modulus_ = 0;
  mpq_class q_{0};
  std::uint64_t r_ = 0;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace lts
