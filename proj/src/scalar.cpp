#include "lts/scalar.hpp"

#include <ostream>
#include <stdexcept>

namespace lts {
namespace {

using u128 = unsigned __int128;

constexpr std::uint64_t kMaxModulus = std::uint64_t{1} << 62;

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (p % d == 0) return p == d;
  }
  // Deterministic Miller-Rabin for 64-bit inputs.
  auto mulmod = [p](std::uint64_t a, std::uint64_t b) {
    return static_cast<std::uint64_t>(static_cast<u128>(a) * b % p);
  };
  auto powmod = [&](std::uint64_t b, std::uint64_t e) {
    std::uint64_t r = 1;
    while (e) {
      if (e & 1) r = mulmod(r, b);
      b = mulmod(b, b);
      e >>= 1;
    }
    return r;
  };
  std::uint64_t d = p - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    std::uint64_t x = powmod(a, d);
    if (x == 1 || x == p - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod(x, x);
      if (x == p - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::uint64_t reduce_mpz(const mpz_class& z, std::uint64_t p) {
  mpz_class r;
  mpz_fdiv_r_ui(r.get_mpz_t(), z.get_mpz_t(), p);
  return r.get_ui();
}

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) {
  // a != 0 and p prime: a^(p-2).
  std::uint64_t r = 1;
  std::uint64_t e = p - 2;
  while (e) {
    if (e & 1) r = static_cast<std::uint64_t>(static_cast<u128>(r) * a % p);
    a = static_cast<std::uint64_t>(static_cast<u128>(a) * a % p);
    e >>= 1;
  }
  return r;
}

bool is_decimal_integer(std::string_view s, bool allow_sign) {
  if (allow_sign && !s.empty() && s.front() == '-') s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

}  // namespace

Field Field::prime(std::uint64_t p) {
  if (p >= kMaxModulus || !is_prime(p)) {
    throw std::invalid_argument("field modulus " + std::to_string(p) + " is not a supported prime");
  }
  return Field{p};
}

Scalar Field::zero() const { return from_int(0); }
Scalar Field::one() const { return from_int(1); }

Scalar Field::from_int(long value) const {
  Scalar s;
  s.modulus_ = modulus_;
  if (is_rational()) {
    s.q_ = value;
  } else {
    s.r_ = reduce_mpz(mpz_class(value), modulus_);
  }
  return s;
}

Scalar Field::from_rational(const mpq_class& value) const {
  Scalar s;
  s.modulus_ = modulus_;
  if (is_rational()) {
    s.q_ = value;
    s.q_.canonicalize();
    return s;
  }
  const std::uint64_t den = reduce_mpz(value.get_den(), modulus_);
  if (den == 0) throw std::invalid_argument("denominator vanishes modulo " + std::to_string(modulus_));
  const std::uint64_t num = reduce_mpz(value.get_num(), modulus_);
  s.r_ = static_cast<std::uint64_t>(static_cast<u128>(num) * inv_mod(den, modulus_) % modulus_);
  return s;
}

Scalar Field::parse(std::string_view text) const {
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  if (!is_decimal_integer(num, true)) throw std::invalid_argument("malformed scalar \"" + std::string(text) + "\"");
  mpq_class value;
  mpz_class n(std::string(num), 10);
  if (slash == std::string_view::npos) {
    value = n;
  } else {
    const std::string_view den = text.substr(slash + 1);
    if (!is_decimal_integer(den, false)) throw std::invalid_argument("malformed scalar \"" + std::string(text) + "\"");
    mpz_class d(std::string(den), 10);
    if (d == 0) throw std::invalid_argument("zero denominator in scalar \"" + std::string(text) + "\"");
    value = mpq_class(n, d);
    value.canonicalize();
  }
  return from_rational(value);
}

std::string Field::describe() const {
  return is_rational() ? std::string("Q") : "F_" + std::to_string(modulus_);
}

Field Scalar::field() const noexcept {
  return Field{modulus_};
}

bool Scalar::is_zero() const noexcept { return modulus_ == 0 ? sgn(q_) == 0 : r_ == 0; }

bool Scalar::is_one() const noexcept { return modulus_ == 0 ? q_ == 1 : r_ == 1; }

void Scalar::require_same_field(const Scalar& other) const {
  if (modulus_ != other.modulus_) throw std::invalid_argument("scalars from different fields");
}

Scalar Scalar::operator-() const {
  Scalar s = *this;
  if (modulus_ == 0) {
    s.q_ = -q_;
  } else if (r_ != 0) {
    s.r_ = modulus_ - r_;
  }
  return s;
}

Scalar& Scalar::operator+=(const Scalar& other) {
  require_same_field(other);
  if (modulus_ == 0) {
    q_ += other.q_;
  } else {
    r_ = static_cast<std::uint64_t>((static_cast<u128>(r_) + other.r_) % modulus_);
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& other) {
  require_same_field(other);
  if (modulus_ == 0) {
    q_ -= other.q_;
  } else {
    r_ = static_cast<std::uint64_t>((static_cast<u128>(r_) + modulus_ - other.r_) % modulus_);
  }
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& other) {
  require_same_field(other);
  if (modulus_ == 0) {
    q_ *= other.q_;
  } else {
    r_ = static_cast<std::uint64_t>(static_cast<u128>(r_) * other.r_ % modulus_);
  }
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& other) {
  require_same_field(other);
  if (other.is_zero()) throw std::domain_error("division by zero");
  if (modulus_ == 0) {
    q_ /= other.q_;
  } else {
    r_ = static_cast<std::uint64_t>(static_cast<u128>(r_) * inv_mod(other.r_, modulus_) % modulus_);
  }
  return *this;
}

Scalar Scalar::inverse() const { return field().one() / *this; }

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.modulus_ != b.modulus_) return false;
  return a.modulus_ == 0 ? a.q_ == b.q_ : a.r_ == b.r_;
}

std::string Scalar::to_string() const {
  return modulus_ == 0 ? q_.get_str() : std::to_string(r_);
}

const mpq_class& Scalar::rational() const {
  if (modulus_ != 0) throw std::logic_error("rational() on a prime-field scalar");
  return q_;
}

std::uint64_t Scalar::residue() const {
  if (modulus_ == 0) throw std::logic_error("residue() on a rational scalar");
  return r_;
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

}  // namespace lts
