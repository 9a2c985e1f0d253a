#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>

#include <gmpxx.h>

namespace quadscroll {

inline constexpr std::uint32_t kDefaultPrime = 10007;

// Residues are multiplied in 64 bits, so moduli stay below 2^31.
inline constexpr std::uint32_t kMaxPrime = (1u << 31) - 1;

enum class FieldKind { prime, rational };

bool is_prime(std::uint64_t n);

/// An exact field: F_p for a prime p, or the rationals.
class FieldSpec {
 public:
  /// Throws std::invalid_argument unless p is a prime below 2^31.
  static FieldSpec prime(std::uint32_t p);
  static FieldSpec rational() { return FieldSpec{}; }

  /// Parses "p:<prime>" or "rational".
  static FieldSpec parse(std::string_view text);

  FieldKind kind() const { return modulus_ == 0 ? FieldKind::rational : FieldKind::prime; }
  bool is_prime_field() const { return modulus_ != 0; }
  bool is_rational() const { return modulus_ == 0; }
  std::uint32_t modulus() const { return modulus_; }
  std::uint32_t characteristic() const { return modulus_; }

  std::string to_string() const;

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;

 private:
  FieldSpec() = default;
  explicit FieldSpec(std::uint32_t p) : modulus_(p) {}

  std::uint32_t modulus_ = 0;
};

/// An element of a FieldSpec. Prime-field values are kept in [0, p);
/// rationals are canonical (lowest terms, positive denominator).
class Scalar {
 public:
  static Scalar zero(const FieldSpec& field);
  static Scalar one(const FieldSpec& field);
  static Scalar from_int(const FieldSpec& field, long long value);
  static Scalar from_mpz(const FieldSpec& field, const mpz_class& value);
  static Scalar from_rational(const FieldSpec& field, const mpq_class& value);
  static Scalar from_residue(const FieldSpec& field, std::uint32_t residue);
  /// "7", "-3/4" (rational) or a residue in decimal (prime field).
  static Scalar parse(const FieldSpec& field, std::string_view text);

  const FieldSpec& field() const { return field_; }
  bool is_zero() const;
  bool is_one() const;

  /// Prime fields only.
  std::uint32_t residue() const;
  /// Rationals only.
  const mpq_class& rational() const;

  Scalar inverse() const;
  Scalar pow(unsigned exponent) const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& rhs);
  Scalar& operator-=(const Scalar& rhs);
  Scalar& operator*=(const Scalar& rhs);
  Scalar& operator/=(const Scalar& rhs);

  friend Scalar operator+(Scalar lhs, const Scalar& rhs) { return lhs += rhs; }
  friend Scalar operator-(Scalar lhs, const Scalar& rhs) { return lhs -= rhs; }
  friend Scalar operator*(Scalar lhs, const Scalar& rhs) { return lhs *= rhs; }
  friend Scalar operator/(Scalar lhs, const Scalar& rhs) { return lhs /= rhs; }

  friend bool operator==(const Scalar& lhs, const Scalar& rhs);

  std::string to_string() const;

 private:
  Scalar(const FieldSpec& field, std::uint32_t residue) : field_(field), value_(residue) {}
  Scalar(const FieldSpec& field, mpq_class q) : field_(field), value_(std::move(q)) {}

  void require_same_field(const Scalar& other) const;

  FieldSpec field_;
  std::variant<std::uint32_t, mpq_class> value_;
};

namespace modp {

inline std::uint32_t add(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  std::uint64_t s = std::uint64_t{a} + b;
  return static_cast<std::uint32_t>(s >= p ? s - p : s);
}

inline std::uint32_t sub(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  return a >= b ? a - b : static_cast<std::uint32_t>(std::uint64_t{a} + p - b);
}

inline std::uint32_t mul(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  return static_cast<std::uint32_t>((std::uint64_t{a} * b) % p);
}

inline std::uint32_t neg(std::uint32_t a, std::uint32_t p) { return a == 0 ? 0 : p - a; }

std::uint32_t inv(std::uint32_t a, std::uint32_t p);
std::uint32_t reduce(long long value, std::uint32_t p);

}  // namespace modp

}  // namespace quadscroll
