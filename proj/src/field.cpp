#include "quadscroll/field.hpp"

#include <charconv>
#include <stdexcept>

namespace quadscroll {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

FieldSpec FieldSpec::prime(std::uint32_t p) {
  if (p > kMaxPrime || !is_prime(p)) {
    throw std::invalid_argument("field modulus " + std::to_string(p) + " is not a prime below 2^31");
  }
  return FieldSpec{p};
}

FieldSpec FieldSpec::parse(std::string_view text) {
  if (text == "rational" || text == "Q") return rational();
  if (text.starts_with("p:")) {
    std::string_view digits = text.substr(2);
    std::uint64_t p = 0;
    auto [end, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
    if (ec != std::errc{} || end != digits.data() + digits.size() || p > kMaxPrime) {
      throw std::invalid_argument("malformed field '" + std::string(text) + "'");
    }
    return prime(static_cast<std::uint32_t>(p));
  }
  throw std::invalid_argument("unknown field '" + std::string(text) + "' (expected p:<prime> or rational)");
}

std::string FieldSpec::to_string() const {
  return is_rational() ? std::string("rational") : "p:" + std::to_string(modulus_);
}

namespace modp {

std::uint32_t inv(std::uint32_t a, std::uint32_t p) {
  if (a % p == 0) throw std::domain_error("inverse of zero");
  // Extended Euclid on signed 64-bit values.
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = p, new_r = a % p;
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    t -= q * new_t;
    std::swap(t, new_t);
    r -= q * new_r;
    std::swap(r, new_r);
  }
  if (t < 0) t += p;
  return static_cast<std::uint32_t>(t);
}

std::uint32_t reduce(long long value, std::uint32_t p) {
  long long r = value % static_cast<long long>(p);
  if (r < 0) r += p;
  return static_cast<std::uint32_t>(r);
}

}  // namespace modp

Scalar Scalar::zero(const FieldSpec& field) { return from_int(field, 0); }
Scalar Scalar::one(const FieldSpec& field) { return from_int(field, 1); }

Scalar Scalar::from_int(const FieldSpec& field, long long value) {
  if (field.is_prime_field()) return Scalar(field, modp::reduce(value, field.modulus()));
  return Scalar(field, mpq_class(static_cast<long>(value)));
}

Scalar Scalar::from_mpz(const FieldSpec& field, const mpz_class& value) {
  if (field.is_prime_field()) {
    mpz_class r = value % field.modulus();
    if (r < 0) r += field.modulus();
    return Scalar(field, static_cast<std::uint32_t>(r.get_ui()));
  }
  return Scalar(field, mpq_class(value));
}

Scalar Scalar::from_rational(const FieldSpec& field, const mpq_class& value) {
  if (field.is_prime_field()) {
    Scalar num = from_mpz(field, value.get_num());
    Scalar den = from_mpz(field, value.get_den());
    return num / den;
  }
  mpq_class q = value;
  q.canonicalize();
  return Scalar(field, std::move(q));
}

Scalar Scalar::from_residue(const FieldSpec& field, std::uint32_t residue) {
  if (!field.is_prime_field()) throw std::invalid_argument("from_residue needs a prime field");
  return Scalar(field, residue % field.modulus());
}

Scalar Scalar::parse(const FieldSpec& field, std::string_view text) {
  mpq_class q;
  if (q.set_str(std::string(text), 10) != 0) {
    throw std::invalid_argument("malformed scalar '" + std::string(text) + "'");
  }
  if (q.get_den() == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  q.canonicalize();
  return from_rational(field, q);
}

bool Scalar::is_zero() const {
  if (auto* r = std::get_if<std::uint32_t>(&value_)) return *r == 0;
  return sgn(std::get<mpq_class>(value_)) == 0;
}

bool Scalar::is_one() const {
  if (auto* r = std::get_if<std::uint32_t>(&value_)) return *r == 1;
  return std::get<mpq_class>(value_) == 1;
}

std::uint32_t Scalar::residue() const {
  if (auto* r = std::get_if<std::uint32_t>(&value_)) return *r;
  throw std::logic_error("residue() on a rational scalar");
}

const mpq_class& Scalar::rational() const {
  if (auto* q = std::get_if<mpq_class>(&value_)) return *q;
  throw std::logic_error("rational() on a prime-field scalar");
}

void Scalar::require_same_field(const Scalar& other) const {
  if (!(field_ == other.field_)) {
    throw std::invalid_argument("scalar field mismatch: " + field_.to_string() + " vs " +
                                other.field_.to_string());
  }
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero");
  if (field_.is_prime_field()) return Scalar(field_, modp::inv(residue(), field_.modulus()));
  mpq_class q = 1 / rational();
  q.canonicalize();
  return Scalar(field_, std::move(q));
}

Scalar Scalar::pow(unsigned exponent) const {
  Scalar result = one(field_);
  Scalar base = *this;
  while (exponent != 0) {
    if (exponent & 1u) result *= base;
    exponent >>= 1;
    if (exponent != 0) base *= base;
  }
  return result;
}

Scalar Scalar::operator-() const {
  if (field_.is_prime_field()) return Scalar(field_, modp::neg(residue(), field_.modulus()));
  return Scalar(field_, mpq_class(-rational()));
}

Scalar& Scalar::operator+=(const Scalar& rhs) {
  require_same_field(rhs);
  if (field_.is_prime_field()) {
    value_ = modp::add(residue(), rhs.residue(), field_.modulus());
  } else {
    std::get<mpq_class>(value_) += rhs.rational();
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& rhs) {
  require_same_field(rhs);
  if (field_.is_prime_field()) {
    value_ = modp::sub(residue(), rhs.residue(), field_.modulus());
  } else {
    std::get<mpq_class>(value_) -= rhs.rational();
  }
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& rhs) {
  require_same_field(rhs);
  if (field_.is_prime_field()) {
    value_ = modp::mul(residue(), rhs.residue(), field_.modulus());
  } else {
    std::get<mpq_class>(value_) *= rhs.rational();
  }
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& rhs) {
  require_same_field(rhs);
  return *this *= rhs.inverse();
}

bool operator==(const Scalar& lhs, const Scalar& rhs) {
  return lhs.field_ == rhs.field_ && lhs.value_ == rhs.value_;
}

std::string Scalar::to_string() const {
  if (field_.is_prime_field()) return std::to_string(residue());
  return rational().get_str();
}

}  // namespace quadscroll
