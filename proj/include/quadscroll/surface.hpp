#pragma once

// Bihomogeneous forms on P^1 x P^1.
//
// Coordinates are (s:t) on the first factor and (u:v) on the second. A form
// of bidegree (d1, d2) has (d1 + 1)(d2 + 1) coefficients; the coefficient of
// s^i t^(d1-i) u^j v^(d2-j) sits at index i * (d2 + 1) + j (i outer, j inner).
//
// Lines: a horizontal line (class (1,0)) is a fiber of the first projection,
// {(s:t) = at}; a vertical line (class (0,1)) is a fiber of the second.

#include <array>
#include <compare>
#include <cstddef>
#include <string>
#include <vector>

#include "quadscroll/field.hpp"
#include "quadscroll/matrix.hpp"

namespace quadscroll {

struct BiDegree {
  int first = 0;   // degree in (s:t), the "k" slot
  int second = 0;  // degree in (u:v), the "a" slot

  bool is_empty() const { return first < 0 || second < 0; }
  friend auto operator<=>(const BiDegree&, const BiDegree&) = default;
};

/// Projective dimension of |d|: (d1+1)(d2+1) - 1, or -1 for an empty system.
int system_size(BiDegree d);

/// Number of monomials, 0 for an empty system.
std::size_t monomial_count(BiDegree d);

inline std::size_t monomial_index(BiDegree d, int i, int j) {
  return static_cast<std::size_t>(i) * static_cast<std::size_t>(d.second + 1) + static_cast<std::size_t>(j);
}

/// (a,b).(a',b') = ab' + ba'.
int intersection_number(BiDegree lhs, BiDegree rhs);

/// A point of P^1 stored with its first nonzero coordinate equal to 1:
/// either [1 : x] or [0 : 1].
class ProjPoint {
 public:
  /// Throws std::invalid_argument for (0, 0) or mixed fields.
  static ProjPoint make(const Scalar& c0, const Scalar& c1);
  static ProjPoint affine(const Scalar& x);
  static ProjPoint at_infinity(const FieldSpec& field);

  const Scalar& c0() const { return c0_; }
  const Scalar& c1() const { return c1_; }
  const FieldSpec& field() const { return c0_.field(); }
  /// True for [0 : 1]; the chart coordinate is then c0 / c1.
  bool is_at_infinity() const { return c0_.is_zero(); }

  std::string to_string() const;

  friend bool operator==(const ProjPoint&, const ProjPoint&) = default;

 private:
  ProjPoint(Scalar c0, Scalar c1) : c0_(std::move(c0)), c1_(std::move(c1)) {}
  Scalar c0_;
  Scalar c1_;
};

struct QuadricPoint {
  ProjPoint first;
  ProjPoint second;

  const FieldSpec& field() const { return first.field(); }
  std::string to_string() const;
  friend bool operator==(const QuadricPoint&, const QuadricPoint&) = default;
};

enum class LineFamily { horizontal, vertical };

struct Line {
  LineFamily family = LineFamily::horizontal;
  ProjPoint at;

  BiDegree degree() const {
    return family == LineFamily::horizontal ? BiDegree{1, 0} : BiDegree{0, 1};
  }
  bool contains(const QuadricPoint& p) const {
    return family == LineFamily::horizontal ? p.first == at : p.second == at;
  }
  std::string to_string() const;
  friend bool operator==(const Line&, const Line&) = default;
};

/// A univariate binary form c_0 y^n + c_1 x y^(n-1) + ... ; coeffs[j] is the
/// coefficient of x^j y^(n-j), where (x:y) is (u:v) or (s:t).
struct BinaryForm {
  int degree = 0;
  std::vector<Scalar> coeffs;

  bool is_zero() const;
  friend bool operator==(const BinaryForm&, const BinaryForm&) = default;
};

class BiForm {
 public:
  static BiForm zero(const FieldSpec& field, BiDegree d);
  static BiForm monomial(const FieldSpec& field, BiDegree d, int i, int j);
  /// Throws std::invalid_argument if the length is not (d1+1)(d2+1).
  static BiForm from_coeffs(const FieldSpec& field, BiDegree d, std::vector<Scalar> coeffs);
  /// The defining form of a line: c1*s - c0*t (horizontal) or c1*u - c0*v (vertical).
  static BiForm of_line(const Line& line);

  const FieldSpec& field() const { return field_; }
  BiDegree degree() const { return degree_; }
  const std::vector<Scalar>& coeffs() const { return coeffs_; }
  const Scalar& coeff(int i, int j) const { return coeffs_[monomial_index(degree_, i, j)]; }
  bool is_zero() const;

  BiForm& operator+=(const BiForm& rhs);
  BiForm& operator*=(const Scalar& factor);
  friend BiForm operator+(BiForm lhs, const BiForm& rhs) { return lhs += rhs; }
  friend BiForm operator*(BiForm lhs, const Scalar& factor) { return lhs *= factor; }
  friend BiForm operator*(const BiForm& lhs, const BiForm& rhs);

  friend bool operator==(const BiForm&, const BiForm&) = default;

 private:
  BiForm(const FieldSpec& field, BiDegree d, std::vector<Scalar> coeffs)
      : field_(field), degree_(d), coeffs_(std::move(coeffs)) {}

  FieldSpec field_;
  BiDegree degree_;
  std::vector<Scalar> coeffs_;
};

/// Values of every monomial of bidegree d at p, in coefficient order. This is
/// the point's row in a vanishing-condition matrix.
std::vector<Scalar> monomial_values(BiDegree d, const QuadricPoint& p);

Scalar evaluate(const BiForm& f, const QuadricPoint& p);

/// Order-2 Taylor data in the affine chart at p. For each factor the chart
/// dehomogenizes by the first nonzero coordinate of the point; x (first
/// factor) and y (second factor) are centered at p.
struct Jet2 {
  Scalar value;
  std::array<Scalar, 2> gradient;   // d/dx, d/dy
  std::array<Scalar, 3> quadratic;  // coefficients of x^2, xy, y^2
};

Jet2 local_jet2(const BiForm& f, const QuadricPoint& p);

/// Taylor coefficients of every monomial at p. Row r (0..5) holds the
/// coefficient of 1, x, y, x^2, xy, y^2 respectively.
std::array<std::vector<Scalar>, 6> monomial_jets(BiDegree d, const QuadricPoint& p);

/// Restriction to a line: degree d2 in (u:v) for horizontal lines, degree d1
/// in (s:t) for vertical ones. Zero iff the line is a component of f.
BinaryForm restrict_to_line(const BiForm& f, const Line& line);

}  // namespace quadscroll
