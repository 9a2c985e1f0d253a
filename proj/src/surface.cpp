#include "quadscroll/surface.hpp"

#include <stdexcept>

namespace quadscroll {

int system_size(BiDegree d) {
  if (d.is_empty()) return -1;
  return (d.first + 1) * (d.second + 1) - 1;
}

std::size_t monomial_count(BiDegree d) {
  return d.is_empty() ? 0 : static_cast<std::size_t>(system_size(d) + 1);
}

int intersection_number(BiDegree lhs, BiDegree rhs) {
  return lhs.first * rhs.second + lhs.second * rhs.first;
}

ProjPoint ProjPoint::make(const Scalar& c0, const Scalar& c1) {
  if (!(c0.field() == c1.field())) throw std::invalid_argument("point coordinates over different fields");
  if (c0.is_zero() && c1.is_zero()) throw std::invalid_argument("(0, 0) is not a point of P^1");
  if (c0.is_zero()) return ProjPoint(c0, Scalar::one(c1.field()));
  return ProjPoint(Scalar::one(c0.field()), c1 / c0);
}

ProjPoint ProjPoint::affine(const Scalar& x) { return ProjPoint(Scalar::one(x.field()), x); }

ProjPoint ProjPoint::at_infinity(const FieldSpec& field) {
  return ProjPoint(Scalar::zero(field), Scalar::one(field));
}

std::string ProjPoint::to_string() const { return "[" + c0_.to_string() + ":" + c1_.to_string() + "]"; }

std::string QuadricPoint::to_string() const { return "(" + first.to_string() + "," + second.to_string() + ")"; }

std::string Line::to_string() const {
  return std::string(family == LineFamily::horizontal ? "horizontal" : "vertical") + " " + at.to_string();
}

bool BinaryForm::is_zero() const {
  for (const auto& c : coeffs)
    if (!c.is_zero()) return false;
  return true;
}

BiForm BiForm::zero(const FieldSpec& field, BiDegree d) {
  if (d.is_empty()) throw std::invalid_argument("no forms of negative bidegree");
  return BiForm(field, d, std::vector<Scalar>(monomial_count(d), Scalar::zero(field)));
}

BiForm BiForm::monomial(const FieldSpec& field, BiDegree d, int i, int j) {
  if (i < 0 || i > d.first || j < 0 || j > d.second) throw std::invalid_argument("monomial exponent out of range");
  BiForm f = zero(field, d);
  f.coeffs_[monomial_index(d, i, j)] = Scalar::one(field);
  return f;
}

BiForm BiForm::from_coeffs(const FieldSpec& field, BiDegree d, std::vector<Scalar> coeffs) {
  if (d.is_empty()) throw std::invalid_argument("no forms of negative bidegree");
  if (coeffs.size() != monomial_count(d)) {
    throw std::invalid_argument("expected " + std::to_string(monomial_count(d)) + " coefficients, got " +
                                std::to_string(coeffs.size()));
  }
  for (const auto& c : coeffs) {
    if (!(c.field() == field)) throw std::invalid_argument("coefficient field mismatch");
  }
  return BiForm(field, d, std::move(coeffs));
}

BiForm BiForm::of_line(const Line& line) {
  const FieldSpec& field = line.at.field();
  BiForm f = zero(field, line.degree());
  // Index 1 holds s (resp. u), index 0 holds t (resp. v).
  f.coeffs_[1] = line.at.c1();
  f.coeffs_[0] = -line.at.c0();
  return f;
}

bool BiForm::is_zero() const {
  for (const auto& c : coeffs_)
    if (!c.is_zero()) return false;
  return true;
}

BiForm& BiForm::operator+=(const BiForm& rhs) {
  if (degree_ != rhs.degree_) throw std::invalid_argument("adding forms of different bidegree");
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  return *this;
}

BiForm& BiForm::operator*=(const Scalar& factor) {
  for (auto& c : coeffs_) c *= factor;
  return *this;
}

BiForm operator*(const BiForm& lhs, const BiForm& rhs) {
  const BiDegree d{lhs.degree_.first + rhs.degree_.first, lhs.degree_.second + rhs.degree_.second};
  BiForm out = BiForm::zero(lhs.field_, d);
  for (int i1 = 0; i1 <= lhs.degree_.first; ++i1)
    for (int j1 = 0; j1 <= lhs.degree_.second; ++j1) {
      const Scalar& a = lhs.coeff(i1, j1);
      if (a.is_zero()) continue;
      for (int i2 = 0; i2 <= rhs.degree_.first; ++i2)
        for (int j2 = 0; j2 <= rhs.degree_.second; ++j2) {
          out.coeffs_[monomial_index(d, i1 + i2, j1 + j2)] += a * rhs.coeff(i2, j2);
        }
    }
  return out;
}

namespace {

// taylor[e][r]: coefficient of z^r (r = 0..2) in the chart expansion of
// X^e Y^(n-e) at the point, where (X:Y) are the factor's coordinates.
std::vector<std::array<Scalar, 3>> factor_taylor(int n, const ProjPoint& p) {
  const FieldSpec& field = p.field();
  const Scalar zero = Scalar::zero(field);
  std::vector<std::array<Scalar, 3>> taylor(static_cast<std::size_t>(n + 1), {zero, zero, zero});
  if (p.is_at_infinity()) {
    // Y = 1, X = z.
    for (int e = 0; e <= n && e <= 2; ++e) taylor[static_cast<std::size_t>(e)][static_cast<std::size_t>(e)] = Scalar::one(field);
    return taylor;
  }
  // X = 1, Y = c1 + z: (c1 + z)^m with m = n - e.
  const Scalar& c = p.c1();
  for (int e = 0; e <= n; ++e) {
    const int m = n - e;
    auto& t = taylor[static_cast<std::size_t>(e)];
    t[0] = c.pow(static_cast<unsigned>(m));
    if (m >= 1) t[1] = Scalar::from_int(field, m) * c.pow(static_cast<unsigned>(m - 1));
    if (m >= 2) t[2] = Scalar::from_int(field, static_cast<long long>(m) * (m - 1) / 2) * c.pow(static_cast<unsigned>(m - 2));
  }
  return taylor;
}

void require_field(const FieldSpec& a, const FieldSpec& b) {
  if (!(a == b)) throw std::invalid_argument("form and point over different fields");
}

}  // namespace

std::array<std::vector<Scalar>, 6> monomial_jets(BiDegree d, const QuadricPoint& p) {
  if (d.is_empty()) throw std::invalid_argument("no monomials of negative bidegree");
  const auto t1 = factor_taylor(d.first, p.first);
  const auto t2 = factor_taylor(d.second, p.second);
  std::array<std::vector<Scalar>, 6> rows;
  for (auto& r : rows) r.reserve(monomial_count(d));
  for (int i = 0; i <= d.first; ++i) {
    const auto& a = t1[static_cast<std::size_t>(i)];
    for (int j = 0; j <= d.second; ++j) {
      const auto& b = t2[static_cast<std::size_t>(j)];
      rows[0].push_back(a[0] * b[0]);
      rows[1].push_back(a[1] * b[0]);
      rows[2].push_back(a[0] * b[1]);
      rows[3].push_back(a[2] * b[0]);
      rows[4].push_back(a[1] * b[1]);
      rows[5].push_back(a[0] * b[2]);
    }
  }
  return rows;
}

std::vector<Scalar> monomial_values(BiDegree d, const QuadricPoint& p) {
  if (d.is_empty()) throw std::invalid_argument("no monomials of negative bidegree");
  std::vector<Scalar> out;
  out.reserve(monomial_count(d));
  const ProjPoint& a = p.first;
  const ProjPoint& b = p.second;
  for (int i = 0; i <= d.first; ++i) {
    const Scalar x = a.c0().pow(static_cast<unsigned>(i)) * a.c1().pow(static_cast<unsigned>(d.first - i));
    for (int j = 0; j <= d.second; ++j) {
      out.push_back(x * b.c0().pow(static_cast<unsigned>(j)) * b.c1().pow(static_cast<unsigned>(d.second - j)));
    }
  }
  return out;
}

Scalar evaluate(const BiForm& f, const QuadricPoint& p) {
  require_field(f.field(), p.field());
  const auto row = monomial_values(f.degree(), p);
  Scalar acc = Scalar::zero(f.field());
  for (std::size_t i = 0; i < row.size(); ++i) acc += f.coeffs()[i] * row[i];
  return acc;
}

Jet2 local_jet2(const BiForm& f, const QuadricPoint& p) {
  require_field(f.field(), p.field());
  const auto rows = monomial_jets(f.degree(), p);
  std::vector<Scalar> acc(6, Scalar::zero(f.field()));
  for (std::size_t r = 0; r < 6; ++r)
    for (std::size_t c = 0; c < f.coeffs().size(); ++c) acc[r] += f.coeffs()[c] * rows[r][c];
  return Jet2{acc[0], {acc[1], acc[2]}, {acc[3], acc[4], acc[5]}};
}

BinaryForm restrict_to_line(const BiForm& f, const Line& line) {
  require_field(f.field(), line.at.field());
  const BiDegree d = f.degree();
  const Scalar& c0 = line.at.c0();
  const Scalar& c1 = line.at.c1();
  BinaryForm out;
  if (line.family == LineFamily::horizontal) {
    out.degree = d.second;
    out.coeffs.assign(static_cast<std::size_t>(d.second + 1), Scalar::zero(f.field()));
    for (int i = 0; i <= d.first; ++i) {
      const Scalar w = c0.pow(static_cast<unsigned>(i)) * c1.pow(static_cast<unsigned>(d.first - i));
      if (w.is_zero()) continue;
      for (int j = 0; j <= d.second; ++j) out.coeffs[static_cast<std::size_t>(j)] += w * f.coeff(i, j);
    }
  } else {
    out.degree = d.first;
    out.coeffs.assign(static_cast<std::size_t>(d.first + 1), Scalar::zero(f.field()));
    for (int j = 0; j <= d.second; ++j) {
      const Scalar w = c0.pow(static_cast<unsigned>(j)) * c1.pow(static_cast<unsigned>(d.second - j));
      if (w.is_zero()) continue;
      for (int i = 0; i <= d.first; ++i) out.coeffs[static_cast<std::size_t>(i)] += w * f.coeff(i, j);
    }
  }
  return out;
}

}  // namespace quadscroll
