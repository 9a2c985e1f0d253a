#include "quadscroll/matrix.hpp"

#include <stdexcept>
#include <utility>

#include "quadscroll/kernels.hpp"

namespace quadscroll {

ExactMatrix::ExactMatrix(const FieldSpec& field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols) {
  if (field.is_prime_field()) {
    entries_ = std::vector<std::uint32_t>(rows * cols, 0);
  } else {
    entries_ = std::vector<mpq_class>(rows * cols);
  }
}

ExactMatrix ExactMatrix::from_rows(const FieldSpec& field, std::size_t cols,
                                   const std::vector<Vector>& rows) {
  ExactMatrix m(field, 0, cols);
  for (const auto& row : rows) m.append_row(row);
  return m;
}

ExactMatrix ExactMatrix::from_integers(const FieldSpec& field, std::size_t rows, std::size_t cols,
                                       std::span<const long long> entries) {
  if (entries.size() != rows * cols) throw std::invalid_argument("entry count does not match shape");
  ExactMatrix m(field, rows, cols);
  for (std::size_t i = 0; i < entries.size(); ++i) {
    m.set(i / cols, i % cols, Scalar::from_int(field, entries[i]));
  }
  return m;
}

Scalar ExactMatrix::at(std::size_t r, std::size_t c) const {
  if (r >= rows_ || c >= cols_) throw std::out_of_range("matrix index out of range");
  if (field_.is_prime_field()) {
    return Scalar::from_residue(field_, std::get<0>(entries_)[r * cols_ + c]);
  }
  return Scalar::from_rational(field_, std::get<1>(entries_)[r * cols_ + c]);
}

void ExactMatrix::set(std::size_t r, std::size_t c, const Scalar& value) {
  if (r >= rows_ || c >= cols_) throw std::out_of_range("matrix index out of range");
  if (!(value.field() == field_)) throw std::invalid_argument("entry field does not match matrix field");
  if (field_.is_prime_field()) {
    std::get<0>(entries_)[r * cols_ + c] = value.residue();
  } else {
    std::get<1>(entries_)[r * cols_ + c] = value.rational();
  }
}

void ExactMatrix::append_row(std::span<const Scalar> row) {
  if (row.size() != cols_) throw std::invalid_argument("row length does not match column count");
  for (const auto& v : row) {
    if (!(v.field() == field_)) throw std::invalid_argument("entry field does not match matrix field");
  }
  if (field_.is_prime_field()) {
    auto& e = std::get<0>(entries_);
    for (const auto& v : row) e.push_back(v.residue());
  } else {
    auto& e = std::get<1>(entries_);
    for (const auto& v : row) e.push_back(v.rational());
  }
  ++rows_;
}

ExactMatrix ExactMatrix::transpose() const {
  ExactMatrix t(field_, cols_, rows_);
  if (field_.is_prime_field()) {
    const auto& src = std::get<0>(entries_);
    auto& dst = std::get<0>(t.entries_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) dst[c * rows_ + r] = src[r * cols_ + c];
  } else {
    const auto& src = std::get<1>(entries_);
    auto& dst = std::get<1>(t.entries_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) dst[c * rows_ + r] = src[r * cols_ + c];
  }
  return t;
}

Vector ExactMatrix::multiply(std::span<const Scalar> v) const {
  if (v.size() != cols_) throw std::invalid_argument("vector length does not match column count");
  Vector out(rows_, Scalar::zero(field_));
  for (std::size_t r = 0; r < rows_; ++r) {
    Scalar acc = Scalar::zero(field_);
    for (std::size_t c = 0; c < cols_; ++c) acc += at(r, c) * v[c];
    out[r] = acc;
  }
  return out;
}

std::span<const std::uint32_t> ExactMatrix::residues() const {
  if (!field_.is_prime_field()) throw std::logic_error("residues() on a rational matrix");
  return std::get<0>(entries_);
}

std::span<const mpq_class> ExactMatrix::rationals() const {
  if (field_.is_prime_field()) throw std::logic_error("rationals() on a prime-field matrix");
  return std::get<1>(entries_);
}

namespace detail {

ModularEchelon modular_rref(const ExactMatrix& m) {
  const std::uint32_t p = m.field().modulus();
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  ModularEchelon out;
  out.reduced.assign(m.residues().begin(), m.residues().end());
  auto row = [&](std::size_t r) { return std::span<std::uint32_t>(out.reduced).subspan(r * cols, cols); };

  std::size_t pivot_row = 0;
  for (std::size_t c = 0; c < cols && pivot_row < rows; ++c) {
    std::size_t found = pivot_row;
    while (found < rows && out.reduced[found * cols + c] == 0) ++found;
    if (found == rows) continue;
    if (found != pivot_row) {
      auto a = row(found);
      auto b = row(pivot_row);
      std::swap_ranges(a.begin(), a.end(), b.begin());
    }
    auto prow = row(pivot_row);
    kernels::scale_mod(prow.subspan(c), modp::inv(prow[c], p), p);
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == pivot_row) continue;
      const std::uint32_t coeff = out.reduced[r * cols + c];
      if (coeff == 0) continue;
      kernels::axpy_mod(row(r).subspan(c), prow.subspan(c), modp::neg(coeff, p), p);
    }
    out.pivot_columns.push_back(c);
    ++pivot_row;
  }
  return out;
}

BareissEchelon bareiss_echelon(const ExactMatrix& m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  const auto entries = m.rationals();

  std::vector<std::vector<mpz_class>> a(rows, std::vector<mpz_class>(cols));
  for (std::size_t r = 0; r < rows; ++r) {
    mpz_class scale = 1;
    for (std::size_t c = 0; c < cols; ++c) {
      mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), entries[r * cols + c].get_den_mpz_t());
    }
    for (std::size_t c = 0; c < cols; ++c) {
      const mpq_class& q = entries[r * cols + c];
      a[r][c] = q.get_num() * (scale / q.get_den());
    }
  }

  BareissEchelon out;
  mpz_class previous = 1;
  std::size_t pivot_row = 0;
  for (std::size_t c = 0; c < cols && pivot_row < rows; ++c) {
    std::size_t found = pivot_row;
    while (found < rows && sgn(a[found][c]) == 0) ++found;
    if (found == rows) continue;
    std::swap(a[found], a[pivot_row]);
    const mpz_class& pivot = a[pivot_row][c];
    for (std::size_t r = pivot_row + 1; r < rows; ++r) {
      const mpz_class lead = a[r][c];
      for (std::size_t j = c + 1; j < cols; ++j) {
        mpz_class v = pivot * a[r][j] - lead * a[pivot_row][j];
        mpz_divexact(a[r][j].get_mpz_t(), v.get_mpz_t(), previous.get_mpz_t());
      }
      a[r][c] = 0;
    }
    previous = pivot;
    out.pivot_columns.push_back(c);
    ++pivot_row;
  }
  a.resize(pivot_row);
  out.rows = std::move(a);
  return out;
}

}  // namespace detail

std::size_t rank(const ExactMatrix& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  if (m.field().is_prime_field()) return detail::modular_rref(m).pivot_columns.size();
  return detail::bareiss_echelon(m).pivot_columns.size();
}

namespace {

std::vector<Vector> kernel_from_rref(const FieldSpec& field, std::size_t cols,
                                     const std::vector<std::size_t>& pivots,
                                     const std::vector<std::vector<Scalar>>& reduced) {
  std::vector<bool> is_pivot(cols, false);
  for (std::size_t c : pivots) is_pivot[c] = true;
  std::vector<Vector> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    Vector v(cols, Scalar::zero(field));
    v[free] = Scalar::one(field);
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -reduced[i][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace

std::vector<Vector> kernel_basis(const ExactMatrix& m) {
  const FieldSpec& field = m.field();
  const std::size_t cols = m.cols();
  if (m.rows() == 0) {
    return kernel_from_rref(field, cols, {}, {});
  }

  std::vector<std::size_t> pivots;
  std::vector<std::vector<Scalar>> reduced;
  if (field.is_prime_field()) {
    auto echelon = detail::modular_rref(m);
    pivots = echelon.pivot_columns;
    for (std::size_t i = 0; i < pivots.size(); ++i) {
      std::vector<Scalar> row;
      row.reserve(cols);
      for (std::size_t c = 0; c < cols; ++c) {
        row.push_back(Scalar::from_residue(field, echelon.reduced[i * cols + c]));
      }
      reduced.push_back(std::move(row));
    }
  } else {
    auto echelon = detail::bareiss_echelon(m);
    pivots = echelon.pivot_columns;
    // Back substitution on the fraction-free echelon form.
    std::vector<std::vector<mpq_class>> q(pivots.size(), std::vector<mpq_class>(cols));
    for (std::size_t i = 0; i < pivots.size(); ++i) {
      const mpz_class& lead = echelon.rows[i][pivots[i]];
      for (std::size_t c = 0; c < cols; ++c) {
        q[i][c] = mpq_class(echelon.rows[i][c], lead);
        q[i][c].canonicalize();
      }
    }
    for (std::size_t i = pivots.size(); i-- > 0;) {
      for (std::size_t above = 0; above < i; ++above) {
        const mpq_class factor = q[above][pivots[i]];
        if (sgn(factor) == 0) continue;
        for (std::size_t c = pivots[i]; c < cols; ++c) q[above][c] -= factor * q[i][c];
      }
    }
    for (auto& row : q) {
      std::vector<Scalar> srow;
      srow.reserve(cols);
      for (auto& v : row) srow.push_back(Scalar::from_rational(field, v));
      reduced.push_back(std::move(srow));
    }
  }
  return kernel_from_rref(field, cols, pivots, reduced);
}

}  // namespace quadscroll
