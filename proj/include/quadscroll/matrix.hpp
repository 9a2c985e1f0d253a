#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <variant>
#include <vector>

#include "quadscroll/field.hpp"

namespace quadscroll {

using Vector = std::vector<Scalar>;

/// Dense row-major matrix over an exact field. Prime-field entries are stored
/// as residues, rational entries as GMP rationals.
class ExactMatrix {
 public:
  ExactMatrix(const FieldSpec& field, std::size_t rows, std::size_t cols);

  static ExactMatrix from_rows(const FieldSpec& field, std::size_t cols,
                               const std::vector<Vector>& rows);
  /// Row-major integer entries, reduced into the field.
  static ExactMatrix from_integers(const FieldSpec& field, std::size_t rows, std::size_t cols,
                                   std::span<const long long> entries);

  const FieldSpec& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Scalar at(std::size_t r, std::size_t c) const;
  void set(std::size_t r, std::size_t c, const Scalar& value);
  void append_row(std::span<const Scalar> row);

  ExactMatrix transpose() const;
  Vector multiply(std::span<const Scalar> v) const;

  // Raw storage for the elimination routines.
  std::span<const std::uint32_t> residues() const;
  std::span<const mpq_class> rationals() const;

  friend bool operator==(const ExactMatrix&, const ExactMatrix&) = default;

 private:
  FieldSpec field_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::variant<std::vector<std::uint32_t>, std::vector<mpq_class>> entries_;
};

/// Exact rank. Modular row reduction over F_p, fraction-free Bareiss
/// elimination over the rationals.
std::size_t rank(const ExactMatrix& m);

/// cols - rank(m) independent vectors spanning the right kernel. Each vector
/// has a 1 in its free column and zeros in the other free columns.
std::vector<Vector> kernel_basis(const ExactMatrix& m);

namespace detail {

struct ModularEchelon {
  std::vector<std::uint32_t> reduced;  // rows() x cols(), reduced row echelon form
  std::vector<std::size_t> pivot_columns;
};

ModularEchelon modular_rref(const ExactMatrix& m);

struct BareissEchelon {
  std::vector<std::vector<mpz_class>> rows;  // nonzero echelon rows only
  std::vector<std::size_t> pivot_columns;
};

/// Fraction-free elimination; each input row is first scaled to integers.
BareissEchelon bareiss_echelon(const ExactMatrix& m);

}  // namespace detail

}  // namespace quadscroll
