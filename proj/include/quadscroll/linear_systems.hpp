#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "quadscroll/matrix.hpp"
#include "quadscroll/sampling.hpp"
#include "quadscroll/surface.hpp"

namespace quadscroll {

/// Vanishing to order `multiplicity` at a point. Multiplicity 1 contributes
/// the value row; multiplicity 2 adds the two chart partials.
struct VanishingCondition {
  QuadricPoint point;
  int multiplicity = 1;
};

/// One column per monomial of d, rows in condition order. Throws
/// std::invalid_argument for a negative bidegree, a multiplicity outside
/// {1, 2}, a point over another field, or a point listed twice.
ExactMatrix condition_matrix(BiDegree d, std::span<const VanishingCondition> conditions,
                             const FieldSpec& field);

/// Projective dimension of |d - Z|; -1 when d is negative or nothing survives.
int system_dimension(BiDegree d, std::span<const VanishingCondition> conditions, const FieldSpec& field);

/// Nonincreasing copy of ys.
std::vector<int> sorted_degrees(std::vector<int> ys);

/// k*a + k + a - sum(ys) for k+1 horizontal lines carrying divisors of
/// degrees ys (padded with zeros). Throws std::invalid_argument unless
/// k, a >= 0, |ys| <= k + 1 and 0 <= y_i <= a.
int lemma3_expected_dim(int k, int a, std::vector<int> ys);

struct SystemDimReport {
  BiDegree bidegree;
  int computed_dim = -1;
  std::optional<int> expected_dim;
  bool matches = false;
  std::size_t rank = 0;
  std::pair<std::size_t, std::size_t> matrix_shape{0, 0};
};

/// Samples k+1 distinct horizontal lines with reduced divisors of degrees ys
/// and compares the rank-computed dimension of |(k,a) - D_1 - ... - D_{k+1}|
/// with lemma3_expected_dim.
SystemDimReport lemma3_verify(int k, int a, std::vector<int> ys, const FieldSpec& field, std::uint64_t seed,
                              Placement placement = Placement::arbitrary);

/// Nodes on k-1 horizontal lines: the input to every scrollar computation.
///
/// Invariants, checked on construction: the lines are distinct and
/// horizontal; each divisor lies on its line with distinct points; no
/// vertical line contains two nodes; divisors are ordered by nonincreasing
/// degree (lines are reordered with them).
class NodeConfiguration {
 public:
  NodeConfiguration(int k, int a, std::vector<Line> lines, std::vector<std::vector<QuadricPoint>> divisors,
                    const FieldSpec& field);

  /// Random configuration with the given degrees (sorted on intake).
  static NodeConfiguration sample(int k, int a, std::vector<int> ys, const FieldSpec& field, std::uint64_t seed);

  int k() const { return k_; }
  int a() const { return a_; }
  const FieldSpec& field() const { return field_; }
  const std::vector<Line>& lines() const { return lines_; }
  const std::vector<std::vector<QuadricPoint>>& divisors() const { return divisors_; }
  std::vector<int> ys() const;
  int y_max() const;
  int total_nodes() const;
  std::vector<QuadricPoint> nodes() const;
  std::vector<VanishingCondition> node_conditions(int multiplicity) const;

  /// Same nodes with a different a.
  NodeConfiguration with_a(int a) const;

 private:
  int k_;
  int a_;
  FieldSpec field_;
  std::vector<Line> lines_;
  std::vector<std::vector<QuadricPoint>> divisors_;
};

}  // namespace quadscroll
