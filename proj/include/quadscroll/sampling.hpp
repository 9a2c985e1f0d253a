#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "quadscroll/surface.hpp"

namespace quadscroll {

/// Seeded generator. Uses its own bounded draw so sequences are identical
/// across standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  /// Uniform in [0, n); n > 0.
  std::uint64_t below(std::uint64_t n);
  Scalar scalar(const FieldSpec& field);
  Scalar nonzero_scalar(const FieldSpec& field);

  /// Derives an independent seed for a numbered sub-task.
  static std::uint64_t derive(std::uint64_t seed, std::uint64_t stream);

 private:
  std::mt19937_64 engine_;
};

enum class Placement {
  arbitrary,  // points distinct within each line only
  generic,    // additionally no vertical line meets two points
};

/// `count` distinct points of P^1 drawn without replacement. Prime fields draw
/// from all p + 1 points; the rationals draw from the integers in a window
/// around 0 plus the point at infinity.
std::vector<ProjPoint> sample_distinct_points(const FieldSpec& field, std::size_t count, Rng& rng);

/// Number of points available to sample_distinct_points.
std::uint64_t sampling_pool_size(const FieldSpec& field, std::size_t count);

struct LineDivisors {
  std::vector<Line> lines;                          // horizontal, pairwise distinct
  std::vector<std::vector<QuadricPoint>> divisors;  // divisors[i] lies on lines[i]
};

/// One horizontal line per entry of ys carrying a reduced divisor of that
/// degree. Throws std::invalid_argument when the field cannot host them.
LineDivisors sample_line_divisors(const FieldSpec& field, const std::vector<int>& ys, Rng& rng,
                                  Placement placement);

}  // namespace quadscroll
