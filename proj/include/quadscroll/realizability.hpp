#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "quadscroll/curve_builder.hpp"
#include "quadscroll/scrollar.hpp"

namespace quadscroll {

enum class CharAssumption { zero, positive };

inline CharAssumption char_assumption_of(const FieldSpec& field) {
  return field.characteristic() == 0 ? CharAssumption::zero : CharAssumption::positive;
}

/// (k-1)((k-1)e - 2) in characteristic zero, (k-1)((k-1)e - 1) otherwise.
/// Throws std::invalid_argument unless k >= 2 and e >= 1.
int bound_A(int k, int e, CharAssumption characteristic);

enum class PlanRegime {
  spread,    // e >= 1: covered by the genus bound
  balanced,  // e == 0: all invariants equal, realized by smooth curves
};

struct RealizationPlan {
  std::vector<int> target_es;
  int k = 0;
  int e = 0;  // e_{k-1} - e_1
  int g = 0;
  int a = 0;
  std::vector<int> ys;              // y_i = e_{k-1} - e_i, nonincreasing
  std::optional<int> bound;         // bound_A, absent in the balanced regime
  bool guaranteed = false;
  CharAssumption char_assumption = CharAssumption::zero;
  PlanRegime regime = PlanRegime::spread;
  int min_a = 0;                    // proposition1_min_a(k, y_1, char)
};

/// Minimal-a plan: a = e_{k-1} + 2 and y_i = e_{k-1} - e_i. Throws
/// std::invalid_argument unless es is nonempty, nondecreasing, e_1 >= 0.
RealizationPlan plan_from_sequence(const std::vector<int>& es, CharAssumption characteristic);

/// Every nondecreasing nonnegative sequence of length k-1 with sum g-k+1, in
/// lexicographic order, optionally restricted to spread e.
std::vector<RealizationPlan> enumerate_sequences(int g, int k, std::optional<int> spread,
                                                 CharAssumption characteristic);

struct RealizationReport {
  RealizationPlan plan;
  std::optional<NodeConfiguration> cfg;
  BuildResult build;
  std::optional<CrossValidation> profiles;
  std::vector<int> recovered_es;
  bool success = false;
  std::string failure_reason;
};

/// Plan, sample a generic configuration, build a curve, run both scrollar
/// routes and compare with the target. Throws std::invalid_argument over
/// the rationals.
RealizationReport realize_end_to_end(const std::vector<int>& es, const FieldSpec& field, std::uint64_t seed,
                                     const BuildOptions& options = {});

}  // namespace quadscroll
