#include "quadscroll/realizability.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace quadscroll {

int bound_A(int k, int e, CharAssumption characteristic) {
  if (k < 2 || e < 1) throw std::invalid_argument("bound_A needs k >= 2 and e >= 1");
  const int shift = characteristic == CharAssumption::zero ? 2 : 1;
  return (k - 1) * ((k - 1) * e - shift);
}

RealizationPlan plan_from_sequence(const std::vector<int>& es, CharAssumption characteristic) {
  if (es.empty()) throw std::invalid_argument("empty scrollar sequence");
  if (es.front() < 0) throw std::invalid_argument("scrollar invariants are nonnegative");
  if (!std::is_sorted(es.begin(), es.end())) throw std::invalid_argument("scrollar sequence must be nondecreasing");

  RealizationPlan plan;
  plan.target_es = es;
  plan.k = static_cast<int>(es.size()) + 1;
  plan.e = es.back() - es.front();
  plan.g = plan.k - 1 + std::accumulate(es.begin(), es.end(), 0);
  plan.a = es.back() + 2;
  for (int v : es) plan.ys.push_back(es.back() - v);  // nonincreasing because es is nondecreasing
  plan.char_assumption = characteristic;
  plan.min_a = proposition1_min_a(plan.k, plan.ys.front(), characteristic == CharAssumption::zero ? 0 : 1);
  if (plan.e == 0) {
    plan.regime = PlanRegime::balanced;
    plan.guaranteed = true;
  } else {
    plan.regime = PlanRegime::spread;
    plan.bound = bound_A(plan.k, plan.e, characteristic);
    plan.guaranteed = plan.g > *plan.bound;
  }
  return plan;
}

namespace {

void enumerate_rec(std::vector<int>& prefix, int remaining_len, int remaining_sum, int min_value,
                   const std::function<void(const std::vector<int>&)>& emit) {
  if (remaining_len == 0) {
    if (remaining_sum == 0) emit(prefix);
    return;
  }
  // Nondecreasing tail: every remaining entry is >= v, so v * len <= sum.
  for (int v = min_value; v * remaining_len <= remaining_sum; ++v) {
    prefix.push_back(v);
    enumerate_rec(prefix, remaining_len - 1, remaining_sum - v, v, emit);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<RealizationPlan> enumerate_sequences(int g, int k, std::optional<int> spread,
                                                 CharAssumption characteristic) {
  if (g < 1 || k < 2) throw std::invalid_argument("enumerate_sequences needs g >= 1 and k >= 2");
  std::vector<RealizationPlan> out;
  const int total = g - k + 1;
  if (total < 0) return out;
  std::vector<int> prefix;
  enumerate_rec(prefix, k - 1, total, 0, [&](const std::vector<int>& es) {
    if (spread && es.back() - es.front() != *spread) return;
    out.push_back(plan_from_sequence(es, characteristic));
  });
  return out;
}

RealizationReport realize_end_to_end(const std::vector<int>& es, const FieldSpec& field, std::uint64_t seed,
                                     const BuildOptions& options) {
  if (!field.is_prime_field()) throw std::invalid_argument("realize_end_to_end needs a prime field");
  RealizationReport report;
  report.plan = plan_from_sequence(es, char_assumption_of(field));
  const auto& plan = report.plan;

  report.cfg = NodeConfiguration::sample(plan.k, plan.a, plan.ys, field, Rng::derive(seed, 0));
  report.build = build_nodal_curve(*report.cfg, plan.a, Rng::derive(seed, 1), options);
  if (!report.build.success) {
    report.failure_reason = "curve construction failed: " + report.build.failure_reason;
    return report;
  }
  report.profiles = cross_validate(report.build.curve->cfg);
  report.recovered_es = report.profiles->ladder.es;
  if (!report.profiles->agree) {
    report.failure_reason = "scrollar routes disagree: " + report.profiles->diff;
    return report;
  }
  if (report.recovered_es != plan.target_es) {
    report.failure_reason = "recovered invariants differ from the target";
    return report;
  }
  report.success = true;
  return report;
}

}  // namespace quadscroll
