#include "quadscroll/linear_systems.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>

namespace quadscroll {

namespace {

// Total order on points for duplicate detection.
std::string point_key(const QuadricPoint& p) { return p.to_string(); }

}  // namespace

ExactMatrix condition_matrix(BiDegree d, std::span<const VanishingCondition> conditions,
                             const FieldSpec& field) {
  if (d.is_empty()) throw std::invalid_argument("condition matrix needs a nonnegative bidegree");
  ExactMatrix m(field, 0, monomial_count(d));
  std::set<std::string> seen;
  for (const auto& cond : conditions) {
    if (!(cond.point.field() == field)) throw std::invalid_argument("condition point over another field");
    if (cond.multiplicity != 1 && cond.multiplicity != 2) {
      throw std::invalid_argument("multiplicity must be 1 or 2");
    }
    if (!seen.insert(point_key(cond.point)).second) {
      throw std::invalid_argument("point " + cond.point.to_string() + " listed twice");
    }
    if (cond.multiplicity == 1) {
      m.append_row(monomial_values(d, cond.point));
    } else {
      const auto jets = monomial_jets(d, cond.point);
      m.append_row(jets[0]);
      m.append_row(jets[1]);
      m.append_row(jets[2]);
    }
  }
  return m;
}

int system_dimension(BiDegree d, std::span<const VanishingCondition> conditions, const FieldSpec& field) {
  if (d.is_empty()) return -1;
  const auto m = condition_matrix(d, conditions, field);
  return system_size(d) - static_cast<int>(rank(m));
}

std::vector<int> sorted_degrees(std::vector<int> ys) {
  std::sort(ys.begin(), ys.end(), std::greater<>());
  return ys;
}

int lemma3_expected_dim(int k, int a, std::vector<int> ys) {
  if (k < 0 || a < 0) throw std::invalid_argument("k and a must be nonnegative");
  if (ys.size() > static_cast<std::size_t>(k) + 1) {
    throw std::invalid_argument("at most k+1 = " + std::to_string(k + 1) + " divisor degrees allowed");
  }
  ys = sorted_degrees(std::move(ys));
  if (!ys.empty() && ys.back() < 0) throw std::invalid_argument("divisor degrees must be nonnegative");
  if (!ys.empty() && ys.front() > a) {
    throw std::invalid_argument("y_1 = " + std::to_string(ys.front()) + " exceeds a = " + std::to_string(a));
  }
  return k * a + k + a - std::accumulate(ys.begin(), ys.end(), 0);
}

SystemDimReport lemma3_verify(int k, int a, std::vector<int> ys, const FieldSpec& field, std::uint64_t seed,
                              Placement placement) {
  const int expected = lemma3_expected_dim(k, a, ys);
  ys = sorted_degrees(std::move(ys));
  ys.resize(static_cast<std::size_t>(k) + 1, 0);

  Rng rng(seed);
  const auto sample = sample_line_divisors(field, ys, rng, placement);
  std::vector<VanishingCondition> conditions;
  for (const auto& d : sample.divisors)
    for (const auto& p : d) conditions.push_back(VanishingCondition{p, 1});

  const BiDegree bidegree{k, a};
  const auto m = condition_matrix(bidegree, conditions, field);
  SystemDimReport report;
  report.bidegree = bidegree;
  report.rank = rank(m);
  report.computed_dim = system_size(bidegree) - static_cast<int>(report.rank);
  report.expected_dim = expected;
  report.matches = report.computed_dim == expected;
  report.matrix_shape = {m.rows(), m.cols()};
  return report;
}

NodeConfiguration::NodeConfiguration(int k, int a, std::vector<Line> lines,
                                     std::vector<std::vector<QuadricPoint>> divisors, const FieldSpec& field)
    : k_(k), a_(a), field_(field) {
  if (k < 2) throw std::invalid_argument("node configurations need k >= 2");
  if (a < 1) throw std::invalid_argument("node configurations need a >= 1");
  if (lines.size() != static_cast<std::size_t>(k - 1) || divisors.size() != lines.size()) {
    throw std::invalid_argument("expected k-1 = " + std::to_string(k - 1) + " lines with one divisor each");
  }
  std::set<std::string> line_keys;
  std::set<std::string> verticals;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const Line& line = lines[i];
    if (line.family != LineFamily::horizontal) throw std::invalid_argument("node lines must be horizontal");
    if (!(line.at.field() == field)) throw std::invalid_argument("line over another field");
    if (!line_keys.insert(line.at.to_string()).second) throw std::invalid_argument("node lines must be distinct");
    std::set<std::string> on_line;
    for (const auto& p : divisors[i]) {
      if (!(p.field() == field)) throw std::invalid_argument("node over another field");
      if (!line.contains(p)) throw std::invalid_argument("node " + p.to_string() + " is not on " + line.to_string());
      if (!on_line.insert(p.second.to_string()).second) {
        throw std::invalid_argument("repeated node " + p.to_string());
      }
      if (!verticals.insert(p.second.to_string()).second) {
        throw std::invalid_argument("two nodes share the vertical line through " + p.to_string());
      }
    }
  }
  std::vector<std::size_t> order(lines.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t x, std::size_t y) { return divisors[x].size() > divisors[y].size(); });
  for (std::size_t idx : order) {
    lines_.push_back(lines[idx]);
    divisors_.push_back(divisors[idx]);
  }
}

NodeConfiguration NodeConfiguration::sample(int k, int a, std::vector<int> ys, const FieldSpec& field,
                                            std::uint64_t seed) {
  if (k < 2) throw std::invalid_argument("node configurations need k >= 2");
  if (ys.size() > static_cast<std::size_t>(k - 1)) {
    throw std::invalid_argument("at most k-1 = " + std::to_string(k - 1) + " divisor degrees allowed");
  }
  ys = sorted_degrees(std::move(ys));
  ys.resize(static_cast<std::size_t>(k - 1), 0);
  Rng rng(seed);
  auto sample = sample_line_divisors(field, ys, rng, Placement::generic);
  return NodeConfiguration(k, a, std::move(sample.lines), std::move(sample.divisors), field);
}

std::vector<int> NodeConfiguration::ys() const {
  std::vector<int> out;
  for (const auto& d : divisors_) out.push_back(static_cast<int>(d.size()));
  return out;
}

int NodeConfiguration::y_max() const { return divisors_.empty() ? 0 : static_cast<int>(divisors_.front().size()); }

int NodeConfiguration::total_nodes() const {
  int n = 0;
  for (const auto& d : divisors_) n += static_cast<int>(d.size());
  return n;
}

std::vector<QuadricPoint> NodeConfiguration::nodes() const {
  std::vector<QuadricPoint> out;
  for (const auto& d : divisors_) out.insert(out.end(), d.begin(), d.end());
  return out;
}

std::vector<VanishingCondition> NodeConfiguration::node_conditions(int multiplicity) const {
  std::vector<VanishingCondition> out;
  for (const auto& p : nodes()) out.push_back(VanishingCondition{p, multiplicity});
  return out;
}

NodeConfiguration NodeConfiguration::with_a(int a) const {
  return NodeConfiguration(k_, a, lines_, divisors_, field_);
}

}  // namespace quadscroll
