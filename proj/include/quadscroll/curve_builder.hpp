#pragma once

// Randomized construction of nodal curves of type (k, a) with prescribed
// nodes, plus the checks used to accept them:
//   * every prescribed node is an ordinary node (nonzero discriminant of the
//     local quadratic part);
//   * no other F_q-rational singular point (exhaustive scan, prime fields up
//     to BuildOptions::max_scan_prime);
//   * no horizontal or vertical line component.
// Singular points over extensions of F_q and components that are not lines
// are not detected.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "quadscroll/linear_systems.hpp"

namespace quadscroll {

inline constexpr std::uint32_t kMaxScanPrime = 499;

/// Smallest a covered by the existence statement: (k-1) y1, plus one in
/// positive characteristic.
int proposition1_min_a(int k, int y1, std::uint32_t characteristic);

/// Kernel of the multiplicity-2 node conditions on bidegree (k, a): the
/// coefficient vectors of forms singular at every node.
std::vector<Vector> singular_system(const NodeConfiguration& cfg, int a);

enum class PointClass { smooth, ordinary_node, degenerate_singular };

std::string_view to_string(PointClass c);

/// Throws std::invalid_argument if f does not vanish at p.
PointClass classify_point(const BiForm& f, const QuadricPoint& p);

/// Every F_q-rational point where f and both chart partials vanish, ordered
/// by first factor then second factor (affine points by residue, infinity
/// last). Throws std::invalid_argument over the rationals.
std::vector<QuadricPoint> scan_singularities(const BiForm& f);

/// A horizontal or vertical line dividing f, horizontal family first.
/// Throws std::invalid_argument over the rationals.
std::optional<Line> detect_line_component(const BiForm& f);

enum class SamplingStrategy {
  uniform,     // uniform random member of the singular system
  structured,  // random combination of reducible members gamma + L_i + vertical lines
};

struct BuildOptions {
  int max_attempts = 20;
  SamplingStrategy strategy = SamplingStrategy::uniform;
  std::uint32_t max_scan_prime = kMaxScanPrime;
};

struct NodeReport {
  QuadricPoint point;
  PointClass classification;
};

struct CurveCheck {
  std::vector<NodeReport> node_reports;
  std::vector<QuadricPoint> extra_singular_points;
  std::optional<Line> line_component;
  bool scan_performed = false;
  bool vanishes_doubly = true;  // value and gradient zero at every node

  bool accepted() const;
  std::string rejection() const;
};

/// Runs all acceptance checks on a form against a configuration.
CurveCheck check_curve(const BiForm& f, const NodeConfiguration& cfg, std::uint32_t max_scan_prime = kMaxScanPrime);

struct NodalCurveCandidate {
  BiForm form;
  NodeConfiguration cfg;
  std::vector<NodeReport> node_reports;
  std::vector<QuadricPoint> extra_singular_points;
  std::optional<Line> line_component;
  bool scan_performed = false;
  int attempts_used = 0;
  std::uint64_t seed = 0;
};

struct AttemptReport {
  int attempt = 0;
  int ordinary_nodes = 0;
  int degenerate_nodes = 0;
  std::size_t extra_singular_points = 0;
  bool line_component = false;
  bool accepted = false;
  std::string rejection;
};

struct BuildResult {
  bool success = false;
  std::optional<NodalCurveCandidate> curve;
  std::vector<AttemptReport> attempts;
  std::string failure_reason;
  int singular_system_dim = -1;  // projective
  std::uint64_t seed = 0;
};

/// Samples members of singular_system(cfg, a) until one passes check_curve.
/// Throws std::invalid_argument over the rationals or for a < 1.
BuildResult build_nodal_curve(const NodeConfiguration& cfg, int a, std::uint64_t seed,
                              const BuildOptions& options = {});

/// Members of type F_i: gamma + L_i + verticals through the nodes off L_i +
/// free verticals, with gamma in |(k-1, y1 [+1]) - all nodes|. Empty when a
/// is too small to host the free lines.
std::vector<BiForm> structured_members(const NodeConfiguration& cfg, int a, Rng& rng, std::size_t count);

}  // namespace quadscroll
