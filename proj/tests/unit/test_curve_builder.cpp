#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "quadscroll/curve_builder.hpp"
#include "quadscroll/scrollar.hpp"
#include "support/helpers.hpp"
#include "support/oracle.hpp"

using namespace quadscroll;
using namespace testing_helpers;

namespace {

const FieldSpec kP = FieldSpec::prime(499);

// Oracle scan: every point of P^1(F_q) x P^1(F_q) where value and all four
// homogeneous partials vanish.
std::vector<oracle::RawPoint> oracle_singular_points(const BiForm& f) {
  const long long q = f.field().modulus();
  const auto coeffs = residues(f.coeffs());
  std::vector<oracle::RawPoint> out;
  const auto coord = [&](long long i) { return i == q ? std::pair<long long, long long>{0, 1} : std::pair<long long, long long>{1, i}; };
  for (long long a = 0; a <= q; ++a)
    for (long long b = 0; b <= q; ++b) {
      const auto [s, t] = coord(a);
      const auto [u, v] = coord(b);
      const oracle::RawPoint P{s, t, u, v};
      const auto vals = oracle::value_and_partials_mod(f.degree().first, f.degree().second, coeffs, P, q);
      if (std::all_of(vals.begin(), vals.end(), [](long long x) { return x == 0; })) out.push_back(P);
    }
  return out;
}

bool contains_point(const std::vector<QuadricPoint>& pts, const oracle::RawPoint& r) {
  return std::any_of(pts.begin(), pts.end(), [&](const QuadricPoint& p) {
    const auto x = raw(p);
    return x.s == r.s && x.t == r.t && x.u == r.u && x.v == r.v;
  });
}

}  // namespace

TEST(Proposition1, MinimalA) {
  EXPECT_EQ(proposition1_min_a(3, 2, 0), 4);
  EXPECT_EQ(proposition1_min_a(3, 2, 499), 5);
  EXPECT_EQ(proposition1_min_a(4, 0, 0), 0);
  EXPECT_EQ(proposition1_min_a(4, 0, 7), 1);
  EXPECT_THROW(proposition1_min_a(1, 2, 0), std::invalid_argument);
}

TEST(SingularSystem, SpecExamples) {
  const auto F = FieldSpec::prime(10007);
  EXPECT_EQ(singular_system(NodeConfiguration::sample(3, 5, {}, F, 0), 5).size(), 24u);
  const auto cfg = NodeConfiguration::sample(3, 5, {2, 1}, F, 0);
  const auto basis = singular_system(cfg, 5);
  EXPECT_EQ(basis.size(), 15u);
  for (const auto& v : basis) {
    const auto f = BiForm::from_coeffs(F, {3, 5}, v);
    for (const auto& p : cfg.nodes()) {
      const auto jet = local_jet2(f, p);
      EXPECT_TRUE(jet.value.is_zero() && jet.gradient[0].is_zero() && jet.gradient[1].is_zero());
    }
  }
  // Outside the bound: reported as-is, no exception.
  EXPECT_NO_THROW(singular_system(NodeConfiguration::sample(2, 1, {2}, F, 0), 1));
}

TEST(SingularSystem, NonEmptyAtProposition1Bound) {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 30; ++trial) {
    const int k = 2 + static_cast<int>(rng() % 3);
    const int y1 = static_cast<int>(rng() % 4);
    std::vector<int> ys{y1};
    for (int i = 1; i < k - 1; ++i) ys.push_back(static_cast<int>(rng() % static_cast<unsigned>(y1 + 1)));
    for (const auto& F : {FieldSpec::prime(499), FieldSpec::prime(10007)}) {
      const int a = std::max(1, proposition1_min_a(k, y1, F.characteristic()));
      EXPECT_FALSE(singular_system(NodeConfiguration::sample(k, a, ys, F, rng()), a).empty());
    }
    const int a0 = std::max(1, proposition1_min_a(k, y1, 0));
    EXPECT_FALSE(singular_system(NodeConfiguration::sample(k, a0, ys, FieldSpec::rational(), 1), a0).empty());
  }
}

TEST(ClassifyPoint, LocalModels) {
  const auto F = FieldSpec::prime(10007);
  const auto center = qp(F, 1, 0, 1, 0);  // chart coordinates x = t, y = v
  EXPECT_EQ(classify_point(BiForm::monomial(F, {1, 1}, 0, 0), center), PointClass::ordinary_node);  // x*y
  EXPECT_EQ(classify_point(BiForm::monomial(F, {2, 0}, 0, 0), center), PointClass::degenerate_singular);  // x^2
  EXPECT_EQ(classify_point(BiForm::monomial(F, {1, 0}, 0, 0), center), PointClass::smooth);  // x
  // x^2 + y^2 has discriminant -4: a node with tangents over F_p(i).
  const auto circle = BiForm::monomial(F, {2, 2}, 0, 2) + BiForm::monomial(F, {2, 2}, 2, 0);
  EXPECT_EQ(classify_point(circle, center), PointClass::ordinary_node);
  EXPECT_THROW(classify_point(BiForm::monomial(F, {1, 1}, 1, 1), center), std::invalid_argument);
  EXPECT_EQ(to_string(PointClass::ordinary_node), "ordinary_node");
}

TEST(ScanSingularities, SpecExamplesAndOracle) {
  const auto F = FieldSpec::prime(13);
  // s*u is singular exactly where both lines cross.
  const auto su = BiForm::monomial(F, {1, 1}, 1, 1);
  const auto s1 = scan_singularities(su);
  ASSERT_EQ(s1.size(), 1u);
  EXPECT_EQ(s1[0], qp(F, 0, 1, 0, 1));
  // A generic (1,1) form is a smooth conic.
  const auto smooth = su + BiForm::monomial(F, {1, 1}, 0, 0);
  EXPECT_TRUE(scan_singularities(smooth).empty());
  // Random forms: scan agrees with the brute-force oracle point for point.
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 25; ++trial) {
    const BiDegree d{1 + static_cast<int>(rng() % 3), 1 + static_cast<int>(rng() % 3)};
    BiForm f = BiForm::zero(F, d);
    // Products of lines give many singular points, random terms perturb them.
    for (int t = 0; t < 2; ++t) {
      BiForm g = BiForm::monomial(F, {0, 0}, 0, 0);
      for (int i = 0; i < d.first; ++i) g = g * BiForm::of_line(Line{LineFamily::horizontal, pt(F, 1, rng() % 13)});
      for (int j = 0; j < d.second; ++j) g = g * BiForm::of_line(Line{LineFamily::vertical, pt(F, 1, rng() % 13)});
      f += g * num(F, static_cast<long long>(rng() % 13));
    }
    if (f.is_zero()) continue;
    const auto scanned = scan_singularities(f);
    const auto expected = oracle_singular_points(f);
    EXPECT_EQ(scanned.size(), expected.size());
    for (const auto& r : expected) EXPECT_TRUE(contains_point(scanned, r));
  }
  EXPECT_THROW(scan_singularities(BiForm::monomial(FieldSpec::rational(), {1, 1}, 1, 1)), std::invalid_argument);
}

TEST(DetectLineComponent, SpecExamples) {
  const auto F = FieldSpec::prime(101);
  const auto s = BiForm::monomial(F, {1, 0}, 1, 0);
  std::mt19937_64 rng(2);
  std::vector<Scalar> c;
  for (int i = 0; i < 9; ++i) c.push_back(num(F, static_cast<long long>(rng() % 101)));
  const auto g = BiForm::from_coeffs(F, {2, 2}, c);
  const auto line = detect_line_component(s * g);
  ASSERT_TRUE(line.has_value());
  EXPECT_EQ(*line, (Line{LineFamily::horizontal, pt(F, 0, 1)}));

  BiForm verticals = BiForm::monomial(F, {0, 0}, 0, 0);
  for (int j = 0; j < 3; ++j) verticals = verticals * BiForm::of_line(Line{LineFamily::vertical, pt(F, 1, 5 + j)});
  const auto v = detect_line_component(verticals);
  ASSERT_TRUE(v.has_value());
  EXPECT_EQ(v->family, LineFamily::vertical);

  const auto smooth = BiForm::monomial(F, {1, 1}, 1, 1) + BiForm::monomial(F, {1, 1}, 0, 0);
  EXPECT_FALSE(detect_line_component(smooth).has_value());
  EXPECT_THROW(detect_line_component(BiForm::monomial(FieldSpec::rational(), {1, 1}, 1, 1)), std::invalid_argument);
}

TEST(BuildNodalCurve, SpecExampleAndAcceptedProperties) {
  const auto F = FieldSpec::prime(10007);
  const auto cfg = NodeConfiguration::sample(3, 5, {2, 1}, F, 17);
  BuildOptions opt;
  opt.max_scan_prime = 10007;  // scan the full field here
  const auto result = build_nodal_curve(cfg, 5, 17, opt);
  ASSERT_TRUE(result.success) << result.failure_reason;
  const auto& curve = *result.curve;
  EXPECT_EQ(curve.node_reports.size(), 3u);
  for (const auto& r : curve.node_reports) EXPECT_EQ(r.classification, PointClass::ordinary_node);
  EXPECT_TRUE(curve.scan_performed);
  EXPECT_TRUE(curve.extra_singular_points.empty());
  EXPECT_FALSE(curve.line_component.has_value());
  EXPECT_EQ(result.singular_system_dim, 14);
}

TEST(BuildNodalCurve, AcceptedCurvesSatisfyInvariants) {
  // F_101 keeps the brute-force oracle scan cheap; the builder's own scan
  // still covers the whole field.
  const FieldSpec F = FieldSpec::prime(101);
  std::mt19937_64 rng(21);
  int built = 0;
  for (int trial = 0; trial < 12; ++trial) {
    const int k = 3 + static_cast<int>(rng() % 2);
    const int y1 = 1 + static_cast<int>(rng() % 3);
    std::vector<int> ys{y1};
    for (int i = 1; i < k - 1; ++i) ys.push_back(static_cast<int>(rng() % static_cast<unsigned>(y1 + 1)));
    const int a = std::max(proposition1_min_a(k, y1, 101), y1 + 2);
    const auto cfg = NodeConfiguration::sample(k, a, ys, F, rng());
    const auto result = build_nodal_curve(cfg, a, rng());
    ASSERT_TRUE(result.success) << result.failure_reason;
    ++built;
    const auto& f = result.curve->form;
    // Exact double vanishing at every node.
    for (const auto& p : cfg.nodes()) {
      const auto jet = local_jet2(f, p);
      EXPECT_TRUE(jet.value.is_zero() && jet.gradient[0].is_zero() && jet.gradient[1].is_zero());
    }
    // Oracle scan: singular set is exactly the node set.
    const auto sing = oracle_singular_points(f);
    EXPECT_EQ(sing.size(), cfg.nodes().size());
    for (const auto& r : sing) EXPECT_TRUE(contains_point(cfg.nodes(), r));
    // The pencil has degree k on a generic vertical line.
    const auto restricted = restrict_to_line(f, Line{LineFamily::vertical, pt(F, 1, 57)});
    EXPECT_EQ(restricted.degree, k);
    EXPECT_FALSE(restricted.is_zero());
    // The constructed object's ladder matches the closed form.
    EXPECT_TRUE(cross_validate(result.curve->cfg).agree);
  }
  EXPECT_EQ(built, 12);
}

TEST(BuildNodalCurve, SmoothAndStructuredStrategies) {
  const auto smooth = build_nodal_curve(NodeConfiguration::sample(4, 3, {}, kP, 1), 3, 2);
  ASSERT_TRUE(smooth.success);
  EXPECT_TRUE(smooth.curve->node_reports.empty());

  BuildOptions structured;
  structured.strategy = SamplingStrategy::structured;
  const auto cfg = NodeConfiguration::sample(3, 5, {2, 1}, kP, 4);
  const auto r = build_nodal_curve(cfg, 5, 5, structured);
  ASSERT_TRUE(r.success) << r.failure_reason;
  for (const auto& n : r.curve->node_reports) EXPECT_EQ(n.classification, PointClass::ordinary_node);

  // Each structured member is singular at every node (it is reducible).
  Rng rng(3);
  for (const auto& m : structured_members(cfg, 5, rng, 4)) {
    EXPECT_EQ(m.degree(), (BiDegree{3, 5}));
    for (const auto& p : cfg.nodes()) {
      const auto jet = local_jet2(m, p);
      EXPECT_TRUE(jet.value.is_zero() && jet.gradient[0].is_zero() && jet.gradient[1].is_zero());
    }
  }
}

TEST(BuildNodalCurve, TwoLineBoundIsTooSmallForKEqualTwo) {
  // k = 2: a = y_1 (+1) < 2 y_1 forces L_1 into every singular member, since
  // L_1 meets a (2,a) curve in a points but each of the y_1 nodes counts twice.
  for (int y1 : {2, 3, 4}) {
    const int a = proposition1_min_a(2, y1, 499);
    const auto cfg = NodeConfiguration::sample(2, a, {y1}, kP, 6);
    for (const auto& v : singular_system(cfg, a)) {
      EXPECT_TRUE(restrict_to_line(BiForm::from_coeffs(kP, {2, a}, v), cfg.lines()[0]).is_zero());
    }
    const auto result = build_nodal_curve(cfg, a, 7);
    EXPECT_FALSE(result.success);
    EXPECT_FALSE(result.failure_reason.empty());
    EXPECT_EQ(result.attempts.size(), 20u);
  }
  // Doubling a removes the obstruction.
  const auto cfg = NodeConfiguration::sample(2, 6, {3}, kP, 6);
  EXPECT_TRUE(build_nodal_curve(cfg, 6, 7).success);
}

TEST(BuildNodalCurve, ErrorsAndDiagnostics) {
  EXPECT_THROW(build_nodal_curve(NodeConfiguration::sample(3, 5, {2, 1}, FieldSpec::rational(), 0), 5, 0),
               std::invalid_argument);
  // Large scan prime skipped beyond the limit, but still node-checked.
  const auto cfg = NodeConfiguration::sample(3, 5, {2, 1}, FieldSpec::prime(10007), 0);
  const auto r = build_nodal_curve(cfg, 5, 0);
  ASSERT_TRUE(r.success);
  EXPECT_FALSE(r.curve->scan_performed);
  // An over-constrained system is reported as empty.
  const auto tight = NodeConfiguration::sample(3, 1, {1, 1}, kP, 0);
  const auto empty = build_nodal_curve(tight, 1, 0);
  if (singular_system(tight, 1).empty()) {
    EXPECT_FALSE(empty.success);
    EXPECT_EQ(empty.singular_system_dim, -1);
  }
}
