#include "quadscroll/curve_builder.hpp"

#include <algorithm>
#include <stdexcept>

#include "quadscroll/kernels.hpp"

namespace quadscroll {

int proposition1_min_a(int k, int y1, std::uint32_t characteristic) {
  if (k < 2 || y1 < 0) throw std::invalid_argument("proposition1_min_a needs k >= 2 and y1 >= 0");
  return (k - 1) * y1 + (characteristic == 0 ? 0 : 1);
}

std::vector<Vector> singular_system(const NodeConfiguration& cfg, int a) {
  if (a < 0) throw std::invalid_argument("singular_system needs a >= 0");
  const auto conditions = cfg.node_conditions(2);
  return kernel_basis(condition_matrix(BiDegree{cfg.k(), a}, conditions, cfg.field()));
}

std::string_view to_string(PointClass c) {
  switch (c) {
    case PointClass::smooth: return "smooth";
    case PointClass::ordinary_node: return "ordinary_node";
    case PointClass::degenerate_singular: return "degenerate_singular";
  }
  return "unknown";
}

namespace {

PointClass classify_jet(const Jet2& jet) {
  if (!jet.gradient[0].is_zero() || !jet.gradient[1].is_zero()) return PointClass::smooth;
  const auto& q = jet.quadratic;
  const Scalar disc = q[1] * q[1] - Scalar::from_int(q[0].field(), 4) * q[0] * q[2];
  return disc.is_zero() ? PointClass::degenerate_singular : PointClass::ordinary_node;
}

std::vector<std::uint32_t> residue_grid(const BiForm& f) {
  std::vector<std::uint32_t> out;
  out.reserve(f.coeffs().size());
  for (const auto& c : f.coeffs()) out.push_back(c.residue());
  return out;
}

void require_prime(const BiForm& f, const char* what) {
  if (!f.field().is_prime_field()) {
    throw std::invalid_argument(std::string(what) + " needs a prime field; the rationals are not scannable");
  }
}

std::vector<std::uint32_t> affine_coordinates(std::uint32_t p) {
  std::vector<std::uint32_t> xs(p);
  for (std::uint32_t i = 0; i < p; ++i) xs[i] = i;
  return xs;
}

}  // namespace

PointClass classify_point(const BiForm& f, const QuadricPoint& p) {
  const Jet2 jet = local_jet2(f, p);
  if (!jet.value.is_zero()) throw std::invalid_argument("point " + p.to_string() + " is not on the curve");
  return classify_jet(jet);
}

std::vector<QuadricPoint> scan_singularities(const BiForm& f) {
  require_prime(f, "scan_singularities");
  const FieldSpec& field = f.field();
  const std::uint32_t p = field.modulus();
  const int d1 = f.degree().first;
  const int d2 = f.degree().second;
  const auto c = residue_grid(f);
  const auto idx = [&](int i, int j) { return monomial_index(f.degree(), i, j); };
  const auto xs = affine_coordinates(p);

  std::vector<std::uint32_t> t0(static_cast<std::size_t>(d1 + 1));
  std::vector<std::uint32_t> t1(static_cast<std::size_t>(d1 + 1));
  std::vector<std::uint32_t> g0(static_cast<std::size_t>(d2 + 1));
  std::vector<std::uint32_t> g1(static_cast<std::size_t>(d2 + 1));
  std::vector<std::uint32_t> values(p);
  std::vector<QuadricPoint> out;

  // First-factor points [1:x0] for x0 = 0..p-1, then [0:1].
  for (std::uint32_t first = 0; first <= p; ++first) {
    const bool first_inf = first == p;
    if (first_inf) {
      // t = 1, s = x: s^i contributes x^i.
      std::fill(t0.begin(), t0.end(), 0);
      std::fill(t1.begin(), t1.end(), 0);
      t0[0] = 1;
      if (d1 >= 1) t1[1] = 1;
    } else {
      // s = 1, t = x0 + x: t^m has value x0^m and derivative m x0^(m-1).
      std::vector<std::uint32_t> pw(static_cast<std::size_t>(d1 + 1), 1);
      for (int e = 1; e <= d1; ++e) pw[static_cast<std::size_t>(e)] = modp::mul(pw[static_cast<std::size_t>(e - 1)], first, p);
      for (int i = 0; i <= d1; ++i) {
        const int m = d1 - i;
        t0[static_cast<std::size_t>(i)] = pw[static_cast<std::size_t>(m)];
        t1[static_cast<std::size_t>(i)] = m == 0 ? 0 : modp::mul(static_cast<std::uint32_t>(m % p), pw[static_cast<std::size_t>(m - 1)], p);
      }
    }
    for (int j = 0; j <= d2; ++j) {
      std::uint64_t a0 = 0, a1 = 0;
      for (int i = 0; i <= d1; ++i) {
        a0 = (a0 + std::uint64_t{c[idx(i, j)]} * t0[static_cast<std::size_t>(i)]) % p;
        a1 = (a1 + std::uint64_t{c[idx(i, j)]} * t1[static_cast<std::size_t>(i)]) % p;
      }
      g0[static_cast<std::size_t>(j)] = static_cast<std::uint32_t>(a0);
      g1[static_cast<std::size_t>(j)] = static_cast<std::uint32_t>(a1);
    }
    const ProjPoint first_point = first_inf ? ProjPoint::at_infinity(field)
                                            : ProjPoint::affine(Scalar::from_residue(field, first));

    // Second factor [1:y]: u = 1, v = y, so g(y) = sum_j g[j] y^(d2-j), highest degree first.
    kernels::horner_mod(g0, xs, values, p);
    for (std::uint32_t y = 0; y < p; ++y) {
      if (values[y] != 0) continue;
      std::uint64_t fx = 0, fy = 0;
      for (int j = 0; j <= d2; ++j) fx = (fx * y + g1[static_cast<std::size_t>(j)]) % p;
      for (int j = 0; j < d2; ++j) {
        fy = (fy * y + std::uint64_t{static_cast<std::uint32_t>((d2 - j) % p)} * g0[static_cast<std::size_t>(j)]) % p;
      }
      if (fx == 0 && fy == 0) {
        out.push_back(QuadricPoint{first_point, ProjPoint::affine(Scalar::from_residue(field, y))});
      }
    }
    // Second factor [0:1]: v = 1, u = y, so only j = 0 and j = 1 matter.
    const std::uint32_t val = g0[0];
    const std::uint32_t fx = g1[0];
    const std::uint32_t fy = d2 >= 1 ? g0[1] : 0;
    if (val == 0 && fx == 0 && fy == 0) out.push_back(QuadricPoint{first_point, ProjPoint::at_infinity(field)});
  }
  return out;
}

std::optional<Line> detect_line_component(const BiForm& f) {
  require_prime(f, "detect_line_component");
  const FieldSpec& field = f.field();
  const std::uint32_t p = field.modulus();
  const int d1 = f.degree().first;
  const int d2 = f.degree().second;
  const auto c = residue_grid(f);
  const auto idx = [&](int i, int j) { return monomial_index(f.degree(), i, j); };
  const auto xs = affine_coordinates(p);
  std::vector<std::uint32_t> values(p);
  std::vector<std::uint8_t> alive(p);
  std::vector<std::uint32_t> poly;

  // family == horizontal: polys indexed by j in x (coefficients over i);
  // vertical: polys indexed by i in y (coefficients over j).
  for (LineFamily family : {LineFamily::horizontal, LineFamily::vertical}) {
    const bool horizontal = family == LineFamily::horizontal;
    const int outer = horizontal ? d2 : d1;
    const int inner = horizontal ? d1 : d2;
    std::fill(alive.begin(), alive.end(), 1);
    bool infinity_alive = true;
    for (int o = 0; o <= outer; ++o) {
      poly.clear();
      for (int e = 0; e <= inner; ++e) poly.push_back(horizontal ? c[idx(e, o)] : c[idx(o, e)]);
      // At [0:1] only the e = 0 coefficient survives.
      if (poly[0] != 0) infinity_alive = false;
      kernels::horner_mod(poly, xs, values, p);
      for (std::uint32_t x = 0; x < p; ++x) alive[x] &= static_cast<std::uint8_t>(values[x] == 0);
    }
    for (std::uint32_t x = 0; x < p; ++x) {
      if (alive[x]) return Line{family, ProjPoint::affine(Scalar::from_residue(field, x))};
    }
    if (infinity_alive) return Line{family, ProjPoint::at_infinity(field)};
  }
  return std::nullopt;
}

bool CurveCheck::accepted() const { return rejection().empty(); }

std::string CurveCheck::rejection() const {
  if (!vanishes_doubly) return "form is not singular at every prescribed node";
  for (const auto& r : node_reports) {
    if (r.classification != PointClass::ordinary_node) {
      return "node " + r.point.to_string() + " is " + std::string(to_string(r.classification));
    }
  }
  if (line_component) return "line component " + line_component->to_string();
  if (!extra_singular_points.empty()) {
    return std::to_string(extra_singular_points.size()) + " singular point(s) off the node set, first " +
           extra_singular_points.front().to_string();
  }
  return {};
}

CurveCheck check_curve(const BiForm& f, const NodeConfiguration& cfg, std::uint32_t max_scan_prime) {
  if (!(f.field() == cfg.field())) throw std::invalid_argument("curve and configuration over different fields");
  if (f.is_zero()) throw std::invalid_argument("the zero form is not a curve");
  CurveCheck check;
  const auto nodes = cfg.nodes();
  for (const auto& node : nodes) {
    const Jet2 jet = local_jet2(f, node);
    const bool singular = jet.value.is_zero() && jet.gradient[0].is_zero() && jet.gradient[1].is_zero();
    if (!singular) check.vanishes_doubly = false;
    check.node_reports.push_back(NodeReport{node, jet.value.is_zero() ? classify_jet(jet) : PointClass::smooth});
  }
  if (f.field().is_prime_field()) {
    check.line_component = detect_line_component(f);
    if (f.field().modulus() <= max_scan_prime) {
      check.scan_performed = true;
      for (const auto& s : scan_singularities(f)) {
        if (std::find(nodes.begin(), nodes.end(), s) == nodes.end()) check.extra_singular_points.push_back(s);
      }
    }
  }
  return check;
}

std::vector<BiForm> structured_members(const NodeConfiguration& cfg, int a, Rng& rng, std::size_t count) {
  const FieldSpec& field = cfg.field();
  const int k = cfg.k();
  const int gamma_second = cfg.y_max() + (field.characteristic() == 0 ? 0 : 1);
  const auto gamma_basis =
      kernel_basis(condition_matrix(BiDegree{k - 1, gamma_second}, cfg.node_conditions(1), field));
  if (gamma_basis.empty()) return {};
  const auto ys = cfg.ys();
  const int total = cfg.total_nodes();

  std::vector<BiForm> out;
  for (std::size_t n = 0; n < count; ++n) {
    const auto i = n % static_cast<std::size_t>(k - 1);
    const int free_lines = a - gamma_second - (total - ys[i]);
    if (free_lines < 0) return {};

    Vector gamma(gamma_basis.front().size(), Scalar::zero(field));
    bool nonzero = false;
    while (!nonzero) {
      for (const auto& b : gamma_basis) {
        const Scalar r = rng.scalar(field);
        for (std::size_t c = 0; c < gamma.size(); ++c) gamma[c] += r * b[c];
      }
      nonzero = std::any_of(gamma.begin(), gamma.end(), [](const Scalar& s) { return !s.is_zero(); });
    }
    BiForm form = BiForm::from_coeffs(field, BiDegree{k - 1, gamma_second}, gamma) * BiForm::of_line(cfg.lines()[i]);
    for (std::size_t j = 0; j < cfg.divisors().size(); ++j) {
      if (j == i) continue;
      for (const auto& q : cfg.divisors()[j]) {
        form = form * BiForm::of_line(Line{LineFamily::vertical, q.second});
      }
    }
    for (int l = 0; l < free_lines; ++l) {
      form = form * BiForm::of_line(Line{LineFamily::vertical, ProjPoint::affine(rng.scalar(field))});
    }
    out.push_back(std::move(form));
  }
  return out;
}

BuildResult build_nodal_curve(const NodeConfiguration& cfg, int a, std::uint64_t seed, const BuildOptions& options) {
  if (!cfg.field().is_prime_field()) throw std::invalid_argument("build_nodal_curve needs a prime field");
  if (a < 1) throw std::invalid_argument("build_nodal_curve needs a >= 1");
  const NodeConfiguration target = cfg.a() == a ? cfg : cfg.with_a(a);
  const FieldSpec& field = target.field();
  const BiDegree degree{target.k(), a};

  BuildResult result;
  result.seed = seed;
  const auto basis = singular_system(target, a);
  result.singular_system_dim = static_cast<int>(basis.size()) - 1;
  if (basis.empty()) {
    result.failure_reason = "singular system is empty";
    return result;
  }

  Rng rng(seed);
  for (int attempt = 1; attempt <= options.max_attempts; ++attempt) {
    AttemptReport report;
    report.attempt = attempt;

    std::vector<Scalar> coeffs(monomial_count(degree), Scalar::zero(field));
    if (options.strategy == SamplingStrategy::uniform) {
      for (const auto& b : basis) {
        const Scalar r = rng.scalar(field);
        if (r.is_zero()) continue;
        for (std::size_t c = 0; c < coeffs.size(); ++c) coeffs[c] += r * b[c];
      }
    } else {
      const auto members = structured_members(target, a, rng, 2 * static_cast<std::size_t>(target.k() - 1));
      if (members.empty()) {
        result.failure_reason = "structured sampling needs a >= y_1 (+1) plus the fixed vertical lines";
        return result;
      }
      for (const auto& m : members) {
        const Scalar r = rng.nonzero_scalar(field);
        for (std::size_t c = 0; c < coeffs.size(); ++c) coeffs[c] += r * m.coeffs()[c];
      }
    }
    BiForm form = BiForm::from_coeffs(field, degree, std::move(coeffs));
    if (form.is_zero()) {
      report.rejection = "sampled the zero form";
      result.attempts.push_back(report);
      continue;
    }

    const CurveCheck check = check_curve(form, target, options.max_scan_prime);
    for (const auto& n : check.node_reports) {
      if (n.classification == PointClass::ordinary_node) ++report.ordinary_nodes;
      else ++report.degenerate_nodes;
    }
    report.extra_singular_points = check.extra_singular_points.size();
    report.line_component = check.line_component.has_value();
    report.rejection = check.rejection();
    report.accepted = report.rejection.empty();
    result.attempts.push_back(report);

    if (report.accepted) {
      result.success = true;
      result.curve = NodalCurveCandidate{std::move(form), target,
                                         check.node_reports, check.extra_singular_points,
                                         check.line_component, check.scan_performed,
                                         attempt, seed};
      return result;
    }
  }

  int with_lines = 0, with_extra = 0, with_bad_nodes = 0;
  for (const auto& r : result.attempts) {
    with_lines += r.line_component ? 1 : 0;
    with_extra += r.extra_singular_points > 0 ? 1 : 0;
    with_bad_nodes += r.degenerate_nodes > 0 ? 1 : 0;
  }
  result.failure_reason = "max_attempts (" + std::to_string(options.max_attempts) + ") exhausted: " +
                          std::to_string(with_bad_nodes) + " with non-ordinary nodes, " +
                          std::to_string(with_lines) + " with a line component, " +
                          std::to_string(with_extra) + " with extra singular points";
  return result;
}

}  // namespace quadscroll
