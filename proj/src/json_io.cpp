#include "quadscroll/json_io.hpp"

#include <stdexcept>

namespace quadscroll::json_io {

namespace {

std::string_view source_name(ProfileSource s) { return s == ProfileSource::closed_form ? "closed_form" : "ladder"; }

std::string_view char_name(CharAssumption c) { return c == CharAssumption::zero ? "zero" : "positive"; }

const Json& require(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw std::invalid_argument(std::string("missing field '") + key + "'");
  return j.at(key);
}

int require_int(const Json& j, const char* key) {
  const Json& v = require(j, key);
  if (!v.is_number_integer()) throw std::invalid_argument(std::string("field '") + key + "' must be an integer");
  return v.get<int>();
}

}  // namespace

Json to_json(const Scalar& s) {
  if (s.field().is_prime_field()) return s.residue();
  return s.to_string();
}

Json to_json(const ProjPoint& p) { return Json::array({to_json(p.c0()), to_json(p.c1())}); }

Json to_json(const QuadricPoint& p) { return Json::array({to_json(p.first), to_json(p.second)}); }

Json to_json(const Line& line) {
  return Json{{"family", line.family == LineFamily::horizontal ? "horizontal" : "vertical"}, {"at", to_json(line.at)}};
}

Json to_json(BiDegree d) { return Json::array({d.first, d.second}); }

Json to_json(const BiForm& f) {
  Json coeffs = Json::array();
  for (const auto& c : f.coeffs()) coeffs.push_back(to_json(c));
  return Json{{"bidegree", to_json(f.degree())}, {"field", f.field().to_string()}, {"coefficients", coeffs}};
}

Json to_json(const NodeConfiguration& cfg) {
  Json lines = Json::array();
  for (const auto& l : cfg.lines()) lines.push_back(to_json(l.at));
  Json divisors = Json::array();
  for (const auto& d : cfg.divisors()) {
    Json pts = Json::array();
    for (const auto& p : d) pts.push_back(to_json(p));
    divisors.push_back(pts);
  }
  return Json{{"k", cfg.k()},       {"a", cfg.a()},         {"field", cfg.field().to_string()},
              {"ys", cfg.ys()},     {"lines", lines},       {"divisors", divisors}};
}

Json to_json(const SystemDimReport& r) {
  return Json{{"bidegree", to_json(r.bidegree)},
              {"computed_dim", r.computed_dim},
              {"expected_dim", r.expected_dim ? Json(*r.expected_dim) : Json("n/a")},
              {"matches", r.matches},
              {"rank", r.rank},
              {"matrix_shape", Json::array({r.matrix_shape.first, r.matrix_shape.second})}};
}

Json to_json(const LadderTable& t) {
  return Json{{"m_max", t.m_max}, {"canonical_dims", t.canonical_dims}, {"f_values", t.f_values}};
}

Json to_json(const ScrollarProfile& p) {
  return Json{{"k", p.k},           {"a", p.a},         {"ys", p.ys},
              {"es", p.es},         {"genus", p.genus}, {"source", source_name(p.source)},
              {"block_starts", p.block_starts}};
}

Json to_json(const CrossValidation& cv) {
  return Json{{"agree", cv.agree},
              {"closed_form", to_json(cv.closed_form)},
              {"ladder", to_json(cv.ladder)},
              {"ladder_table", to_json(cv.table)},
              {"diff", cv.diff}};
}

Json to_json(const NodalCurveCandidate& c) {
  Json nodes = Json::array();
  for (const auto& p : c.cfg.nodes()) nodes.push_back(to_json(p));
  Json reports = Json::array();
  for (const auto& r : c.node_reports) {
    reports.push_back(Json{{"point", to_json(r.point)}, {"class", to_string(r.classification)}});
  }
  Json extra = Json::array();
  for (const auto& p : c.extra_singular_points) extra.push_back(to_json(p));
  Json coeffs = Json::array();
  for (const auto& v : c.form.coeffs()) coeffs.push_back(to_json(v));
  return Json{{"format", kCurveFormat},
              {"bidegree", to_json(c.form.degree())},
              {"field", c.form.field().to_string()},
              {"coefficients", coeffs},
              {"nodes", nodes},
              {"configuration", to_json(c.cfg)},
              {"diagnostics",
               Json{{"node_reports", reports},
                    {"extra_singular_points", extra},
                    {"line_component", c.line_component ? to_json(*c.line_component) : Json(nullptr)},
                    {"scan_performed", c.scan_performed},
                    {"attempts_used", c.attempts_used},
                    {"seed", c.seed}}}};
}

Json to_json(const BuildResult& r) {
  Json attempts = Json::array();
  for (const auto& a : r.attempts) {
    attempts.push_back(Json{{"attempt", a.attempt},
                            {"ordinary_nodes", a.ordinary_nodes},
                            {"degenerate_nodes", a.degenerate_nodes},
                            {"extra_singular_points", a.extra_singular_points},
                            {"line_component", a.line_component},
                            {"accepted", a.accepted},
                            {"rejection", a.rejection}});
  }
  return Json{{"success", r.success},
              {"seed", r.seed},
              {"singular_system_dim", r.singular_system_dim},
              {"failure_reason", r.failure_reason},
              {"attempts", attempts},
              {"curve", r.curve ? to_json(*r.curve) : Json(nullptr)}};
}

Json to_json(const RealizationPlan& p) {
  return Json{{"target_es", p.target_es},
              {"k", p.k},
              {"e", p.e},
              {"g", p.g},
              {"a", p.a},
              {"ys", p.ys},
              {"bound_A", p.bound ? Json(*p.bound) : Json(nullptr)},
              {"guaranteed", p.guaranteed},
              {"char_assumption", char_name(p.char_assumption)},
              {"regime", p.regime == PlanRegime::spread ? "spread" : "balanced"},
              {"min_a", p.min_a}};
}

Json to_json(const RealizationReport& r) {
  return Json{{"success", r.success},
              {"failure_reason", r.failure_reason},
              {"plan", to_json(r.plan)},
              {"recovered_es", r.recovered_es},
              {"genus", r.profiles ? Json(r.profiles->ladder.genus) : Json(nullptr)},
              {"configuration", r.cfg ? to_json(*r.cfg) : Json(nullptr)},
              {"build", to_json(r.build)},
              {"profiles", r.profiles ? to_json(*r.profiles) : Json(nullptr)}};
}

Scalar scalar_from_json(const FieldSpec& field, const Json& j) {
  if (j.is_number_integer()) return Scalar::from_int(field, j.get<long long>());
  if (j.is_string()) return Scalar::parse(field, j.get<std::string>());
  throw std::invalid_argument("scalar must be an integer or a string, got " + j.dump());
}

ProjPoint point_from_json(const FieldSpec& field, const Json& j) {
  if (!j.is_array() || j.size() != 2) throw std::invalid_argument("point must be [c0, c1], got " + j.dump());
  return ProjPoint::make(scalar_from_json(field, j[0]), scalar_from_json(field, j[1]));
}

QuadricPoint quadric_point_from_json(const FieldSpec& field, const Json& j) {
  if (!j.is_array() || j.size() != 2) throw std::invalid_argument("quadric point must be [[..],[..]], got " + j.dump());
  return QuadricPoint{point_from_json(field, j[0]), point_from_json(field, j[1])};
}

NodeConfiguration configuration_from_json(const Json& j) {
  const FieldSpec field = FieldSpec::parse(require(j, "field").get<std::string>());
  const int k = require_int(j, "k");
  const int a = require_int(j, "a");
  const Json& lines_j = require(j, "lines");
  const Json& divisors_j = require(j, "divisors");
  if (!lines_j.is_array() || !divisors_j.is_array()) throw std::invalid_argument("lines and divisors must be arrays");
  std::vector<Line> lines;
  for (const auto& l : lines_j) lines.push_back(Line{LineFamily::horizontal, point_from_json(field, l)});
  std::vector<std::vector<QuadricPoint>> divisors;
  for (const auto& d : divisors_j) {
    std::vector<QuadricPoint> pts;
    for (const auto& p : d) pts.push_back(quadric_point_from_json(field, p));
    divisors.push_back(std::move(pts));
  }
  return NodeConfiguration(k, a, std::move(lines), std::move(divisors), field);
}

CurveFile curve_from_json(const Json& j) {
  try {
    if (j.contains("format") && j.at("format") != kCurveFormat) {
      throw std::invalid_argument("unsupported curve format " + j.at("format").dump());
    }
    const FieldSpec field = FieldSpec::parse(require(j, "field").get<std::string>());
    const Json& bd = require(j, "bidegree");
    if (!bd.is_array() || bd.size() != 2) throw std::invalid_argument("bidegree must be [d1, d2]");
    const BiDegree degree{bd[0].get<int>(), bd[1].get<int>()};
    std::vector<Scalar> coeffs;
    for (const auto& c : require(j, "coefficients")) coeffs.push_back(scalar_from_json(field, c));
    BiForm form = BiForm::from_coeffs(field, degree, std::move(coeffs));
    NodeConfiguration cfg = configuration_from_json(require(j, "configuration"));
    if (!(cfg.field() == field)) throw std::invalid_argument("configuration field differs from curve field");
    if (cfg.k() != degree.first || cfg.a() != degree.second) {
      throw std::invalid_argument("configuration (k, a) differs from the curve bidegree");
    }
    return CurveFile{std::move(form), std::move(cfg)};
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed curve document: ") + e.what());
  }
}

}  // namespace quadscroll::json_io
