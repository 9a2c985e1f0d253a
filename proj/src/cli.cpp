#include "quadscroll/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "quadscroll/json_io.hpp"
#include "quadscroll/realizability.hpp"

namespace quadscroll::cli {

namespace {

using json_io::Json;

std::string join(const std::vector<int>& v, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += sep;
    out += std::to_string(v[i]);
  }
  return out;
}

std::string tuple(const std::vector<int>& v) { return "(" + join(v, ",") + ")"; }

struct IntRange {
  int lo = 0;
  int hi = 0;
};

IntRange parse_range(const std::string& text) {
  const auto dots = text.find("..");
  try {
    if (dots == std::string::npos) {
      const int v = std::stoi(text);
      return {v, v};
    }
    IntRange r{std::stoi(text.substr(0, dots)), std::stoi(text.substr(dots + 2))};
    if (r.lo > r.hi) throw std::invalid_argument("empty range");
    return r;
  } catch (const std::logic_error&) {
    throw std::invalid_argument("malformed range '" + text + "' (expected lo..hi)");
  }
}

OutputFormat parse_format(const std::string& s) {
  if (s == "json") return OutputFormat::json;
  if (s == "csv") return OutputFormat::csv;
  if (s == "human") return OutputFormat::human;
  throw std::invalid_argument("unknown output format '" + s + "'");
}

void print_json(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

FieldSpec construction_field(const RunConfig& rc) {
  return rc.scan_prime ? FieldSpec::prime(*rc.scan_prime) : rc.field;
}

BuildOptions build_options(const RunConfig& rc, SamplingStrategy strategy) {
  BuildOptions o;
  o.max_attempts = rc.max_attempts;
  o.strategy = strategy;
  o.max_scan_prime = rc.scan_prime.value_or(kMaxScanPrime);
  return o;
}

// ---- dim -------------------------------------------------------------------

int cmd_dim(const RunConfig& rc, int k, int a, const std::vector<int>& ys, bool generic, std::ostream& out) {
  const auto report = lemma3_verify(k, a, ys, rc.field, rc.seed, generic ? Placement::generic : Placement::arbitrary);
  switch (rc.output.value_or(OutputFormat::json)) {
    case OutputFormat::json: print_json(out, json_io::to_json(report)); break;
    case OutputFormat::csv:
      out << "k,a,ys,computed_dim,expected_dim,matches,rank,rows,cols\n"
          << k << ',' << a << ',' << join(sorted_degrees(ys), ";") << ',' << report.computed_dim << ','
          << *report.expected_dim << ',' << (report.matches ? "true" : "false") << ',' << report.rank << ','
          << report.matrix_shape.first << ',' << report.matrix_shape.second << '\n';
      break;
    case OutputFormat::human:
      out << "|(" << k << "," << a << ") - D_1 - ... - D_" << k + 1 << "| with ys " << tuple(sorted_degrees(ys))
          << " over " << rc.field.to_string() << "\n"
          << "  condition matrix " << report.matrix_shape.first << "x" << report.matrix_shape.second << ", rank "
          << report.rank << "\n"
          << "  computed dim " << report.computed_dim << ", expected " << *report.expected_dim << " -> "
          << (report.matches ? "match" : "MISMATCH") << '\n';
      break;
  }
  return report.matches ? kSuccess : kMismatch;
}

// ---- scrollar ----------------------------------------------------------------

Json curve_document(const Json& j) {
  if (j.contains("coefficients")) return j;
  if (j.contains("curve") && !j.at("curve").is_null()) return j.at("curve");
  if (j.contains("build") && j.at("build").contains("curve") && !j.at("build").at("curve").is_null()) {
    return j.at("build").at("curve");
  }
  throw std::invalid_argument("file holds no curve (expected a curve document or a successful build report)");
}

int cmd_scrollar(const RunConfig& rc, int k, int a, const std::vector<int>& ys, const std::string& from_file,
                 std::ostream& out) {
  std::optional<NodeConfiguration> cfg;
  std::optional<CurveCheck> curve_check;
  if (!from_file.empty()) {
    std::ifstream in(from_file);
    if (!in) throw std::invalid_argument("cannot open '" + from_file + "'");
    Json doc;
    try {
      doc = Json::parse(in);
    } catch (const nlohmann::json::exception& e) {
      throw std::invalid_argument("'" + from_file + "' is not valid JSON: " + e.what());
    }
    auto curve = json_io::curve_from_json(curve_document(doc));
    curve_check = check_curve(curve.form, curve.cfg, rc.scan_prime.value_or(kMaxScanPrime));
    cfg = std::move(curve.cfg);
  } else {
    cfg = NodeConfiguration::sample(k, a, ys, rc.field, rc.seed);
  }

  const auto cv = cross_validate(*cfg);
  std::vector<int> h0;
  for (int n = 0; n <= cfg->a(); ++n) h0.push_back(h0_pencil_multiples(*cfg, n));
  const bool curve_ok = !curve_check || curve_check->accepted();

  switch (rc.output.value_or(OutputFormat::json)) {
    case OutputFormat::json: {
      Json j{{"configuration", json_io::to_json(*cfg)},
             {"cross_validation", json_io::to_json(cv)},
             {"h0_pencil_multiples", h0}};
      if (curve_check) {
        j["curve_check"] = Json{{"accepted", curve_check->accepted()},
                                {"rejection", curve_check->rejection()},
                                {"scan_performed", curve_check->scan_performed}};
      }
      print_json(out, j);
      break;
    }
    case OutputFormat::csv:
      out << "m,dim,f\n";
      for (int m = 0; m <= cv.table.m_max; ++m) {
        out << m << ',' << cv.table.canonical_dims[static_cast<std::size_t>(m)] << ',';
        if (m >= 1) out << cv.table.f_values[static_cast<std::size_t>(m - 1)];
        out << '\n';
      }
      break;
    case OutputFormat::human:
      out << "k=" << cfg->k() << " a=" << cfg->a() << " ys=" << tuple(cfg->ys()) << " over "
          << cfg->field().to_string() << "\n";
      out << std::setw(4) << "m" << std::setw(8) << "dim" << std::setw(6) << "f" << "   (dim |omega_C - m g^1_k|)\n";
      for (int m = 0; m <= cv.table.m_max; ++m) {
        out << std::setw(4) << m << std::setw(8) << cv.table.canonical_dims[static_cast<std::size_t>(m)];
        if (m >= 1) out << std::setw(6) << cv.table.f_values[static_cast<std::size_t>(m - 1)];
        out << '\n';
      }
      out << "closed form es=" << tuple(cv.closed_form.es) << " genus=" << cv.closed_form.genus << "\n"
          << "ladder      es=" << tuple(cv.ladder.es) << " genus=" << cv.ladder.genus << "\n"
          << (cv.agree ? "routes agree" : "routes DISAGREE: " + cv.diff) << '\n';
      if (curve_check) {
        out << "curve check: " << (curve_check->accepted() ? "accepted" : curve_check->rejection()) << '\n';
      }
      break;
  }
  return cv.agree && curve_ok ? kSuccess : kMismatch;
}

// ---- build -------------------------------------------------------------------

int cmd_build(const RunConfig& rc, int k, int a, const std::vector<int>& ys, SamplingStrategy strategy,
              const std::string& curve_out, std::ostream& out) {
  const FieldSpec field = construction_field(rc);
  const auto cfg = NodeConfiguration::sample(k, a, ys, field, Rng::derive(rc.seed, 0));
  const auto result = build_nodal_curve(cfg, a, Rng::derive(rc.seed, 1), build_options(rc, strategy));

  if (result.success && !curve_out.empty()) {
    std::ofstream file(curve_out);
    if (!file) throw std::invalid_argument("cannot write '" + curve_out + "'");
    file << json_io::to_json(*result.curve).dump(2) << '\n';
  }
  switch (rc.output.value_or(OutputFormat::json)) {
    case OutputFormat::json:
    case OutputFormat::csv: {
      Json j{{"configuration", json_io::to_json(cfg)}};
      const Json body = json_io::to_json(result);
      for (const auto& [key, value] : body.items()) j[key] = value;
      print_json(out, j);
      break;
    }
    case OutputFormat::human:
      out << "build (" << k << "," << a << ") ys=" << tuple(cfg.ys()) << " over " << field.to_string() << ": "
          << (result.success ? "success" : "failure") << "\n  singular system dim " << result.singular_system_dim
          << ", attempts " << result.attempts.size() << '\n';
      for (const auto& at : result.attempts) {
        out << "  attempt " << at.attempt << ": " << (at.accepted ? "accepted" : at.rejection) << '\n';
      }
      if (!result.success) out << "  " << result.failure_reason << '\n';
      break;
  }
  return result.success ? kSuccess : kBuildFailure;
}

// ---- realize -----------------------------------------------------------------

int cmd_realize(const RunConfig& rc, const std::vector<int>& es, SamplingStrategy strategy, std::ostream& out) {
  const auto report = realize_end_to_end(es, construction_field(rc), rc.seed, build_options(rc, strategy));
  switch (rc.output.value_or(OutputFormat::json)) {
    case OutputFormat::json:
    case OutputFormat::csv: print_json(out, json_io::to_json(report)); break;
    case OutputFormat::human:
      out << "target es=" << tuple(report.plan.target_es) << " g=" << report.plan.g << " a=" << report.plan.a
          << " ys=" << tuple(report.plan.ys) << (report.plan.guaranteed ? " (guaranteed)" : " (not guaranteed)")
          << '\n';
      if (report.success) {
        out << "realized: recovered es=" << tuple(report.recovered_es) << " genus=" << report.profiles->ladder.genus
            << '\n';
      } else {
        out << "failed: " << report.failure_reason << '\n';
      }
      break;
  }
  if (report.success) return kSuccess;
  return report.build.success ? kMismatch : kBuildFailure;
}

// ---- enumerate ---------------------------------------------------------------

int cmd_enumerate(const RunConfig& rc, int g, int k, std::optional<int> spread, bool attempt, std::ostream& out) {
  const auto plans = enumerate_sequences(g, k, spread, char_assumption_of(rc.field));
  std::vector<std::optional<bool>> realized(plans.size());
  if (attempt) {
    if (!construction_field(rc).is_prime_field()) throw std::invalid_argument("--attempt needs a prime field");
    for (std::size_t i = 0; i < plans.size(); ++i) {
      realized[i] = realize_end_to_end(plans[i].target_es, construction_field(rc), Rng::derive(rc.seed, i),
                                       build_options(rc, SamplingStrategy::uniform))
                        .success;
    }
  }
  const auto realized_text = [&](std::size_t i) -> std::string {
    return realized[i] ? (*realized[i] ? "true" : "false") : "-";
  };

  switch (rc.output.value_or(OutputFormat::csv)) {
    case OutputFormat::csv:
      out << "sequence,e,a,ys,A,g,guaranteed,realized\n";
      for (std::size_t i = 0; i < plans.size(); ++i) {
        const auto& p = plans[i];
        out << join(p.target_es, ";") << ',' << p.e << ',' << p.a << ',' << join(p.ys, ";") << ','
            << (p.bound ? std::to_string(*p.bound) : "-") << ',' << p.g << ',' << (p.guaranteed ? "true" : "false")
            << ',' << realized_text(i) << '\n';
      }
      break;
    case OutputFormat::json: {
      Json rows = Json::array();
      for (std::size_t i = 0; i < plans.size(); ++i) {
        Json row = json_io::to_json(plans[i]);
        row["realized"] = realized[i] ? Json(*realized[i]) : Json(nullptr);
        rows.push_back(row);
      }
      print_json(out, Json{{"g", g}, {"k", k}, {"field", rc.field.to_string()}, {"plans", rows}});
      break;
    }
    case OutputFormat::human:
      for (std::size_t i = 0; i < plans.size(); ++i) {
        const auto& p = plans[i];
        out << tuple(p.target_es) << "  e=" << p.e << " a=" << p.a << " ys=" << tuple(p.ys)
            << " A=" << (p.bound ? std::to_string(*p.bound) : "-") << " g=" << p.g
            << (p.guaranteed ? "  guaranteed" : "  not guaranteed");
        if (realized[i]) out << (*realized[i] ? "  realized" : "  not realized");
        out << '\n';
      }
      break;
  }
  for (const auto& r : realized) {
    if (r && !*r) return kBuildFailure;
  }
  return kSuccess;
}

// ---- sweep -------------------------------------------------------------------

int cmd_sweep(const RunConfig& rc, IntRange ks, IntRange as, int trials, std::ostream& out) {
  if (ks.lo < 2 || as.lo < 2 || trials < 1) throw std::invalid_argument("sweep needs k >= 2, a >= 2, trials >= 1");
  struct Row {
    int k, a;
    std::vector<int> ys;
    std::uint64_t seed;
    CrossValidation cv;
  };
  std::vector<Row> rows;
  std::uint64_t counter = 0;
  int failures = 0;
  for (int k = ks.lo; k <= ks.hi; ++k)
    for (int a = as.lo; a <= as.hi; ++a)
      for (int t = 0; t < trials; ++t) {
        const std::uint64_t trial_seed = Rng::derive(rc.seed, counter++);
        Rng rng(trial_seed);
        std::vector<int> ys;
        for (int i = 0; i < k - 1; ++i) ys.push_back(static_cast<int>(rng.below(static_cast<std::uint64_t>(a - 1))));
        const auto cfg = NodeConfiguration::sample(k, a, ys, rc.field, Rng::derive(trial_seed, 1));
        auto cv = cross_validate(cfg);
        if (!cv.agree) ++failures;
        rows.push_back(Row{k, a, cfg.ys(), trial_seed, std::move(cv)});
      }

  switch (rc.output.value_or(OutputFormat::csv)) {
    case OutputFormat::csv:
    case OutputFormat::human:
      out << "k,a,ys,seed,closed_es,ladder_es,genus,agree\n";
      for (const auto& r : rows) {
        out << r.k << ',' << r.a << ',' << join(r.ys, ";") << ',' << r.seed << ',' << join(r.cv.closed_form.es, ";")
            << ',' << join(r.cv.ladder.es, ";") << ',' << r.cv.ladder.genus << ',' << (r.cv.agree ? "true" : "false")
            << '\n';
      }
      out << "# trials=" << rows.size() << " failures=" << failures << '\n';
      break;
    case OutputFormat::json: {
      Json jr = Json::array();
      for (const auto& r : rows) {
        jr.push_back(Json{{"k", r.k},
                          {"a", r.a},
                          {"ys", r.ys},
                          {"seed", r.seed},
                          {"closed_es", r.cv.closed_form.es},
                          {"ladder_es", r.cv.ladder.es},
                          {"genus", r.cv.ladder.genus},
                          {"agree", r.cv.agree}});
      }
      print_json(out, Json{{"trials", rows.size()}, {"failures", failures}, {"rows", jr}});
      break;
    }
  }
  return failures == 0 ? kSuccess : kMismatch;
}

SamplingStrategy parse_strategy(const std::string& s) {
  if (s == "uniform") return SamplingStrategy::uniform;
  if (s == "structured") return SamplingStrategy::structured;
  throw std::invalid_argument("unknown strategy '" + s + "'");
}

}  // namespace

std::uint32_t default_prime() {
  if (const char* env = std::getenv("QUADSCROLL_PRIME")) {
    try {
      return FieldSpec::prime(static_cast<std::uint32_t>(std::stoul(env))).modulus();
    } catch (const std::exception&) {
      // Ignore malformed overrides.
    }
  }
  return kDefaultPrime;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Scrollar invariants of gonality pencils on nodal curves in P^1 x P^1", "quadscroll"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string field_text = "p:" + std::to_string(default_prime());
  std::uint64_t seed = 0;
  std::string output_text;
  int max_attempts = 20;
  std::uint32_t scan_prime = 0;
  app.add_option("--field", field_text, "p:<prime> or rational")->capture_default_str();
  app.add_option("--seed", seed, "Random seed")->capture_default_str();
  app.add_option("--output", output_text, "json | csv | human")->check(CLI::IsMember({"json", "csv", "human"}));
  app.add_option("--max-attempts", max_attempts, "Curve sampling attempts")->capture_default_str()->check(CLI::PositiveNumber);
  app.add_option("--scan-prime", scan_prime, "Build curves over this prime and scan it for singularities");

  int k = 0, a = 0, g = 0, spread = -1, trials = 5;
  std::vector<int> ys, es;
  std::string from_file, curve_out, strategy_text = "uniform", k_range, a_range;
  bool generic = false, attempt = false;

  auto* dim = app.add_subcommand("dim", "Check the dimension formula for |(k,a) - D_1 - ... - D_{k+1}|");
  dim->add_option("--k", k)->required();
  dim->add_option("--a", a)->required();
  dim->add_option("--ys", ys, "Divisor degrees, comma separated")->delimiter(',');
  dim->add_flag("--generic", generic, "No vertical line through two points");

  auto* scrollar = app.add_subcommand("scrollar", "Scrollar invariants by closed form and by ladder");
  auto* sk = scrollar->add_option("--k", k);
  auto* sa = scrollar->add_option("--a", a);
  scrollar->add_option("--ys", ys)->delimiter(',');
  auto* sf = scrollar->add_option("--from-file", from_file, "Curve JSON written by build");
  sf->excludes(sk)->excludes(sa);

  auto* build = app.add_subcommand("build", "Construct a nodal curve with prescribed nodes");
  build->add_option("--k", k)->required();
  build->add_option("--a", a)->required();
  build->add_option("--ys", ys)->delimiter(',');
  build->add_option("--strategy", strategy_text, "uniform | structured")->capture_default_str();
  build->add_option("--curve-out", curve_out, "Write the accepted curve document here");

  auto* realize = app.add_subcommand("realize", "Realize a scrollar sequence end to end");
  realize->add_option("--es", es)->required()->delimiter(',');
  realize->add_option("--strategy", strategy_text)->capture_default_str();

  auto* enumerate = app.add_subcommand("enumerate", "List scrollar sequences for (g, k) with guarantee flags");
  enumerate->add_option("--g", g)->required();
  enumerate->add_option("--k", k)->required();
  enumerate->add_option("--e", spread, "Restrict to spread e_{k-1} - e_1");
  enumerate->add_flag("--attempt", attempt, "Run the end-to-end construction for each row");

  auto* sweep = app.add_subcommand("sweep", "Cross-validate both scrollar routes over (k, a) ranges");
  sweep->add_option("--k", k_range, "Range lo..hi")->required();
  sweep->add_option("--a", a_range, "Range lo..hi")->required();
  sweep->add_option("--trials", trials)->capture_default_str();

  std::vector<const char*> argv{"quadscroll"};
  for (const auto& s : args) argv.push_back(s.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kUsageError;
  }

  try {
    RunConfig rc;
    rc.field = FieldSpec::parse(field_text);
    rc.seed = seed;
    if (!output_text.empty()) rc.output = parse_format(output_text);
    rc.max_attempts = max_attempts;
    if (scan_prime != 0) rc.scan_prime = FieldSpec::prime(scan_prime).modulus();

    if (dim->parsed()) return cmd_dim(rc, k, a, ys, generic, out);
    if (scrollar->parsed()) {
      if (from_file.empty() && (sk->count() == 0 || sa->count() == 0)) {
        throw std::invalid_argument("scrollar needs --k and --a, or --from-file");
      }
      return cmd_scrollar(rc, k, a, ys, from_file, out);
    }
    if (build->parsed()) return cmd_build(rc, k, a, ys, parse_strategy(strategy_text), curve_out, out);
    if (realize->parsed()) return cmd_realize(rc, es, parse_strategy(strategy_text), out);
    if (enumerate->parsed()) {
      return cmd_enumerate(rc, g, k, spread >= 0 ? std::optional<int>(spread) : std::nullopt, attempt, out);
    }
    if (sweep->parsed()) return cmd_sweep(rc, parse_range(k_range), parse_range(a_range), trials, out);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }
  return kUsageError;
}

}  // namespace quadscroll::cli
