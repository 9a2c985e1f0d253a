#include "quadscroll/scrollar.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace quadscroll {

namespace {

std::string join(const std::vector<int>& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(v[i]);
  }
  return out + ")";
}

}  // namespace

std::vector<int> block_starts(const std::vector<int>& ys, int k) {
  std::vector<int> starts{1};
  for (std::size_t i = 1; i < ys.size(); ++i) {
    if (ys[i] != ys[i - 1]) starts.push_back(static_cast<int>(i) + 1);
  }
  starts.push_back(k);
  return starts;
}

int arithmetic_genus_minus_nodes(const NodeConfiguration& cfg) {
  return (cfg.k() - 1) * (cfg.a() - 1) - cfg.total_nodes();
}

ScrollarProfile scrollar_closed_form(const NodeConfiguration& cfg) {
  const int a = cfg.a();
  const auto ys = cfg.ys();
  if (a < cfg.y_max() + 2) {
    throw std::invalid_argument("closed form needs a >= y_1 + 2 (a = " + std::to_string(a) +
                                ", y_1 = " + std::to_string(cfg.y_max()) + ")");
  }
  ScrollarProfile profile;
  profile.k = cfg.k();
  profile.a = a;
  profile.ys = ys;
  for (int y : ys) profile.es.push_back(a - y - 2);
  std::sort(profile.es.begin(), profile.es.end());
  profile.genus = (cfg.k() - 1) + std::accumulate(profile.es.begin(), profile.es.end(), 0);
  profile.source = ProfileSource::closed_form;
  profile.block_starts = block_starts(ys, cfg.k());
  return profile;
}

int canonical_dim(const NodeConfiguration& cfg, int m) {
  if (m < 0) throw std::invalid_argument("canonical_dim needs m >= 0");
  const BiDegree d{cfg.k() - 2, cfg.a() - 2 - m};
  if (d.is_empty()) return -1;
  const auto conditions = cfg.node_conditions(1);
  return system_dimension(d, conditions, cfg.field());
}

LadderTable compute_ladder(const NodeConfiguration& cfg) {
  LadderTable t;
  t.m_max = cfg.a();
  for (int m = 0; m <= t.m_max; ++m) t.canonical_dims.push_back(canonical_dim(cfg, m));
  for (int n = 1; n <= t.m_max; ++n) {
    const int before = t.canonical_dims[static_cast<std::size_t>(n - 1)] + 1;
    const int after = t.canonical_dims[static_cast<std::size_t>(n)] + 1;
    t.f_values.push_back(before - after);
  }
  return t;
}

ScrollarProfile scrollar_from_ladder(const LadderTable& table, int k) {
  if (k < 2) throw std::invalid_argument("scrollar invariants need k >= 2");
  if (table.canonical_dims.empty()) throw std::invalid_argument("empty ladder");
  ScrollarProfile profile;
  profile.k = k;
  profile.source = ProfileSource::ladder;
  profile.genus = table.canonical_dims.front() + 1;
  for (int i = 1; i <= k - 1; ++i) {
    int found = -1;
    for (std::size_t n = 1; n <= table.f_values.size(); ++n) {
      if (table.f_values[n - 1] < k - i) {
        found = static_cast<int>(n);
        break;
      }
    }
    if (found < 0) {
      throw std::runtime_error("ladder never drops below " + std::to_string(k - i) + "; table is incomplete");
    }
    profile.es.push_back(found - 2);
  }
  return profile;
}

int h0_pencil_multiples(const NodeConfiguration& cfg, int n) {
  if (n < 0) throw std::invalid_argument("h0_pencil_multiples needs n >= 0");
  const int g = canonical_dim(cfg, 0) + 1;
  return n * cfg.k() - g + 1 + canonical_dim(cfg, n) + 1;
}

CrossValidation cross_validate(const NodeConfiguration& cfg) {
  CrossValidation out;
  out.closed_form = scrollar_closed_form(cfg);
  out.table = compute_ladder(cfg);
  out.ladder = scrollar_from_ladder(out.table, cfg.k());
  out.ladder.a = cfg.a();
  out.ladder.ys = cfg.ys();
  out.ladder.block_starts = out.closed_form.block_starts;
  out.agree = out.closed_form.es == out.ladder.es && out.closed_form.genus == out.ladder.genus;
  if (!out.agree) {
    out.diff = "closed form es=" + join(out.closed_form.es) + " genus=" + std::to_string(out.closed_form.genus) +
               "; ladder es=" + join(out.ladder.es) + " genus=" + std::to_string(out.ladder.genus);
  }
  return out;
}

}  // namespace quadscroll
