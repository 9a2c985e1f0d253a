#include "quadscroll/sampling.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <unordered_set>

namespace quadscroll {

std::uint64_t Rng::below(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("Rng::below(0)");
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % n;
  std::uint64_t x;
  do {
    x = engine_();
  } while (x >= limit);
  return x % n;
}

Scalar Rng::scalar(const FieldSpec& field) {
  if (field.is_prime_field()) return Scalar::from_residue(field, static_cast<std::uint32_t>(below(field.modulus())));
  return Scalar::from_int(field, static_cast<long long>(below(201)) - 100);
}

Scalar Rng::nonzero_scalar(const FieldSpec& field) {
  for (;;) {
    Scalar s = scalar(field);
    if (!s.is_zero()) return s;
  }
}

std::uint64_t Rng::derive(std::uint64_t seed, std::uint64_t stream) {
  // splitmix64 finalizer over the combined value.
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

namespace {

// Rationals: integers in [-window, window] plus infinity.
std::uint64_t rational_window(std::size_t count) { return std::max<std::uint64_t>(100, 4 * count); }

ProjPoint point_from_index(const FieldSpec& field, std::uint64_t index, std::uint64_t pool) {
  if (index + 1 == pool) return ProjPoint::at_infinity(field);
  if (field.is_prime_field()) return ProjPoint::affine(Scalar::from_residue(field, static_cast<std::uint32_t>(index)));
  const auto window = static_cast<long long>((pool - 2) / 2);
  return ProjPoint::affine(Scalar::from_int(field, static_cast<long long>(index) - window));
}

}  // namespace

std::uint64_t sampling_pool_size(const FieldSpec& field, std::size_t count) {
  if (field.is_prime_field()) return std::uint64_t{field.modulus()} + 1;
  return 2 * rational_window(count) + 2;
}

std::vector<ProjPoint> sample_distinct_points(const FieldSpec& field, std::size_t count, Rng& rng) {
  const std::uint64_t pool = sampling_pool_size(field, count);
  if (count > pool) {
    throw std::invalid_argument("field " + field.to_string() + " has only " + std::to_string(pool) +
                                " points on P^1, " + std::to_string(count) + " requested");
  }
  // Floyd's algorithm, then restore draw order for determinism of layout.
  std::vector<std::uint64_t> picked;
  std::unordered_set<std::uint64_t> seen;
  for (std::uint64_t j = pool - count; j < pool; ++j) {
    std::uint64_t t = rng.below(j + 1);
    if (seen.contains(t)) t = j;
    seen.insert(t);
    picked.push_back(t);
  }
  std::vector<ProjPoint> out;
  out.reserve(count);
  for (auto idx : picked) out.push_back(point_from_index(field, idx, pool));
  return out;
}

LineDivisors sample_line_divisors(const FieldSpec& field, const std::vector<int>& ys, Rng& rng,
                                  Placement placement) {
  for (int y : ys) {
    if (y < 0) throw std::invalid_argument("divisor degrees must be nonnegative");
  }
  LineDivisors out;
  const auto firsts = sample_distinct_points(field, ys.size(), rng);
  for (const auto& at : firsts) out.lines.push_back(Line{LineFamily::horizontal, at});

  if (placement == Placement::generic) {
    const auto total = static_cast<std::size_t>(std::accumulate(ys.begin(), ys.end(), 0));
    const auto seconds = sample_distinct_points(field, total, rng);
    std::size_t next = 0;
    for (std::size_t i = 0; i < ys.size(); ++i) {
      std::vector<QuadricPoint> d;
      for (int n = 0; n < ys[i]; ++n) d.push_back(QuadricPoint{firsts[i], seconds[next++]});
      out.divisors.push_back(std::move(d));
    }
  } else {
    for (std::size_t i = 0; i < ys.size(); ++i) {
      const auto seconds = sample_distinct_points(field, static_cast<std::size_t>(ys[i]), rng);
      std::vector<QuadricPoint> d;
      for (const auto& s : seconds) d.push_back(QuadricPoint{firsts[i], s});
      out.divisors.push_back(std::move(d));
    }
  }
  return out;
}

}  // namespace quadscroll
