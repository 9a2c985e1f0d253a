// Compiled with -mavx2 -mfma; only reached after the CPUID check in kernels.cpp.

#include <immintrin.h>

#include <cassert>

#include "quadscroll/kernels.hpp"

namespace quadscroll::kernels::avx2 {
namespace {

// Four residues per step. Values are exact integers below 2^52 in double, so
// floor(x / p) computed through the reciprocal is off by at most one and is
// corrected by the two compare-and-adjust steps.
struct ModP {
  __m256d p;
  __m256d inv_p;
  __m256d zero;

  explicit ModP(std::uint32_t modulus)
      : p(_mm256_set1_pd(static_cast<double>(modulus))),
        inv_p(_mm256_set1_pd(1.0 / static_cast<double>(modulus))),
        zero(_mm256_setzero_pd()) {}

  __m256d reduce(__m256d x) const {
    __m256d q = _mm256_floor_pd(_mm256_mul_pd(x, inv_p));
    __m256d r = _mm256_fnmadd_pd(q, p, x);
    r = _mm256_add_pd(r, _mm256_and_pd(_mm256_cmp_pd(r, zero, _CMP_LT_OQ), p));
    r = _mm256_sub_pd(r, _mm256_and_pd(_mm256_cmp_pd(r, p, _CMP_GE_OQ), p));
    return r;
  }
};

inline __m256d load4(const std::uint32_t* src) {
  return _mm256_cvtepi32_pd(_mm_loadu_si128(reinterpret_cast<const __m128i*>(src)));
}

inline void store4(std::uint32_t* dst, __m256d v) {
  _mm_storeu_si128(reinterpret_cast<__m128i*>(dst), _mm256_cvttpd_epi32(v));
}

}  // namespace

void axpy_mod(std::span<std::uint32_t> dst, std::span<const std::uint32_t> src,
              std::uint32_t factor, std::uint32_t p) {
  assert(dst.size() == src.size());
  const ModP mod(p);
  const __m256d f = _mm256_set1_pd(static_cast<double>(factor));
  const std::size_t n = dst.size();
  const std::size_t simd_end = n & ~std::size_t{3};
  std::size_t i = 0;
  for (; i < simd_end; i += 4) {
    __m256d x = _mm256_fmadd_pd(f, load4(src.data() + i), load4(dst.data() + i));
    store4(dst.data() + i, mod.reduce(x));
  }
  const std::uint64_t f64 = factor;
  for (; i < n; ++i) dst[i] = static_cast<std::uint32_t>((dst[i] + f64 * src[i]) % p);
}

void scale_mod(std::span<std::uint32_t> v, std::uint32_t factor, std::uint32_t p) {
  const ModP mod(p);
  const __m256d f = _mm256_set1_pd(static_cast<double>(factor));
  const std::size_t n = v.size();
  const std::size_t simd_end = n & ~std::size_t{3};
  std::size_t i = 0;
  for (; i < simd_end; i += 4) {
    store4(v.data() + i, mod.reduce(_mm256_mul_pd(f, load4(v.data() + i))));
  }
  const std::uint64_t f64 = factor;
  for (; i < n; ++i) v[i] = static_cast<std::uint32_t>((f64 * v[i]) % p);
}

void horner_mod(std::span<const std::uint32_t> coeffs, std::span<const std::uint32_t> xs,
                std::span<std::uint32_t> out, std::uint32_t p) {
  assert(xs.size() == out.size());
  const ModP mod(p);
  const std::size_t n = xs.size();
  const std::size_t simd_end = n & ~std::size_t{3};
  std::size_t i = 0;
  for (; i < simd_end; i += 4) {
    const __m256d x = load4(xs.data() + i);
    __m256d acc = _mm256_setzero_pd();
    for (std::uint32_t c : coeffs) {
      acc = mod.reduce(_mm256_fmadd_pd(acc, x, _mm256_set1_pd(static_cast<double>(c))));
    }
    store4(out.data() + i, acc);
  }
  for (; i < n; ++i) {
    std::uint64_t acc = 0;
    const std::uint64_t x = xs[i];
    for (std::uint32_t c : coeffs) acc = (acc * x + c) % p;
    out[i] = static_cast<std::uint32_t>(acc);
  }
}

}  // namespace quadscroll::kernels::avx2
