#include "quadscroll/kernels.hpp"

#include <cstdlib>
#include <string>

namespace quadscroll::kernels {
namespace {

bool cpu_has_avx2() {
#if defined(QUADSCROLL_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

Backend detect() {
  if (const char* forced = std::getenv("QUADSCROLL_SIMD")) {
    if (std::string(forced) == "scalar") return Backend::scalar;
  }
  return cpu_has_avx2() ? Backend::avx2 : Backend::scalar;
}

bool use_simd(std::uint32_t p) {
  static const Backend backend = detect();
  return backend == Backend::avx2 && p < kMaxSimdPrime;
}

}  // namespace

std::string_view backend_name(Backend backend) {
  return backend == Backend::avx2 ? "avx2" : "scalar";
}

bool backend_available(Backend backend) {
  return backend == Backend::scalar || cpu_has_avx2();
}

Backend active_backend() {
  static const Backend backend = detect();
  return backend;
}

void axpy_mod(std::span<std::uint32_t> dst, std::span<const std::uint32_t> src,
              std::uint32_t factor, std::uint32_t p) {
#if defined(QUADSCROLL_HAVE_AVX2)
  if (use_simd(p)) return avx2::axpy_mod(dst, src, factor, p);
#endif
  scalar::axpy_mod(dst, src, factor, p);
}

void scale_mod(std::span<std::uint32_t> v, std::uint32_t factor, std::uint32_t p) {
#if defined(QUADSCROLL_HAVE_AVX2)
  if (use_simd(p)) return avx2::scale_mod(v, factor, p);
#endif
  scalar::scale_mod(v, factor, p);
}

void horner_mod(std::span<const std::uint32_t> coeffs, std::span<const std::uint32_t> xs,
                std::span<std::uint32_t> out, std::uint32_t p) {
#if defined(QUADSCROLL_HAVE_AVX2)
  if (use_simd(p)) return avx2::horner_mod(coeffs, xs, out, p);
#endif
  scalar::horner_mod(coeffs, xs, out, p);
}

}  // namespace quadscroll::kernels
