#pragma once

// Modular inner loops used by elimination and by the singularity scan.
//
// Every kernel has a scalar reference implementation and, on x86-64, an AVX2
// variant. The dispatching entry points pick the variant once at startup from
// CPUID; setting QUADSCROLL_SIMD=scalar in the environment forces the
// reference path. All variants produce bit-identical results.
//
// Inputs must already be reduced into [0, p).

#include <cstdint>
#include <span>
#include <string_view>

namespace quadscroll::kernels {

enum class Backend { scalar, avx2 };

std::string_view backend_name(Backend backend);
bool backend_available(Backend backend);
Backend active_backend();

// The AVX2 variants compute in double precision and need p * p + p < 2^52.
inline constexpr std::uint32_t kMaxSimdPrime = 1u << 26;

/// dst[i] = dst[i] + factor * src[i]  (mod p)
void axpy_mod(std::span<std::uint32_t> dst, std::span<const std::uint32_t> src,
              std::uint32_t factor, std::uint32_t p);

/// v[i] = factor * v[i]  (mod p)
void scale_mod(std::span<std::uint32_t> v, std::uint32_t factor, std::uint32_t p);

/// out[i] = sum_j coeffs[j] * xs[i]^(n-1-j)  (mod p); coefficients highest degree first.
void horner_mod(std::span<const std::uint32_t> coeffs, std::span<const std::uint32_t> xs,
                std::span<std::uint32_t> out, std::uint32_t p);

namespace scalar {
void axpy_mod(std::span<std::uint32_t> dst, std::span<const std::uint32_t> src,
              std::uint32_t factor, std::uint32_t p);
void scale_mod(std::span<std::uint32_t> v, std::uint32_t factor, std::uint32_t p);
void horner_mod(std::span<const std::uint32_t> coeffs, std::span<const std::uint32_t> xs,
                std::span<std::uint32_t> out, std::uint32_t p);
}  // namespace scalar

#if defined(QUADSCROLL_HAVE_AVX2)
namespace avx2 {
void axpy_mod(std::span<std::uint32_t> dst, std::span<const std::uint32_t> src,
              std::uint32_t factor, std::uint32_t p);
void scale_mod(std::span<std::uint32_t> v, std::uint32_t factor, std::uint32_t p);
void horner_mod(std::span<const std::uint32_t> coeffs, std::span<const std::uint32_t> xs,
                std::span<std::uint32_t> out, std::uint32_t p);
}  // namespace avx2
#endif

}  // namespace quadscroll::kernels
