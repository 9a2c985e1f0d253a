#include "quadscroll/kernels.hpp"

#include <cassert>

namespace quadscroll::kernels::scalar {

void axpy_mod(std::span<std::uint32_t> dst, std::span<const std::uint32_t> src,
              std::uint32_t factor, std::uint32_t p) {
  assert(dst.size() == src.size());
  const std::uint64_t f = factor;
  for (std::size_t i = 0; i < dst.size(); ++i) {
    dst[i] = static_cast<std::uint32_t>((dst[i] + f * src[i]) % p);
  }
}

void scale_mod(std::span<std::uint32_t> v, std::uint32_t factor, std::uint32_t p) {
  const std::uint64_t f = factor;
  for (auto& x : v) x = static_cast<std::uint32_t>((f * x) % p);
}

void horner_mod(std::span<const std::uint32_t> coeffs, std::span<const std::uint32_t> xs,
                std::span<std::uint32_t> out, std::uint32_t p) {
  assert(xs.size() == out.size());
  for (std::size_t i = 0; i < xs.size(); ++i) {
    std::uint64_t acc = 0;
    const std::uint64_t x = xs[i];
    for (std::uint32_t c : coeffs) acc = (acc * x + c) % p;
    out[i] = static_cast<std::uint32_t>(acc);
  }
}

}  // namespace quadscroll::kernels::scalar
