// AArch64 Advanced SIMD variant; Advanced SIMD is mandatory on AArch64 so no
// runtime probe is needed.

#include <arm_neon.h>

#include <algorithm>
#include <cmath>

#include "cascade/kernels.hpp"

namespace cascade::kernels {
namespace {

constexpr std::size_t kLanes = 2;

void combine_attenuated(std::span<const double> prev,
                        std::span<const double> alpha,
                        std::span<const double> incoming,
                        std::span<double> next) {
  const std::size_t n = next.size();
  const std::size_t body = n - n % kLanes;
  const float64x2_t one = vdupq_n_f64(1.0);
  for (std::size_t i = 0; i < body; i += kLanes) {
    float64x2_t p = vld1q_f64(prev.data() + i);
    float64x2_t x = vmulq_f64(vld1q_f64(alpha.data() + i),
                              vld1q_f64(incoming.data() + i));
    vst1q_f64(next.data() + i, vminq_f64(one, vmaxq_f64(p, x)));
  }
  for (std::size_t i = body; i < n; ++i)
    next[i] = std::min(1.0, std::max(prev[i], alpha[i] * incoming[i]));
}

void combine_unattenuated(std::span<const double> prev,
                          std::span<const double> incoming,
                          std::span<double> next) {
  const std::size_t n = next.size();
  const std::size_t body = n - n % kLanes;
  const float64x2_t one = vdupq_n_f64(1.0);
  for (std::size_t i = 0; i < body; i += kLanes) {
    float64x2_t p = vld1q_f64(prev.data() + i);
    float64x2_t in = vld1q_f64(incoming.data() + i);
    vst1q_f64(next.data() + i, vminq_f64(one, vmaxq_f64(p, in)));
  }
  for (std::size_t i = body; i < n; ++i)
    next[i] = std::min(1.0, std::max(prev[i], incoming[i]));
}

double max_abs_diff(std::span<const double> a, std::span<const double> b) {
  const std::size_t n = a.size();
  const std::size_t body = n - n % kLanes;
  float64x2_t best = vdupq_n_f64(0.0);
  for (std::size_t i = 0; i < body; i += kLanes)
    best = vmaxq_f64(best, vabdq_f64(vld1q_f64(a.data() + i),
                                     vld1q_f64(b.data() + i)));
  double result = vmaxvq_f64(best);
  for (std::size_t i = body; i < n; ++i)
    result = std::max(result, std::fabs(a[i] - b[i]));
  return result;
}

constexpr KernelTable kTable{Isa::kNeon, &combine_attenuated,
                             &combine_unattenuated, &max_abs_diff};

}  // namespace

namespace detail {
const KernelTable* neon_table() noexcept { return &kTable; }
}  // namespace detail

}  // namespace cascade::kernels
