// Built with -mavx2; only reached after a runtime CPU check.

#include <immintrin.h>

#include <algorithm>
#include <cmath>

#include "cascade/kernels.hpp"

namespace cascade::kernels {
namespace {

constexpr std::size_t kLanes = 4;

void combine_attenuated(std::span<const double> prev,
                        std::span<const double> alpha,
                        std::span<const double> incoming,
                        std::span<double> next) {
  const std::size_t n = next.size();
  const std::size_t body = n - n % kLanes;
  const __m256d one = _mm256_set1_pd(1.0);
  for (std::size_t i = 0; i < body; i += kLanes) {
    __m256d p = _mm256_loadu_pd(prev.data() + i);
    __m256d a = _mm256_loadu_pd(alpha.data() + i);
    __m256d in = _mm256_loadu_pd(incoming.data() + i);
    __m256d r = _mm256_min_pd(one, _mm256_max_pd(p, _mm256_mul_pd(a, in)));
    _mm256_storeu_pd(next.data() + i, r);
  }
  for (std::size_t i = body; i < n; ++i)
    next[i] = std::min(1.0, std::max(prev[i], alpha[i] * incoming[i]));
}

void combine_unattenuated(std::span<const double> prev,
                          std::span<const double> incoming,
                          std::span<double> next) {
  const std::size_t n = next.size();
  const std::size_t body = n - n % kLanes;
  const __m256d one = _mm256_set1_pd(1.0);
  for (std::size_t i = 0; i < body; i += kLanes) {
    __m256d p = _mm256_loadu_pd(prev.data() + i);
    __m256d in = _mm256_loadu_pd(incoming.data() + i);
    _mm256_storeu_pd(next.data() + i,
                     _mm256_min_pd(one, _mm256_max_pd(p, in)));
  }
  for (std::size_t i = body; i < n; ++i)
    next[i] = std::min(1.0, std::max(prev[i], incoming[i]));
}

double max_abs_diff(std::span<const double> a, std::span<const double> b) {
  const std::size_t n = a.size();
  const std::size_t body = n - n % kLanes;
  // Clearing the sign bit gives |x|.
  const __m256d abs_mask =
      _mm256_castsi256_pd(_mm256_set1_epi64x(0x7fffffffffffffffLL));
  __m256d best = _mm256_setzero_pd();
  for (std::size_t i = 0; i < body; i += kLanes) {
    __m256d d = _mm256_sub_pd(_mm256_loadu_pd(a.data() + i),
                              _mm256_loadu_pd(b.data() + i));
    best = _mm256_max_pd(best, _mm256_and_pd(d, abs_mask));
  }
  alignas(32) double lanes[kLanes];
  _mm256_store_pd(lanes, best);
  double result = std::max(std::max(lanes[0], lanes[1]),
                           std::max(lanes[2], lanes[3]));
  for (std::size_t i = body; i < n; ++i)
    result = std::max(result, std::fabs(a[i] - b[i]));
  return result;
}

constexpr KernelTable kTable{Isa::kAvx2, &combine_attenuated,
                             &combine_unattenuated, &max_abs_diff};

}  // namespace

namespace detail {
const KernelTable* avx2_table() noexcept { return &kTable; }
}  // namespace detail

}  // namespace cascade::kernels
