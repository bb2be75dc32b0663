#include <algorithm>
#include <cmath>

#include "cascade/kernels.hpp"

namespace cascade::kernels {
namespace {

void combine_attenuated(std::span<const double> prev,
                        std::span<const double> alpha,
                        std::span<const double> incoming,
                        std::span<double> next) {
  for (std::size_t i = 0; i < next.size(); ++i)
    next[i] = std::min(1.0, std::max(prev[i], alpha[i] * incoming[i]));
}

void combine_unattenuated(std::span<const double> prev,
                          std::span<const double> incoming,
                          std::span<double> next) {
  for (std::size_t i = 0; i < next.size(); ++i)
    next[i] = std::min(1.0, std::max(prev[i], incoming[i]));
}

double max_abs_diff(std::span<const double> a, std::span<const double> b) {
  double best = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i)
    best = std::max(best, std::fabs(a[i] - b[i]));
  return best;
}

constexpr KernelTable kTable{Isa::kScalar, &combine_attenuated,
                             &combine_unattenuated, &max_abs_diff};

}  // namespace

const KernelTable& scalar_kernels() noexcept { return kTable; }

}  // namespace cascade::kernels
