#pragma once

#include <cstddef>
#include <span>
#include <string_view>

/// Dense per-node arithmetic used by the propagation step.
///
/// Every variant computes bit-identical results: the kernels only multiply,
/// take maxima/minima and absolute differences, none of which depend on
/// evaluation order. Neighbor gathering stays in scalar code so that the
/// summation order is fixed.
namespace cascade::kernels {

enum class Isa { kScalar, kAvx2, kNeon };

std::string_view to_string(Isa isa) noexcept;

struct KernelTable {
  Isa isa;

  /// next[i] = min(1, max(prev[i], alpha[i] * incoming[i]))
  void (*combine_attenuated)(std::span<const double> prev,
                             std::span<const double> alpha,
                             std::span<const double> incoming,
                             std::span<double> next);

  /// next[i] = min(1, max(prev[i], incoming[i]))
  void (*combine_unattenuated)(std::span<const double> prev,
                               std::span<const double> incoming,
                               std::span<double> next);

  /// max_i |a[i] - b[i]|, 0 for empty input.
  double (*max_abs_diff)(std::span<const double> a, std::span<const double> b);
};

const KernelTable& scalar_kernels() noexcept;

/// True when the variant was compiled in and the running CPU can execute it.
bool is_supported(Isa isa) noexcept;

/// Throws std::invalid_argument when `isa` is not supported here.
const KernelTable& kernels_for(Isa isa);

/// Widest supported variant, resolved once on first use.
const KernelTable& active_kernels() noexcept;

namespace detail {
// Defined only in the translation units built for the matching ISA.
const KernelTable* avx2_table() noexcept;
const KernelTable* neon_table() noexcept;
}  // namespace detail

}  // namespace cascade::kernels
