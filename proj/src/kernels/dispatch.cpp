#include <stdexcept>
#include <string>

#include "cascade/kernels.hpp"

namespace cascade::kernels {

// CASCADE_HAVE_AVX2 / CASCADE_HAVE_NEON are set by the build when the
// matching translation unit is compiled in.
#ifndef CASCADE_HAVE_AVX2
namespace detail {
const KernelTable* avx2_table() noexcept { return nullptr; }
}  // namespace detail
#endif
#ifndef CASCADE_HAVE_NEON
namespace detail {
const KernelTable* neon_table() noexcept { return nullptr; }
}  // namespace detail
#endif

std::string_view to_string(Isa isa) noexcept {
  switch (isa) {
    case Isa::kScalar: return "scalar";
    case Isa::kAvx2: return "avx2";
    case Isa::kNeon: return "neon";
  }
  return "scalar";
}

bool is_supported(Isa isa) noexcept {
  switch (isa) {
    case Isa::kScalar:
      return true;
    case Isa::kAvx2:
#if defined(CASCADE_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
      return __builtin_cpu_supports("avx2");
#else
      return false;
#endif
    case Isa::kNeon:
      return detail::neon_table() != nullptr;
  }
  return false;
}

const KernelTable& kernels_for(Isa isa) {
  if (!is_supported(isa))
    throw std::invalid_argument("kernel variant '" +
                                std::string(to_string(isa)) +
                                "' is not available on this machine");
  switch (isa) {
    case Isa::kAvx2: return *detail::avx2_table();
    case Isa::kNeon: return *detail::neon_table();
    case Isa::kScalar: break;
  }
  return scalar_kernels();
}

const KernelTable& active_kernels() noexcept {
  static const KernelTable& table = [] () -> const KernelTable& {
    if (is_supported(Isa::kAvx2)) return *detail::avx2_table();
    if (is_supported(Isa::kNeon)) return *detail::neon_table();
    return scalar_kernels();
  }();
  return table;
}

}  // namespace cascade::kernels
