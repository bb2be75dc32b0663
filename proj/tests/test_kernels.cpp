#include <cstring>
#include <random>
#include <vector>

#include "doctest.h"

#include "cascade/kernels.hpp"
#include "cascade/propagation.hpp"
#include "oracles.hpp"

using namespace cascade;
using kernels::Isa;

namespace {

std::vector<Isa> simd_variants() {
  std::vector<Isa> out;
  for (Isa isa : {Isa::kAvx2, Isa::kNeon})
    if (kernels::is_supported(isa)) out.push_back(isa);
  return out;
}

bool bitwise_equal(const std::vector<double>& a, const std::vector<double>& b) {
  return a.size() == b.size() &&
         std::memcmp(a.data(), b.data(), a.size() * sizeof(double)) == 0;
}

std::vector<double> random_values(std::mt19937_64& rng, std::size_t n,
                                  double hi) {
  std::uniform_real_distribution<double> dist(0.0, hi);
  std::vector<double> out(n);
  for (auto& x : out) x = dist(rng);
  // Exercise the equal-value and saturated paths too.
  if (n > 2) {
    out[0] = 0.0;
    out[n - 1] = 1.0;
  }
  return out;
}

}  // namespace

TEST_CASE("scalar kernels follow their definitions") {
  const auto& k = kernels::scalar_kernels();
  std::vector<double> prev{0.2, 0.9, 0.0, 0.5};
  std::vector<double> alpha{0.5, 1.0, 0.0, 1.0};
  std::vector<double> in{1.0, 3.0, 7.0, 0.25};
  std::vector<double> next(4);
  k.combine_attenuated(prev, alpha, in, next);
  CHECK(next == std::vector<double>{0.5, 1.0, 0.0, 0.5});
  k.combine_unattenuated(prev, in, next);
  CHECK(next == std::vector<double>{1.0, 1.0, 1.0, 0.5});
  CHECK(k.max_abs_diff(prev, std::vector<double>{0.2, 0.4, 0.1, 0.5}) ==
        doctest::Approx(0.5));
  CHECK(k.max_abs_diff(std::vector<double>{}, std::vector<double>{}) == 0.0);
}

TEST_CASE("active kernel is a supported variant") {
  const auto& k = kernels::active_kernels();
  CHECK(kernels::is_supported(k.isa));
  CHECK(kernels::is_supported(Isa::kScalar));
  for (Isa isa : {Isa::kAvx2, Isa::kNeon}) {
    if (!kernels::is_supported(isa))
      CHECK_THROWS_AS(kernels::kernels_for(isa), std::invalid_argument);
  }
}

TEST_CASE("SIMD kernels are bit-identical to the scalar reference") {
  const auto& ref = kernels::scalar_kernels();
  std::mt19937_64 rng(3);
  for (Isa isa : simd_variants()) {
    const auto& simd = kernels::kernels_for(isa);
    CAPTURE(kernels::to_string(isa));
    for (std::size_t n = 0; n <= 67; ++n) {
      for (int rep = 0; rep < 20; ++rep) {
        auto prev = random_values(rng, n, 1.0);
        auto alpha = random_values(rng, n, 1.0);
        auto in = random_values(rng, n, 4.0);
        std::vector<double> a(n), b(n);
        ref.combine_attenuated(prev, alpha, in, a);
        simd.combine_attenuated(prev, alpha, in, b);
        CHECK(bitwise_equal(a, b));
        ref.combine_unattenuated(prev, in, a);
        simd.combine_unattenuated(prev, in, b);
        CHECK(bitwise_equal(a, b));
        CHECK(ref.max_abs_diff(prev, in) == simd.max_abs_diff(prev, in));
      }
    }
  }
}

TEST_CASE("SIMD and scalar propagation traces are bit-identical") {
  std::mt19937_64 rng(4);
  for (Isa isa : simd_variants()) {
    const auto& simd = kernels::kernels_for(isa);
    for (int round = 0; round < 100; ++round) {
      auto plain = oracle::random_graph(rng, 1 + rng() % 40, 0.15, false);
      SosGraph g = oracle::to_sos(plain);
      std::uniform_real_distribution<double> unit(0.0, 1.0);
      std::vector<double> alpha(g.size());
      for (auto& a : alpha) a = unit(rng);
      auto alphas = AlphaAssignment::from_dense(g, alpha);
      Scenario s{plain.nodes[rng() % plain.nodes.size()], 0.8};
      auto x = run_scenario(s, g, alphas, kernels::scalar_kernels());
      auto y = run_scenario(s, g, alphas, simd);
      REQUIRE(x.states.size() == y.states.size());
      CHECK(x.converged == y.converged);
      for (std::size_t t = 0; t < x.states.size(); ++t)
        CHECK(bitwise_equal(x.states[t].impact, y.states[t].impact));
    }
  }
}
