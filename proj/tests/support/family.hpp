#pragma once

#include <cstdint>
#include <random>

#include "robustfl/instance.hpp"

namespace testing_support {

/// Shape of the desk-scale test family: n in [1, max_n], m in [2, max_m],
/// k in [1, min(max_k, m)], all drawn from the seed.
inline robustfl::Instance family_instance(std::uint64_t seed, robustfl::Variant variant,
                                          std::size_t max_n = 4, std::size_t max_m = 6,
                                          std::size_t max_k = 3) {
  std::mt19937_64 rng(seed * 7919 + (variant == robustfl::Variant::Urfl ? 1 : 2));
  auto pick = [&](std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
  };
  robustfl::GeneratorParams p;
  p.seed = seed;
  p.variant = variant;
  p.n = pick(1, max_n);
  p.m = pick(2, max_m);
  p.k = pick(1, std::min(max_k, p.m));
  p.cost_min = 1.0;
  p.cost_max = 20.0;
  p.box_size = 10.0;
  return robustfl::generate_euclidean(p);
}

}  // namespace testing_support
