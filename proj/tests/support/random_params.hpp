#pragma once

#include <random>

#include "dyncons/models.hpp"

namespace dyncons::testing {

/// Fixed-seed generator so every run draws the same cases.
inline std::mt19937_64 make_rng(unsigned long long seed = 20240611ULL) { return std::mt19937_64(seed); }

inline double uniform(std::mt19937_64& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

/// Positive triple with no constraint beyond positivity.
inline ModelParams random_params(std::mt19937_64& rng, double lo = 0.01, double hi = 5.0) {
  return {uniform(rng, lo, hi), uniform(rng, lo, hi), uniform(rng, lo, hi)};
}

/**
 * Triple for which the interior equilibrium exists and is stable for the ODE.
 * `min_prey` keeps N* away from zero so that fixed finite-difference steps
 * remain small relative to the state.
 */
inline ModelParams random_stable_params(std::mt19937_64& rng, double min_prey = 0.05) {
  for (;;) {
    ModelParams p(uniform(rng, 0.05, 3.0), uniform(rng, 0.05, 3.0), uniform(rng, 0.05, 3.0));
    if (!p.interior_stable()) continue;
    const double q = p.one_plus_alpha_delta();
    if ((q - p.delta()) / q < min_prey) continue;
    return p;
  }
}

}  // namespace dyncons::testing
