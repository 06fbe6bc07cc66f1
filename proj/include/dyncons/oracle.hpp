/**
 * @file oracle.hpp
 * @brief Independent verification tools: finite-difference Jacobians,
 * characteristic roots, and residuals of the implicit NSFD relations.
 *
 * Nothing here reuses the closed-form Jacobians from analysis.hpp, so the two
 * can be checked against each other.
 */
#pragma once

#include <cmath>
#include <complex>
#include <string>
#include <utility>

#include "dyncons/errors.hpp"
#include "dyncons/jacobian.hpp"
#include "dyncons/models.hpp"

namespace dyncons::oracle {

inline constexpr double kDefaultFdStep = 1e-6;

/**
 * Central-difference Jacobian of a one-step map State -> State:
 * column i is (f(s + eps e_i) - f(s - eps e_i)) / (2 eps).
 */
template <class StepFn>
[[nodiscard]] Jacobian2 fd_jacobian(StepFn&& step, const State& s, double eps = kDefaultFdStep) {
  if (!(eps >= 1e-8 && eps <= 1e-4)) {
    throw ValidationError("finite-difference step must lie in [1e-8, 1e-4], got " + std::to_string(eps));
  }
  const State fn_plus = step(State{s.n + eps, s.p});
  const State fn_minus = step(State{s.n - eps, s.p});
  const State fp_plus = step(State{s.n, s.p + eps});
  const State fp_minus = step(State{s.n, s.p - eps});
  const double inv = 1.0 / (2.0 * eps);
  return {(fn_plus.n - fn_minus.n) * inv, (fp_plus.n - fp_minus.n) * inv,
          (fn_plus.p - fn_minus.p) * inv, (fp_plus.p - fp_minus.p) * inv};
}

/**
 * Residuals of the implicit NSFD relations
 *
 *   (N1 - N0)/h = N0 - N0 N1 - N1 P0/(N0 + a P0) + (N0 - N1)(N0 + a P0)
 *   (P1 - P0)/h = b d P0 - b P1 P0 / N0
 *
 * with (N0, P0) = s and (N1, P1) = s_next.
 */
[[nodiscard]] inline std::pair<double, double> implicit_residual(const ModelParams& params, double h, const State& s,
                                                                 const State& s_next) {
  const double a = params.alpha();
  const double b = params.beta();
  const double d = params.delta();
  const double mixed = s.n + a * s.p;
  const double r_prey =
      (s_next.n - s.n) / h - (s.n - s.n * s_next.n - s_next.n * s.p / mixed + (s.n - s_next.n) * mixed);
  const double r_pred = (s_next.p - s.p) / h - (b * d * s.p - b * s_next.p * s.p / s.n);
  return {r_prey, r_pred};
}

/**
 * Roots of lambda^2 - tr lambda + det = 0, larger magnitude first.
 * Real roots avoid cancellation by computing the companion root as det / lambda1.
 */
[[nodiscard]] inline std::pair<std::complex<double>, std::complex<double>> quadratic_eigen(double tr,
                                                                                           double det) noexcept {
  const double half = 0.5 * tr;
  const double disc = half * half - det;
  if (disc < 0.0) {
    const double im = std::sqrt(-disc);
    return {{half, im}, {half, -im}};
  }
  const double root = std::sqrt(disc);
  const double lambda1 = half >= 0.0 ? half + root : half - root;
  const double lambda2 = lambda1 != 0.0 ? det / lambda1 : tr - lambda1;
  return {{lambda1, 0.0}, {lambda2, 0.0}};
}

}  // namespace dyncons::oracle
