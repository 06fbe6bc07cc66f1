/**
 * @file analysis.hpp
 * @brief Local stability of the interior equilibrium under both maps.
 *
 * Closed-form Jacobians at E* = (N*, P*), eigenvalue-based classification with
 * the Jury triple reported alongside, the Euler step-size bound, and a
 * simulation-based stability label used for dynamic-consistency checks.
 *
 * Notation: the NSFD Jacobian uses the local denominators
 *   G_n = {1 + h + h(N* + a P*)}(N* + a P*),   H_n = (1 + b d h) N*,
 * which are unrelated to the Euler bound quantities g_euler / h_euler below.
 */
#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "dyncons/errors.hpp"
#include "dyncons/jacobian.hpp"
#include "dyncons/models.hpp"
#include "dyncons/oracle.hpp"
#include "dyncons/schemes.hpp"

namespace dyncons {

/// Half-width of the band around unit modulus classified as non-hyperbolic.
inline constexpr double kNonHyperbolicBand = 1e-9;

struct JuryReport {
  double det = 0.0;
  double trace = 0.0;
  bool cond_det = false;   ///< 1 - det > 0
  bool cond_flip = false;  ///< 1 - tr + det > 0
  bool cond_fold = false;  ///< 1 + tr + det > 0

  [[nodiscard]] bool all() const noexcept { return cond_det && cond_flip && cond_fold; }
};

enum class Classification { Stable, Source, Saddle, NonHyperbolic };

[[nodiscard]] inline const char* to_string(Classification c) noexcept {
  switch (c) {
    case Classification::Stable: return "Stable";
    case Classification::Source: return "Source";
    case Classification::Saddle: return "Saddle";
    case Classification::NonHyperbolic: return "NonHyperbolic";
  }
  return "?";
}

struct StabilityReport {
  Jacobian2 jacobian;
  std::array<std::complex<double>, 2> eigenvalues;
  std::array<double, 2> moduli{};
  JuryReport jury;
  Classification classification = Classification::NonHyperbolic;
};

[[nodiscard]] inline JuryReport jury_conditions(const Jacobian2& j) noexcept {
  JuryReport r;
  r.det = j.det();
  r.trace = j.trace();
  r.cond_det = 1.0 - r.det > 0.0;
  r.cond_flip = 1.0 - r.trace + r.det > 0.0;
  r.cond_fold = 1.0 + r.trace + r.det > 0.0;
  return r;
}

/// Classifies a fixed point from eigenvalue moduli; the Jury triple is informational.
[[nodiscard]] inline StabilityReport classify(const Jacobian2& j) {
  if (!j.finite()) {
    throw ValidationError("classify requires a finite Jacobian");
  }
  StabilityReport report;
  report.jacobian = j;
  report.jury = jury_conditions(j);
  const auto [l1, l2] = oracle::quadratic_eigen(report.jury.trace, report.jury.det);
  report.eigenvalues = {l1, l2};
  report.moduli = {std::abs(l1), std::abs(l2)};

  const auto near_unit = [](double m) { return std::abs(m - 1.0) < kNonHyperbolicBand; };
  const auto [m1, m2] = report.moduli;
  if (near_unit(m1) || near_unit(m2)) {
    report.classification = Classification::NonHyperbolic;
  } else if (m1 < 1.0 && m2 < 1.0) {
    report.classification = Classification::Stable;
  } else if (m1 > 1.0 && m2 > 1.0) {
    report.classification = Classification::Source;
  } else {
    report.classification = Classification::Saddle;
  }
  return report;
}

struct ContinuousStability {
  bool exists = false;
  bool stable = false;
};

/// Existence (1 + a d > d) and local stability (d(2 + a d) < (1 + a d)^2 (1 + b d)) of E* for the ODE.
[[nodiscard]] inline ContinuousStability continuous_stability(const ModelParams& params) noexcept {
  return {params.interior_exists(), params.interior_stable()};
}

struct NsfdDenominators {
  double g_n = 0.0;
  double h_n = 0.0;
};

[[nodiscard]] inline NsfdDenominators nsfd_denominators_at_interior(const ModelParams& params, double h) {
  detail::require_step(h);
  const State e = require_interior(params);
  const double mixed = e.n + params.alpha() * e.p;
  return {(1.0 + h + h * mixed) * mixed, (1.0 + params.beta() * params.delta() * h) * e.n};
}

[[nodiscard]] inline Jacobian2 nsfd_jacobian_at_interior(const ModelParams& params, double h) {
  const auto [g_n, h_n] = nsfd_denominators_at_interior(params, h);
  const double n = require_interior(params).n;
  const double a = params.alpha();
  const double b = params.beta();
  const double d = params.delta();
  return {1.0 + n * h * (1.0 - 2.0 * n - a * d * n) / g_n, n * h * (a - a * n - 1.0) / g_n,
          b * d * d * h * n / h_n, 1.0 - b * d * h * n / h_n};
}

[[nodiscard]] inline Jacobian2 euler_jacobian_at_interior(const ModelParams& params, double h) {
  detail::require_step(h);
  const State e = require_interior(params);
  const double mixed = e.n + params.alpha() * e.p;
  const double ratio = e.p / e.n;
  const double share = e.n / mixed;
  return {1.0 - h * e.n * (1.0 - e.p / (mixed * mixed)), -h * share * share, h * params.beta() * ratio * ratio,
          1.0 - h * params.beta() * ratio};
}

[[nodiscard]] inline Jacobian2 jacobian_at_interior(const PlanarMap& map) {
  return map.scheme() == Scheme::Nsfd ? nsfd_jacobian_at_interior(map.params(), map.h())
                                      : euler_jacobian_at_interior(map.params(), map.h());
}

/**
 * Sufficient step-size bound for local stability of E* under forward Euler:
 *
 *   g_euler = (1 + a d)^2 (1 + b d) - d (2 + a d)
 *   h_euler = b d (1 + a d - d)(1 + a d)
 *   h_max   = min(g_euler / h_euler, 2 (1 + a d)^2 / g_euler)
 *
 * The eigenvalues actually leave the unit disk at g_euler / h_euler, where a
 * complex pair crosses |lambda| = 1 (det J = 1). The second bound can be
 * smaller, in which case h_max is conservative: the true 1 + tr + det stays
 * positive beyond it. See euler_critical_step for the exact crossing.
 */
struct EulerThreshold {
  double g_euler = 0.0;
  double h_euler = 0.0;
  double det_bound = 0.0;   ///< g_euler / h_euler
  double fold_bound = 0.0;  ///< 2 (1 + a d)^2 / g_euler
  double h_max = 0.0;
};

[[nodiscard]] inline EulerThreshold euler_threshold(const ModelParams& params) {
  if (!params.interior_stable()) {
    throw ConditionError(
        "Euler step-size bound needs 1 + alpha*delta > delta and "
        "delta*(2 + alpha*delta) < (1 + alpha*delta)^2 * (1 + beta*delta)");
  }
  const double a = params.alpha();
  const double b = params.beta();
  const double d = params.delta();
  const double q = params.one_plus_alpha_delta();
  EulerThreshold t;
  t.g_euler = q * q * (1.0 + b * d) - d * (2.0 + a * d);
  t.h_euler = b * d * (q - d) * q;
  t.det_bound = t.g_euler / t.h_euler;
  t.fold_bound = 2.0 * q * q / t.g_euler;
  t.h_max = std::min(t.det_bound, t.fold_bound);
  return t;
}

/// Largest stable step of the Euler logistic map at x = K: |1 - h r| < 1  <=>  h < 2 / r.
[[nodiscard]] inline double logistic_euler_threshold(const ScalarModelParams& sp) noexcept { return 2.0 / sp.r(); }

struct StepBracket {
  double stable = 0.0;    ///< largest step known to give max modulus < 1
  double unstable = 0.0;  ///< smallest step known to give max modulus >= 1
};

/**
 * Bisection on max |lambda(h)| = 1 for the Euler Jacobian at E* over
 * [1e-6, 1e3] with 80 halvings. Assumes a single crossing in that interval.
 */
[[nodiscard]] inline StepBracket euler_critical_step(const ModelParams& params) {
  auto max_modulus = [&](double h) {
    const auto r = classify(euler_jacobian_at_interior(params, h));
    return std::max(r.moduli[0], r.moduli[1]);
  };
  StepBracket br{1e-6, 1e3};
  if (max_modulus(br.stable) >= 1.0 || max_modulus(br.unstable) < 1.0) {
    throw ConditionError("Euler critical step is not bracketed by [1e-6, 1e3]");
  }
  for (int i = 0; i < 80; ++i) {
    const double mid = 0.5 * (br.stable + br.unstable);
    (max_modulus(mid) < 1.0 ? br.stable : br.unstable) = mid;
  }
  return br;
}

// ---------------------------------------------------------------------------
// Simulation-based stability label

enum class Outcome { ConvergedToInterior, Oscillatory, Diverged, ConvergedElsewhere };

[[nodiscard]] inline const char* to_string(Outcome o) noexcept {
  switch (o) {
    case Outcome::ConvergedToInterior: return "ConvergedToInterior";
    case Outcome::Oscillatory: return "Oscillatory";
    case Outcome::Diverged: return "Diverged";
    case Outcome::ConvergedElsewhere: return "ConvergedElsewhere";
  }
  return "?";
}

struct OracleResult {
  Outcome outcome = Outcome::ConvergedElsewhere;
  std::optional<std::size_t> diverged_at;  ///< iteration index of failure, Diverged only
  double max_distance = 0.0;               ///< max distance of the window to the interior fixed point
  double amplitude = 0.0;                  ///< max peak-to-peak over components in the window

  /// "Diverged@k" for diverged runs, the outcome name otherwise.
  [[nodiscard]] std::string label() const {
    std::string s = to_string(outcome);
    if (diverged_at) {
      s += "@" + std::to_string(*diverged_at);
    }
    return s;
  }
};

template <class Point>
struct OrbitWindow {
  std::vector<Point> window;                 ///< iterates transient+1 .. transient+size
  std::optional<std::size_t> failed_at;      ///< first index that was non-finite or out of domain
};

namespace detail {

inline double point_distance(double a, double b) noexcept { return std::abs(a - b); }
inline double point_distance(const State& a, const State& b) noexcept { return distance(a, b); }

inline double peak_to_peak(const std::vector<double>& w) {
  if (w.empty()) return 0.0;
  const auto [lo, hi] = std::minmax_element(w.begin(), w.end());
  return *hi - *lo;
}

inline double peak_to_peak(const std::vector<State>& w) {
  if (w.empty()) return 0.0;
  double n_lo = w.front().n, n_hi = n_lo, p_lo = w.front().p, p_hi = p_lo;
  for (const auto& s : w) {
    n_lo = std::min(n_lo, s.n);
    n_hi = std::max(n_hi, s.n);
    p_lo = std::min(p_lo, s.p);
    p_hi = std::max(p_hi, s.p);
  }
  return std::max(n_hi - n_lo, p_hi - p_lo);
}

}  // namespace detail

/// Runs `transient` iterations from `s0`, then records the next `size` iterates.
template <class Point>
[[nodiscard]] OrbitWindow<Point> run_orbit(const DiscreteMap<Point>& map, Point s0, std::size_t transient,
                                           std::size_t size) {
  OrbitWindow<Point> out;
  out.window.reserve(size);
  Point s = s0;
  const std::size_t total = transient + size;
  for (std::size_t k = 1; k <= total; ++k) {
    try {
      s = map(s);
    } catch (const DomainError&) {
      out.failed_at = k;
      out.window.clear();
      return out;
    }
    if (!is_finite(s)) {
      out.failed_at = k;
      out.window.clear();
      return out;
    }
    if (k > transient) {
      out.window.push_back(s);
    }
  }
  return out;
}

template <class Point>
[[nodiscard]] OracleResult label_orbit(const OrbitWindow<Point>& orbit, const std::optional<Point>& target,
                                       double tol) {
  OracleResult r;
  if (orbit.failed_at) {
    r.outcome = Outcome::Diverged;
    r.diverged_at = orbit.failed_at;
    return r;
  }
  r.amplitude = detail::peak_to_peak(orbit.window);
  if (target) {
    for (const auto& s : orbit.window) {
      r.max_distance = std::max(r.max_distance, detail::point_distance(s, *target));
    }
  } else {
    r.max_distance = std::numeric_limits<double>::infinity();
  }
  if (r.max_distance < tol) {
    r.outcome = Outcome::ConvergedToInterior;
  } else if (r.amplitude > tol) {
    r.outcome = Outcome::Oscillatory;
  } else {
    r.outcome = Outcome::ConvergedElsewhere;
  }
  return r;
}

/**
 * Labels the long-run behavior of `map` from `s0`: discard `transient`
 * iterates, then inspect a window of `window` iterates. Non-finite or
 * out-of-domain iterates give Diverged; a window within `tol` of the interior
 * fixed point gives ConvergedToInterior; a peak-to-peak amplitude above `tol`
 * gives Oscillatory; anything else is ConvergedElsewhere.
 */
template <class Point>
[[nodiscard]] OracleResult simulation_stability_oracle(const DiscreteMap<Point>& map, Point s0, std::size_t transient,
                                                       std::size_t window, double tol) {
  if (transient < 1 || window < 1) {
    throw ValidationError("transient and window must both be at least 1");
  }
  return label_orbit(run_orbit(map, s0, transient, window), map.interior_fixed_point(), tol);
}

}  // namespace dyncons
