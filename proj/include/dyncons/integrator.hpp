/**
 * @file integrator.hpp
 * @brief Adaptive Dormand-Prince 5(4) reference integrator.
 *
 * Used as the continuous-time reference for dynamic-consistency comparisons.
 * Steps are clipped so that the solution lands exactly on a uniform output
 * grid; no interpolation is involved in the returned samples.
 */
#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "dyncons/errors.hpp"
#include "dyncons/models.hpp"
#include "dyncons/schemes.hpp"

namespace dyncons {

struct IntegratorOptions {
  double rel_tol = 1e-8;
  double abs_tol = 1e-10;
  std::size_t samples = 1000;  ///< output intervals over [0, t_end]; raised to at least 200
  double min_step = 1e-12;
  std::size_t max_steps = 50'000'000;
};

inline constexpr std::size_t kMinContinuousSamples = 200;

namespace detail {

template <std::size_t Dim>
using Vec = std::array<double, Dim>;

template <std::size_t Dim>
Vec<Dim> axpy(const Vec<Dim>& y, double h, std::initializer_list<std::pair<double, const Vec<Dim>*>> terms) {
  Vec<Dim> out = y;
  for (const auto& [coef, k] : terms) {
    for (std::size_t i = 0; i < Dim; ++i) {
      out[i] += h * coef * (*k)[i];
    }
  }
  return out;
}

// Dormand-Prince 5(4) tableau.
namespace dp {
inline constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
inline constexpr double a21 = 1.0 / 5;
inline constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
inline constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
inline constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561, a54 = -212.0 / 729;
inline constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247, a64 = 49.0 / 176,
                        a65 = -5103.0 / 18656;
inline constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192, b5 = -2187.0 / 6784, b6 = 11.0 / 84;
// b - b_hat (fifth minus fourth order weights)
inline constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920, e5 = -17253.0 / 339200,
                        e6 = 22.0 / 525, e7 = -1.0 / 40;
}  // namespace dp

}  // namespace detail

/**
 * Integrates y' = rhs(t, y) from t = 0 to `t_end`, returning the solution at
 * `samples + 1` equally spaced times (both endpoints included).
 *
 * Step control is the PI controller of Hairer, Norsett & Wanner (DOPRI5):
 * exponents 0.17 / 0.04, safety 0.9, step ratio clamped to [0.2, 10].
 */
template <std::size_t Dim, class Rhs>
[[nodiscard]] std::vector<std::array<double, Dim>> dormand_prince(Rhs&& rhs, const std::array<double, Dim>& y0,
                                                                  double t_end, IntegratorOptions options = {}) {
  using detail::axpy;
  using Vec = std::array<double, Dim>;
  namespace dp = detail::dp;

  if (!(t_end > 0.0) || !std::isfinite(t_end)) {
    throw ValidationError("t_end must be positive and finite");
  }
  for (double tol : {options.rel_tol, options.abs_tol}) {
    if (!(tol > 0.0 && tol <= 1e-2)) {
      throw ValidationError("integrator tolerances must lie in (0, 1e-2], got " + std::to_string(tol));
    }
  }
  const std::size_t samples = std::max(options.samples, kMinContinuousSamples);
  const double spacing = t_end / static_cast<double>(samples);

  auto scale = [&](const Vec& a, const Vec& b, std::size_t i) {
    return options.abs_tol + options.rel_tol * std::max(std::abs(a[i]), std::abs(b[i]));
  };

  std::vector<Vec> out;
  out.reserve(samples + 1);
  out.push_back(y0);

  double t = 0.0;
  Vec y = y0;
  Vec k1 = rhs(t, y);

  // Initial step guess from the size of y and y'.
  double h_prop = spacing;
  {
    double d0 = 0.0, d1 = 0.0;
    for (std::size_t i = 0; i < Dim; ++i) {
      const double sc = options.abs_tol + options.rel_tol * std::abs(y[i]);
      d0 += (y[i] / sc) * (y[i] / sc);
      d1 += (k1[i] / sc) * (k1[i] / sc);
    }
    d0 = std::sqrt(d0 / Dim);
    d1 = std::sqrt(d1 / Dim);
    if (d0 > 1e-5 && d1 > 1e-5) {
      h_prop = std::min(spacing, 0.01 * d0 / d1);
    }
  }

  double err_old = 1e-4;
  std::size_t next_sample = 1;
  std::size_t step_count = 0;

  while (next_sample <= samples) {
    const double target = (next_sample == samples) ? t_end : spacing * static_cast<double>(next_sample);
    // Stretch by up to 1% rather than leave a sliver step before the grid point.
    const bool clipped = 1.01 * h_prop >= target - t;
    const double h = clipped ? target - t : h_prop;
    if (h < options.min_step) {
      throw StepFailure("adaptive step underflow at t=" + std::to_string(t) + " (h=" + std::to_string(h) + ")");
    }
    if (++step_count > options.max_steps) {
      throw StepFailure("maximum number of integration steps exceeded");
    }

    Vec k2, k3, k4, k5, k6, k7, y_new;
    try {
      k2 = rhs(t + dp::c2 * h, axpy(y, h, {{dp::a21, &k1}}));
      k3 = rhs(t + dp::c3 * h, axpy(y, h, {{dp::a31, &k1}, {dp::a32, &k2}}));
      k4 = rhs(t + dp::c4 * h, axpy(y, h, {{dp::a41, &k1}, {dp::a42, &k2}, {dp::a43, &k3}}));
      k5 = rhs(t + dp::c5 * h, axpy(y, h, {{dp::a51, &k1}, {dp::a52, &k2}, {dp::a53, &k3}, {dp::a54, &k4}}));
      k6 = rhs(t + h, axpy(y, h, {{dp::a61, &k1}, {dp::a62, &k2}, {dp::a63, &k3}, {dp::a64, &k4}, {dp::a65, &k5}}));
      y_new = axpy(y, h, {{dp::b1, &k1}, {dp::b3, &k3}, {dp::b4, &k4}, {dp::b5, &k5}, {dp::b6, &k6}});
      k7 = rhs(t + h, y_new);
    } catch (const DomainError&) {
      // A trial stage left the domain of the right-hand side; retry with a smaller step.
      h_prop = 0.2 * h;
      continue;
    }

    double err = 0.0;
    for (std::size_t i = 0; i < Dim; ++i) {
      const double ei =
          h * (dp::e1 * k1[i] + dp::e3 * k3[i] + dp::e4 * k4[i] + dp::e5 * k5[i] + dp::e6 * k6[i] + dp::e7 * k7[i]);
      const double r = ei / scale(y, y_new, i);
      err += r * r;
    }
    err = std::sqrt(err / Dim);
    if (!std::isfinite(err)) {
      h_prop = 0.2 * h;
      continue;
    }

    constexpr double kSafety = 0.9;
    constexpr double kExpo = 0.17;
    constexpr double kBeta = 0.04;
    const double fac11 = std::pow(err, kExpo);
    if (err <= 1.0) {
      const double fac = std::clamp(fac11 / std::pow(err_old, kBeta) / kSafety, 0.1, 5.0);
      const double h_next = h / fac;
      err_old = std::max(err, 1e-4);
      t = clipped ? target : t + h;
      y = y_new;
      k1 = k7;
      h_prop = clipped ? std::max(h_prop, h_next) : h_next;
      if (clipped) {
        out.push_back(y);
        ++next_sample;
      }
    } else {
      h_prop = h / std::min(5.0, fac11 / kSafety);
    }
  }
  return out;
}

/// Reference solution of the predator-prey ODE on a uniform grid over [0, t_end].
[[nodiscard]] inline Trajectory<State> integrate_continuous(const ModelParams& params, const State& s0, double t_end,
                                                            IntegratorOptions options = {}) {
  if (!(s0.n > 0.0)) {
    throw DomainError("integrate_continuous requires N(0) > 0");
  }
  auto rhs = [&](double, const std::array<double, 2>& y) {
    const State d = rhs_predprey(params, State{y[0], y[1]});
    return std::array<double, 2>{d.n, d.p};
  };
  const auto raw = dormand_prince<2>(rhs, {s0.n, s0.p}, t_end, options);

  Trajectory<State> traj;
  traj.t0 = 0.0;
  traj.h = t_end / static_cast<double>(raw.size() - 1);
  traj.states.reserve(raw.size());
  for (const auto& y : raw) {
    traj.states.push_back(State{y[0], y[1]});
  }
  traj.length = traj.states.size();
  traj.last = traj.states.back();
  return traj;
}

/// Reference solution of the logistic ODE (the scalar analog).
[[nodiscard]] inline Trajectory<double> integrate_logistic(const ScalarModelParams& sp, double x0, double t_end,
                                                           IntegratorOptions options = {}) {
  auto rhs = [&](double, const std::array<double, 1>& y) { return std::array<double, 1>{rhs_logistic(sp, y[0])}; };
  const auto raw = dormand_prince<1>(rhs, {x0}, t_end, options);

  Trajectory<double> traj;
  traj.t0 = 0.0;
  traj.h = t_end / static_cast<double>(raw.size() - 1);
  traj.states.reserve(raw.size());
  for (const auto& y : raw) {
    traj.states.push_back(y[0]);
  }
  traj.length = traj.states.size();
  traj.last = traj.states.back();
  return traj;
}

}  // namespace dyncons
