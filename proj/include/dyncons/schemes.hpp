/**
 * @file schemes.hpp
 * @brief One-step discrete maps and the iteration driver.
 *
 * Two discretizations of the predator-prey system are provided:
 *
 *  - the nonstandard finite difference (NSFD) map, built from the nonlocal
 *    approximations N^2 -> N_n N_{n+1}, N A(N,P) -> N_{n+1} A(N_n,P_n),
 *    P C(N,P) -> P_{n+1} C(N_n,P_n) and (N - N) B -> (N_n - N_{n+1}) B(N_n,P_n)
 *    with denominator function phi(h) = h. The resulting implicit relations are
 *    linear in (N_{n+1}, P_{n+1}) and solve explicitly;
 *  - forward Euler.
 *
 * The Euler maps of the logistic and decay equations are included as
 * validation models.
 */
#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dyncons/errors.hpp"
#include "dyncons/models.hpp"

namespace dyncons {

namespace detail {

inline void require_step(double h) {
  if (!(h > 0.0) || !std::isfinite(h)) {
    throw ValidationError("step size h must be positive and finite, got " + std::to_string(h));
  }
}

inline void require_prey(const State& s, const char* who) {
  if (!(s.n > 0.0)) {
    throw DomainError(std::string(who) + " requires N > 0, got N = " + std::to_string(s.n));
  }
}

}  // namespace detail

/**
 * NSFD step:
 *
 *   N' = N {1 + h + h(N + aP)} (N + aP) / [ (1 + 2hN + a h P)(N + aP) + hP ]
 *   P' = P N (1 + b d h) / (N + b h P)
 *
 * Every factor is positive for N > 0, P >= 0, so N' > 0 and P' >= 0 for all h > 0.
 */
[[nodiscard]] inline State nsfd_step(const ModelParams& params, double h, const State& s) {
  detail::require_prey(s, "nsfd_step");
  const double a = params.alpha();
  const double b = params.beta();
  const double d = params.delta();
  const double mixed = s.n + a * s.p;
  const double n_next = s.n * (1.0 + h + h * mixed) * mixed /
                        ((1.0 + 2.0 * h * s.n + a * h * s.p) * mixed + h * s.p);
  const double p_next = s.p * s.n * (1.0 + b * d * h) / (s.n + b * h * s.p);
  return {n_next, p_next};
}

/// Forward Euler step. Not positivity preserving.
[[nodiscard]] inline State euler_predprey_step(const ModelParams& params, double h, const State& s) {
  detail::require_prey(s, "euler_predprey_step");
  const double mixed = s.n + params.alpha() * s.p;
  if (mixed == 0.0) {
    throw DomainError("euler_predprey_step requires N + alpha P != 0");
  }
  // The predator bracket is delta - P/N. (A printed variant with P/P is a typo;
  // it would make the predator equation independent of prey.)
  return {s.n + h * s.n * (1.0 - s.n - s.p / mixed),
          s.p + h * params.beta() * s.p * (params.delta() - s.p / s.n)};
}

[[nodiscard]] inline double euler_logistic_step(const ScalarModelParams& sp, double h, double x) noexcept {
  return x + h * sp.r() * x * (1.0 - x / sp.k());
}

/// x' = (1 - lambda h) x. Changes sign once lambda h > 1.
[[nodiscard]] inline double euler_decay_step(const ScalarModelParams& sp, double h, double x) noexcept {
  return (1.0 - sp.lambda() * h) * x;
}

enum class Scheme { Nsfd, EulerPredPrey, EulerLogistic, EulerDecay };

[[nodiscard]] inline const char* to_string(Scheme scheme) noexcept {
  switch (scheme) {
    case Scheme::Nsfd: return "NSFD";
    case Scheme::EulerPredPrey: return "EulerPredPrey";
    case Scheme::EulerLogistic: return "EulerLogistic";
    case Scheme::EulerDecay: return "EulerDecay";
  }
  return "?";
}

[[nodiscard]] constexpr bool is_planar(Scheme scheme) noexcept {
  return scheme == Scheme::Nsfd || scheme == Scheme::EulerPredPrey;
}

/**
 * A named one-step map with its step size and parameters.
 *
 * Specialized for the planar predator-prey maps (`DiscreteMap<State>`) and
 * the scalar validation maps (`DiscreteMap<double>`).
 */
template <class Point>
class DiscreteMap;

template <>
class DiscreteMap<State> {
 public:
  using point_type = State;

  DiscreteMap(Scheme scheme, ModelParams params, double h) : scheme_(scheme), params_(params), h_(h) {
    if (!is_planar(scheme)) {
      throw ValidationError(std::string("scheme ") + to_string(scheme) + " is not a predator-prey map");
    }
    detail::require_step(h);
  }

  static DiscreteMap nsfd(ModelParams params, double h) { return {Scheme::Nsfd, params, h}; }
  static DiscreteMap euler(ModelParams params, double h) { return {Scheme::EulerPredPrey, params, h}; }

  [[nodiscard]] Scheme scheme() const noexcept { return scheme_; }
  [[nodiscard]] double h() const noexcept { return h_; }
  [[nodiscard]] const ModelParams& params() const noexcept { return params_; }

  [[nodiscard]] State operator()(const State& s) const {
    return scheme_ == Scheme::Nsfd ? nsfd_step(params_, h_, s) : euler_predprey_step(params_, h_, s);
  }

  /// The coexistence fixed point shared with the ODE, if it exists.
  [[nodiscard]] std::optional<State> interior_fixed_point() const {
    auto eq = interior_equilibrium(params_);
    return eq ? std::optional<State>(eq->state) : std::nullopt;
  }

 private:
  Scheme scheme_;
  ModelParams params_;
  double h_;
};

template <>
class DiscreteMap<double> {
 public:
  using point_type = double;

  DiscreteMap(Scheme scheme, ScalarModelParams params, double h) : scheme_(scheme), params_(params), h_(h) {
    if (is_planar(scheme)) {
      throw ValidationError(std::string("scheme ") + to_string(scheme) + " is not a scalar map");
    }
    detail::require_step(h);
  }

  static DiscreteMap logistic(ScalarModelParams params, double h) { return {Scheme::EulerLogistic, params, h}; }
  static DiscreteMap decay(ScalarModelParams params, double h) { return {Scheme::EulerDecay, params, h}; }

  [[nodiscard]] Scheme scheme() const noexcept { return scheme_; }
  [[nodiscard]] double h() const noexcept { return h_; }
  [[nodiscard]] const ScalarModelParams& params() const noexcept { return params_; }

  [[nodiscard]] double operator()(double x) const noexcept {
    return scheme_ == Scheme::EulerLogistic ? euler_logistic_step(params_, h_, x)
                                            : euler_decay_step(params_, h_, x);
  }

  /// Logistic: x = K. Decay: x = 0.
  [[nodiscard]] std::optional<double> interior_fixed_point() const noexcept {
    return scheme_ == Scheme::EulerLogistic ? params_.k() : 0.0;
  }

 private:
  Scheme scheme_;
  ScalarModelParams params_;
  double h_;
};

using PlanarMap = DiscreteMap<State>;
using ScalarMap = DiscreteMap<double>;

[[nodiscard]] inline bool is_finite(double x) noexcept { return std::isfinite(x); }

enum class FailureKind { NonFinite, Domain };

struct IterationFailure {
  FailureKind kind;
  std::size_t index;  ///< index of the first state that could not be produced
  std::string message;
};

/**
 * Iterates of a map. `states[k]` is the state at time `t0 + k h` for every
 * stored k; states past `store_cap` are streamed to the sink instead of stored.
 */
template <class Point>
struct Trajectory {
  double t0 = 0.0;
  double h = 0.0;
  std::vector<Point> states;
  std::size_t length = 0;  ///< total number of states produced, stored or streamed
  Point last{};
  std::optional<IterationFailure> failure;

  [[nodiscard]] bool ok() const noexcept { return !failure.has_value(); }
  [[nodiscard]] double time_at(std::size_t k) const noexcept { return t0 + static_cast<double>(k) * h; }

  void throw_if_failed() const {
    if (!failure) {
      return;
    }
    if (failure->kind == FailureKind::NonFinite) {
      throw NonFiniteError(failure->index, failure->message);
    }
    throw DomainError(failure->message);
  }
};

template <class Point>
struct IterateOptions {
  std::size_t store_cap = 1'000'000;
  std::function<void(std::size_t, const Point&)> sink;  ///< receives states with index >= store_cap
  double t0 = 0.0;
};

/**
 * Applies `map` `steps` times starting from `s0`. Stops at the first step that
 * throws DomainError or yields a non-finite component and records the failure.
 */
template <class Point>
[[nodiscard]] Trajectory<Point> iterate(const DiscreteMap<Point>& map, const Point& s0, std::size_t steps,
                                        const IterateOptions<Point>& options = {}) {
  Trajectory<Point> traj;
  traj.t0 = options.t0;
  traj.h = map.h();
  traj.states.reserve(std::min(steps + 1, options.store_cap));

  auto emit = [&](std::size_t k, const Point& s) {
    if (k < options.store_cap) {
      traj.states.push_back(s);
    } else if (options.sink) {
      options.sink(k, s);
    }
    traj.last = s;
    traj.length = k + 1;
  };

  emit(0, s0);
  Point current = s0;
  for (std::size_t k = 1; k <= steps; ++k) {
    Point next;
    try {
      next = map(current);
    } catch (const DomainError& e) {
      traj.failure = IterationFailure{FailureKind::Domain, k, e.what()};
      return traj;
    }
    if (!is_finite(next)) {
      traj.failure = IterationFailure{FailureKind::NonFinite, k, "non-finite iterate at k=" + std::to_string(k)};
      return traj;
    }
    emit(k, next);
    current = next;
  }
  return traj;
}

}  // namespace dyncons
