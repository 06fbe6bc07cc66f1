/**
 * @file models.hpp
 * @brief Continuous-time systems: the ratio-dependent Holling-Tanner
 * predator-prey model, the logistic equation and linear decay.
 *
 * Predator-prey system (dimensionless):
 *
 *   dN/dt = N(1 - N) - N P / (N + alpha P)
 *   dP/dt = beta P (delta - P / N)
 *
 * Equilibria are evaluated from their closed forms; nothing here does root finding.
 */
#pragma once

#include <cmath>
#include <optional>
#include <string>

#include "dyncons/errors.hpp"

namespace dyncons {

namespace detail {

inline void require_positive(double value, const char* name) {
  if (!(value > 0.0) || !std::isfinite(value)) {
    throw ValidationError(std::string(name) + " must be a positive finite number, got " +
                          std::to_string(value));
  }
}

}  // namespace detail

/// (alpha, beta, delta): interference constant, predator intrinsic rate, carrying ratio.
class ModelParams {
 public:
  ModelParams(double alpha, double beta, double delta) : alpha_(alpha), beta_(beta), delta_(delta) {
    detail::require_positive(alpha, "alpha");
    detail::require_positive(beta, "beta");
    detail::require_positive(delta, "delta");
  }

  [[nodiscard]] double alpha() const noexcept { return alpha_; }
  [[nodiscard]] double beta() const noexcept { return beta_; }
  [[nodiscard]] double delta() const noexcept { return delta_; }

  /// 1 + alpha delta, the quantity most closed forms are built from.
  [[nodiscard]] double one_plus_alpha_delta() const noexcept { return 1.0 + alpha_ * delta_; }

  /// Interior equilibrium exists: 1 + alpha delta > delta.
  [[nodiscard]] bool interior_exists() const noexcept { return one_plus_alpha_delta() > delta_; }

  /// Interior equilibrium is stable for the ODE: delta (2 + alpha delta) < (1 + alpha delta)^2 (1 + beta delta).
  [[nodiscard]] bool interior_stable() const noexcept {
    const double q = one_plus_alpha_delta();
    return interior_exists() && delta_ * (2.0 + alpha_ * delta_) < q * q * (1.0 + beta_ * delta_);
  }

  friend bool operator==(const ModelParams&, const ModelParams&) = default;

 private:
  double alpha_;
  double beta_;
  double delta_;
};

/// Prey and predator densities.
struct State {
  double n = 0.0;
  double p = 0.0;

  friend bool operator==(const State&, const State&) = default;
};

[[nodiscard]] inline double distance(const State& a, const State& b) noexcept {
  return std::hypot(a.n - b.n, a.p - b.p);
}

[[nodiscard]] inline bool is_finite(const State& s) noexcept {
  return std::isfinite(s.n) && std::isfinite(s.p);
}

enum class EquilibriumKind { PredatorFree, Interior };

struct Equilibrium {
  State state;
  EquilibriumKind kind;
};

/// Parameters of the two scalar validation models.
class ScalarModelParams {
 public:
  ScalarModelParams(double r, double k, double lambda) : r_(r), k_(k), lambda_(lambda) {
    detail::require_positive(r, "r");
    detail::require_positive(k, "k");
    detail::require_positive(lambda, "lambda");
  }

  [[nodiscard]] double r() const noexcept { return r_; }
  [[nodiscard]] double k() const noexcept { return k_; }
  [[nodiscard]] double lambda() const noexcept { return lambda_; }

  friend bool operator==(const ScalarModelParams&, const ScalarModelParams&) = default;

 private:
  double r_;
  double k_;
  double lambda_;
};

[[nodiscard]] inline State rhs_predprey(const ModelParams& params, const State& s) {
  if (!(s.n > 0.0)) {
    throw DomainError("predator-prey right-hand side requires N > 0, got N = " + std::to_string(s.n));
  }
  const double mixed = s.n + params.alpha() * s.p;
  if (mixed == 0.0) {
    throw DomainError("predator-prey right-hand side requires N + alpha P != 0");
  }
  return {s.n * (1.0 - s.n) - s.n * s.p / mixed,
          params.beta() * s.p * (params.delta() - s.p / s.n)};
}

[[nodiscard]] inline Equilibrium predator_free_equilibrium() noexcept {
  return {State{1.0, 0.0}, EquilibriumKind::PredatorFree};
}

/// Coexistence equilibrium N* = (1 + alpha delta - delta) / (1 + alpha delta), P* = delta N*.
/// Absent when the existence condition fails.
[[nodiscard]] inline std::optional<Equilibrium> interior_equilibrium(const ModelParams& params) {
  if (!params.interior_exists()) {
    return std::nullopt;
  }
  const double q = params.one_plus_alpha_delta();
  const double n_star = (q - params.delta()) / q;
  return Equilibrium{State{n_star, params.delta() * n_star}, EquilibriumKind::Interior};
}

/// Interior equilibrium state, throwing ExistenceError when it does not exist.
[[nodiscard]] inline State require_interior(const ModelParams& params) {
  auto eq = interior_equilibrium(params);
  if (!eq) {
    throw ExistenceError("interior equilibrium requires 1 + alpha*delta > delta (alpha=" +
                         std::to_string(params.alpha()) + ", delta=" + std::to_string(params.delta()) +
                         ")");
  }
  return eq->state;
}

[[nodiscard]] inline double rhs_logistic(const ScalarModelParams& sp, double x) noexcept {
  return sp.r() * x * (1.0 - x / sp.k());
}

[[nodiscard]] inline double rhs_decay(const ScalarModelParams& sp, double x) noexcept {
  return -sp.lambda() * x;
}

}  // namespace dyncons
