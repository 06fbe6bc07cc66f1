/**
 * @file jacobian.hpp
 * @brief 2x2 variational matrix.
 */
#pragma once

#include <algorithm>
#include <cmath>

namespace dyncons {

struct Jacobian2 {
  double a11 = 0.0;
  double a12 = 0.0;
  double a21 = 0.0;
  double a22 = 0.0;

  [[nodiscard]] double trace() const noexcept { return a11 + a22; }
  [[nodiscard]] double det() const noexcept { return a11 * a22 - a12 * a21; }
  [[nodiscard]] bool finite() const noexcept {
    return std::isfinite(a11) && std::isfinite(a12) && std::isfinite(a21) && std::isfinite(a22);
  }
  [[nodiscard]] double max_abs() const noexcept {
    return std::max({std::abs(a11), std::abs(a12), std::abs(a21), std::abs(a22)});
  }

  static Jacobian2 identity() noexcept { return {1.0, 0.0, 0.0, 1.0}; }

  friend bool operator==(const Jacobian2&, const Jacobian2&) = default;
};

/// max |a_ij - b_ij| / max |b_ij|; normwise relative error of `a` against reference `b`.
[[nodiscard]] inline double relative_error(const Jacobian2& a, const Jacobian2& b) noexcept {
  const double diff = std::max({std::abs(a.a11 - b.a11), std::abs(a.a12 - b.a12), std::abs(a.a21 - b.a21),
                                std::abs(a.a22 - b.a22)});
  const double ref = b.max_abs();
  return ref > 0.0 ? diff / ref : diff;
}

}  // namespace dyncons
