#pragma once

// Variational matrix of the NSFD map at an arbitrary point (N, P), written
// out term by term from the quotient rule. Kept in the test tree only, as a
// check target for the finite-difference oracle and the fixed-point forms.

#include "dyncons/jacobian.hpp"
#include "dyncons/models.hpp"

namespace dyncons::testing {

inline Jacobian2 nsfd_general_jacobian(const ModelParams& params, double h, const State& s) {
  const double a = params.alpha();
  const double b = params.beta();
  const double d = params.delta();
  const double n = s.n;
  const double p = s.p;

  const double mix = n + a * p;                   // N + aP
  const double grow = 1.0 + h + h * mix;          // 1 + h + h(N + aP)
  const double lin = 1.0 + 2.0 * h * n + a * h * p;
  const double den = lin * mix + h * p;
  const double den2 = den * den;

  const double a11 = grow * mix / den + h * n * mix / den + n * grow / den -
                     n * grow * mix * (2.0 * h * mix + lin) / den2;
  const double a12 = a * h * n * mix / den + a * n * grow / den -
                     n * grow * mix * (a * h * mix + a * lin + h) / den2;

  const double q = 1.0 + b * d * h;
  const double pden = n + b * h * p;
  const double a21 = p * q / pden - p * n * q / (pden * pden);
  const double a22 = q * n / pden - b * h * p * n * q / (pden * pden);
  return {a11, a12, a21, a22};
}

}  // namespace dyncons::testing
