/**
 * @file acceptance.cpp
 * @brief Acceptance checks, one PASS/FAIL line per criterion.
 *
 * Usage: dyncons_acceptance [--only N]
 */
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "cli/app.hpp"
#include "dyncons/dyncons.hpp"
#include "support/random_params.hpp"

namespace {

using namespace dyncons;

const ModelParams kReference{0.7, 0.9, 0.6};
const State kStart{0.2, 0.2};

struct Verdict {
  bool pass;
  std::string detail;
};

std::string fmt(const char* format, double a, double b = 0.0, double c = 0.0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, format, a, b, c);
  return buf;
}

bool round4(double value, double expected) { return std::abs(value - expected) < 5e-5; }

Verdict equilibrium() {
  const State e = require_interior(kReference);
  return {round4(e.n, 0.5775) && round4(e.p, 0.3465), fmt("E* = (%.6f, %.6f)", e.n, e.p)};
}

Verdict threshold() {
  const auto t = euler_threshold(kReference);
  const bool ok = round4(t.g_euler, 1.6533) && round4(t.det_bound, 2.6293) && round4(t.fold_bound, 2.4393) &&
                  t.h_max == std::min(t.det_bound, t.fold_bound);
  return {ok, fmt("G = %.6f, G/H = %.6f, 2q^2/G = %.6f", t.g_euler, t.det_bound, t.fold_bound)};
}

Verdict time_series() {
  const State e = require_interior(kReference);
  const auto euler2 = iterate(PlanarMap::euler(kReference, 2.0), kStart, 10000);
  const double d_euler2 = euler2.ok() ? distance(euler2.last, e) : INFINITY;
  const auto osc = simulation_stability_oracle(PlanarMap::euler(kReference, 2.67), kStart, kDefaultTransient,
                                               kDefaultSamples, kDefaultClusterTol);
  const auto nsfd = iterate(PlanarMap::nsfd(kReference, 2.67), kStart, 10000);
  const double d_nsfd = nsfd.ok() ? distance(nsfd.last, e) : INFINITY;
  const bool ok = d_euler2 < 1e-4 && osc.outcome == Outcome::Oscillatory && d_nsfd < 1e-6;
  return {ok, fmt("Euler h=2 distance %.3g, NSFD h=2.67 distance %.3g", d_euler2, d_nsfd) +
                  ", Euler h=2.67 " + osc.label()};
}

std::optional<double> first_multi_cluster(const BifurcationDataset& data) {
  for (const auto& p : data.points) {
    if (p.clusters > 1 || p.outcome.outcome == Outcome::Diverged) return p.h;
  }
  return std::nullopt;
}

Verdict logistic_sweep() {
  SweepConfig<double> c;
  c.h_min = 0.5;
  c.h_max = 1.0;
  c.steps = 51;
  c.s0 = 0.4;
  const ScalarModelParams sp(3.0, 50.0, 1.0);
  const auto onset = first_multi_cluster(sweep(c, Scheme::EulerLogistic, sp));
  const bool ok = onset && *onset >= 0.66 && *onset <= 0.68 &&
                  std::abs(logistic_euler_threshold(sp) - 2.0 / 3.0) < 1e-15;
  return {ok, onset ? fmt("first multi-cluster h = %.2f (2/r = %.4f)", *onset, logistic_euler_threshold(sp))
                    : std::string("no transition found")};
}

Verdict euler_nsfd_sweeps() {
  SweepConfig<State> euler;
  euler.h_min = 0.1;
  euler.h_max = 3.0;
  euler.steps = 291;
  euler.s0 = kStart;
  euler.jobs = cli::resolve_jobs(0);
  const auto onset = first_multi_cluster(sweep(euler, Scheme::EulerPredPrey, kReference));
  const bool euler_ok = onset && *onset >= 2.43 && *onset <= 2.45;

  SweepConfig<State> nsfd = euler;
  nsfd.h_min = 0.1;
  nsfd.h_max = 100.0;
  nsfd.steps = 1000;
  const auto data = sweep(nsfd, Scheme::Nsfd, kReference);
  const auto converged = std::count_if(data.points.begin(), data.points.end(), [](const SweepPoint& p) {
    return p.outcome.outcome == Outcome::ConvergedToInterior;
  });
  const bool nsfd_ok = converged == static_cast<long>(data.points.size());

  std::string detail = onset ? fmt("Euler transition at h = %.2f (required [2.43, 2.45])", *onset)
                             : std::string("Euler transition not found");
  detail += fmt("; NSFD %.0f/%.0f ConvergedToInterior", double(converged), double(data.points.size()));
  return {euler_ok && nsfd_ok, detail};
}

Verdict positivity() {
  auto rng = testing::make_rng(101);
  int violations = 0;
  for (int i = 0; i < 10000; ++i) {
    const ModelParams p = testing::random_params(rng, 1e-3, 10.0);
    const double h = testing::uniform(rng, 1e-6, 100.0);
    const State s{testing::uniform(rng, 1e-6, 10.0), testing::uniform(rng, 1e-6, 10.0)};
    const State next = nsfd_step(p, h, s);
    violations += !(next.n > 0.0 && next.p > 0.0);
  }
  return {violations == 0, fmt("%.0f violations in 10000 steps", violations)};
}

template <class Check>
void over_grid(Check&& check) {
  auto rng = testing::make_rng(202);
  for (int i = 0; i < 20; ++i) {
    const ModelParams p = testing::random_stable_params(rng);
    for (double h : {0.1, 2.0, 10.0}) check(p, h);
  }
}

Verdict jacobian_oracle() {
  double worst = 0.0;
  over_grid([&](const ModelParams& p, double h) {
    const State e = require_interior(p);
    worst = std::max(worst, relative_error(nsfd_jacobian_at_interior(p, h), oracle::fd_jacobian(PlanarMap::nsfd(p, h), e)));
    worst = std::max(worst, relative_error(euler_jacobian_at_interior(p, h), oracle::fd_jacobian(PlanarMap::euler(p, h), e)));
  });
  return {worst < 1e-6, fmt("max relative error %.3g", worst)};
}

Verdict analytic_identities() {
  double worst = 0.0;
  over_grid([&](const ModelParams& p, double h) {
    const State e = require_interior(p);
    const double b = p.beta(), d = p.delta(), q = p.one_plus_alpha_delta();
    const auto je = euler_jacobian_at_interior(p, h);
    const double euler_expected = h * h * b * e.p;
    worst = std::max(worst, std::abs(1.0 - je.trace() + je.det() - euler_expected) / euler_expected);
    const auto jn = nsfd_jacobian_at_interior(p, h);
    const auto [g_n, h_n] = nsfd_denominators_at_interior(p, h);
    const double nsfd_expected = b * d * h * h * e.n * e.n * (q - d) / (g_n * h_n);
    worst = std::max(worst, std::abs(1.0 - jn.trace() + jn.det() - nsfd_expected) / nsfd_expected);
  });
  return {worst < 1e-10, fmt("max relative error %.3g", worst)};
}

Verdict elementary_stability() {
  auto rng = testing::make_rng(303);
  int stable = 0;
  for (int i = 0; i < 100; ++i) {
    const ModelParams p = testing::random_stable_params(rng, 1e-3);
    for (double h : {0.01, 0.1, 1.0, 10.0, 100.0}) {
      stable += classify(nsfd_jacobian_at_interior(p, h)).classification == Classification::Stable;
    }
  }
  return {stable == 500, fmt("%.0f/500 Stable", stable)};
}

Verdict consistency_order() {
  IntegratorOptions tight;
  tight.rel_tol = 1e-12;
  tight.abs_tol = 1e-14;
  const State exact = integrate_continuous(kReference, kStart, 1.0, tight).last;
  bool ok = true;
  std::string detail;
  for (Scheme scheme : {Scheme::Nsfd, Scheme::EulerPredPrey}) {
    const double coarse = distance(iterate(PlanarMap(scheme, kReference, 1e-2), kStart, 100).last, exact);
    const double fine = distance(iterate(PlanarMap(scheme, kReference, 5e-3), kStart, 200).last, exact);
    const double ratio = coarse / fine;
    ok = ok && ratio >= 1.6 && ratio <= 2.4;
    detail += std::string(detail.empty() ? "" : ", ") + to_string(scheme) + fmt(" ratio %.4f", ratio);
  }
  return {ok, detail};
}

Verdict determinism() {
  auto bifurcate = [](const char* jobs) {
    std::ostringstream out, err;
    const int code = cli::run_cli({"bifurcate", "--scheme", "euler", "--jobs", jobs}, out, err);
    return code == 0 ? out.str() : std::string();
  };
  const std::string serial = bifurcate("1");
  const std::string parallel = bifurcate("8");
  const bool ok = !serial.empty() && serial == parallel;
  return {ok, fmt("%.0f bytes, identical: ", double(serial.size())) + (ok ? "yes" : "no")};
}

struct Criterion {
  int id;
  const char* name;
  std::function<Verdict()> check;
};

}  // namespace

int main(int argc, char** argv) {
  std::optional<int> only;
  for (int i = 1; i < argc; ++i) {
    if (std::string(argv[i]) == "--only" && i + 1 < argc) only = std::atoi(argv[++i]);
  }

  const std::vector<Criterion> criteria = {
      {1, "interior equilibrium", equilibrium},
      {2, "Euler step-size bound", threshold},
      {3, "time series at h = 2 and h = 2.67", time_series},
      {4, "logistic Euler sweep transition", logistic_sweep},
      {5, "Euler and NSFD predator-prey sweeps", euler_nsfd_sweeps},
      {6, "NSFD positivity", positivity},
      {7, "closed-form vs finite-difference Jacobians", jacobian_oracle},
      {8, "analytic 1 - tr + det identities", analytic_identities},
      {9, "NSFD stable for every step size", elementary_stability},
      {10, "first-order consistency", consistency_order},
      {11, "bifurcate determinism across --jobs", determinism},
  };

  int failures = 0;
  int ran = 0;
  for (const auto& c : criteria) {
    if (only && *only != c.id) continue;
    ++ran;
    const auto start = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = c.check();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("[%s] %2d %s: %s (%.2fs)\n", v.pass ? "PASS" : "FAIL", c.id, c.name, v.detail.c_str(), secs);
    failures += !v.pass;
  }
  if (ran == 0) {
    std::fprintf(stderr, "no criterion selected\n");
    return 2;
  }
  return failures == 0 ? 0 : 1;
}
