/**
 * @file bifurcation.hpp
 * @brief Step-size bifurcation sweeps.
 *
 * For each h on a uniform grid the map is iterated from the same initial
 * point past a transient, then a fixed number of orbit samples is recorded
 * together with the simulation stability label. Rows are independent, so the
 * sweep fans out over worker threads and merges results in grid order; the
 * output does not depend on the number of workers.
 */
#pragma once

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstddef>
#include <exception>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <type_traits>
#include <vector>

#include "dyncons/analysis.hpp"
#include "dyncons/errors.hpp"
#include "dyncons/models.hpp"
#include "dyncons/schemes.hpp"

namespace dyncons {

inline constexpr std::size_t kDefaultTransient = 2000;
inline constexpr std::size_t kDefaultSamples = 128;
inline constexpr double kDefaultClusterTol = 1e-5;

template <class Point>
struct SweepConfig {
  double h_min = 0.0;
  double h_max = 0.0;
  std::size_t steps = 2;  ///< number of grid points, endpoints included
  std::size_t transient = kDefaultTransient;
  std::size_t samples = kDefaultSamples;
  Point s0{};
  double tol = kDefaultClusterTol;  ///< stability-label and cluster tolerance
  std::size_t jobs = 1;
  bool warm_start = false;  ///< start each h from the previous row's last state (forces jobs = 1)

  void validate() const {
    if (!(h_min > 0.0 && h_min < h_max) || !std::isfinite(h_max)) {
      throw ValidationError("sweep grid needs 0 < h_min < h_max");
    }
    if (steps < 2) {
      throw ValidationError("sweep grid needs at least 2 points");
    }
    if (samples < 1) {
      throw ValidationError("sweep needs at least 1 sample per step size");
    }
    if (!(tol > 0.0)) {
      throw ValidationError("sweep tolerance must be positive");
    }
  }

  [[nodiscard]] double h_at(std::size_t i) const noexcept {
    if (i + 1 == steps) return h_max;
    return h_min + (h_max - h_min) * static_cast<double>(i) / static_cast<double>(steps - 1);
  }
};

enum class Component { N, P, X };

[[nodiscard]] inline const char* to_string(Component c) noexcept {
  switch (c) {
    case Component::N: return "N";
    case Component::P: return "P";
    case Component::X: return "x";
  }
  return "?";
}

struct SweepRow {
  double h = 0.0;
  Component component = Component::X;
  double value = 0.0;
};

struct SweepPoint {
  double h = 0.0;
  OracleResult outcome;
  std::size_t clusters = 0;  ///< max cluster count over the recorded components
};

struct BifurcationDataset {
  std::vector<SweepRow> rows;      ///< grouped by h, ascending
  std::vector<SweepPoint> points;  ///< one per grid value, ascending
};

/// Number of single-linkage clusters of `values` with linking distance `tol`.
[[nodiscard]] inline std::size_t cluster_count(std::vector<double> values, double tol) {
  if (!(tol > 0.0)) {
    throw ValidationError("cluster tolerance must be positive");
  }
  if (values.empty()) {
    return 0;
  }
  std::sort(values.begin(), values.end());
  std::size_t clusters = 1;
  for (std::size_t i = 1; i < values.size(); ++i) {
    if (values[i] - values[i - 1] > tol) {
      ++clusters;
    }
  }
  return clusters;
}

namespace detail {

template <class Point>
struct RowResult {
  SweepPoint point;
  std::vector<SweepRow> rows;
  std::optional<Point> last;
};

inline void append_rows(RowResult<double>& out, double h, const std::vector<double>& w, double tol) {
  for (double x : w) out.rows.push_back({h, Component::X, x});
  out.point.clusters = w.empty() ? 0 : cluster_count(w, tol);
}

inline void append_rows(RowResult<State>& out, double h, const std::vector<State>& w, double tol) {
  std::vector<double> ns, ps;
  ns.reserve(w.size());
  ps.reserve(w.size());
  for (const auto& s : w) {
    ns.push_back(s.n);
    ps.push_back(s.p);
  }
  for (double x : ns) out.rows.push_back({h, Component::N, x});
  for (double x : ps) out.rows.push_back({h, Component::P, x});
  out.point.clusters = w.empty() ? 0 : std::max(cluster_count(ns, tol), cluster_count(ps, tol));
}

template <class Point>
RowResult<Point> sweep_row(const DiscreteMap<Point>& map, const Point& s0, const SweepConfig<Point>& config) {
  RowResult<Point> out;
  out.point.h = map.h();
  const auto orbit = run_orbit(map, s0, config.transient, config.samples);
  out.point.outcome = label_orbit(orbit, map.interior_fixed_point(), config.tol);
  append_rows(out, map.h(), orbit.window, config.tol);
  if (!orbit.window.empty()) out.last = orbit.window.back();
  return out;
}

}  // namespace detail

/**
 * Sweeps h over the configured grid. `make_map(h)` builds the map for one
 * grid value. Diverged rows carry their label and no samples.
 */
template <class Point, class MakeMap>
[[nodiscard]] BifurcationDataset sweep(const SweepConfig<Point>& config, MakeMap&& make_map) {
  config.validate();
  std::vector<detail::RowResult<Point>> results(config.steps);

  if (config.warm_start) {
    Point s = config.s0;
    for (std::size_t i = 0; i < config.steps; ++i) {
      results[i] = detail::sweep_row(make_map(config.h_at(i)), s, config);
      if (results[i].last) s = *results[i].last;
    }
  } else {
    const std::size_t workers = std::clamp<std::size_t>(config.jobs, 1, config.steps);
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto work = [&] {
      for (std::size_t i = next++; i < config.steps; i = next++) {
        try {
          results[i] = detail::sweep_row(make_map(config.h_at(i)), config.s0, config);
        } catch (...) {
          std::lock_guard lock(error_mutex);
          if (!error) error = std::current_exception();
        }
      }
    };
    if (workers == 1) {
      work();
    } else {
      std::vector<std::jthread> pool;
      pool.reserve(workers);
      for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(work);
    }
    if (error) std::rethrow_exception(error);
  }

  BifurcationDataset data;
  data.points.reserve(config.steps);
  data.rows.reserve(config.steps * config.samples * (std::is_same_v<Point, State> ? 2 : 1));
  for (auto& r : results) {
    data.points.push_back(r.point);
    data.rows.insert(data.rows.end(), r.rows.begin(), r.rows.end());
  }
  return data;
}

[[nodiscard]] inline BifurcationDataset sweep(const SweepConfig<State>& config, Scheme scheme,
                                              const ModelParams& params) {
  return sweep(config, [&](double h) { return PlanarMap(scheme, params, h); });
}

[[nodiscard]] inline BifurcationDataset sweep(const SweepConfig<double>& config, Scheme scheme,
                                              const ScalarModelParams& params) {
  return sweep(config, [&](double h) { return ScalarMap(scheme, params, h); });
}

}  // namespace dyncons
