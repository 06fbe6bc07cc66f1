/**
 * @file app.hpp
 * @brief Subcommands of the dyncons command-line tool.
 *
 *   simulate   iterate one discrete map and write its trajectory as CSV
 *   stability  JSON stability report of the interior fixed point
 *   bifurcate  step-size bifurcation sweep as CSV (+ optional gnuplot script)
 *   compare    continuous reference vs NSFD vs Euler, aligned CSVs + summary
 *   repro      regenerate every figure dataset into a fresh directory
 *
 * Exit codes: 0 success, 2 invalid input, 3 numerical failure at run time.
 */
#pragma once

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "cli/io.hpp"
#include "dyncons/dyncons.hpp"

namespace dyncons::cli {

enum ExitCode : int { kOk = 0, kInvalid = 2, kNumerical = 3 };

namespace fs = std::filesystem;

/// Values shared by all subcommands; defaults are the reference predator-prey setup.
struct Settings {
  std::string scheme = "nsfd";
  double alpha = 0.7;
  double beta = 0.9;
  double delta = 0.6;
  double n0 = 0.2;
  double p0 = 0.2;
  double r = 3.0;
  double k = 50.0;
  double lambda = 1.0;
  double x0 = 0.4;
  double h = 0.1;
  std::size_t steps = 1000;
  double t_end = 500.0;
  double h_min = 0.1;
  double h_max = 3.0;
  std::size_t grid = 291;
  std::size_t transient = kDefaultTransient;
  std::size_t samples = kDefaultSamples;
  double tol = kDefaultClusterTol;
  std::size_t jobs = 0;
  bool warm_start = false;
  std::string out;
  std::string plot_script;
  std::string config;
  std::string out_dir = ".";
  std::string name;
};

[[nodiscard]] inline Scheme parse_scheme(const std::string& name) {
  if (name == "nsfd") return Scheme::Nsfd;
  if (name == "euler") return Scheme::EulerPredPrey;
  if (name == "logistic" || name == "euler-logistic") return Scheme::EulerLogistic;
  if (name == "decay" || name == "euler-decay") return Scheme::EulerDecay;
  throw ValidationError("unknown scheme '" + name + "'");
}

[[nodiscard]] inline const std::vector<std::string>& scheme_names() {
  static const std::vector<std::string> names{"nsfd", "euler", "logistic", "euler-logistic", "decay",
                                              "euler-decay"};
  return names;
}

[[nodiscard]] inline ModelParams model_params(const Settings& s) { return {s.alpha, s.beta, s.delta}; }
[[nodiscard]] inline ScalarModelParams scalar_params(const Settings& s) { return {s.r, s.k, s.lambda}; }

[[nodiscard]] inline json planar_parameters(const Settings& s) {
  return {{"scheme", s.scheme}, {"alpha", s.alpha}, {"beta", s.beta}, {"delta", s.delta},
          {"n0", s.n0},         {"p0", s.p0}};
}

[[nodiscard]] inline json scalar_parameters(const Settings& s) {
  return {{"scheme", s.scheme}, {"r", s.r}, {"k", s.k}, {"lambda", s.lambda}, {"x0", s.x0}};
}

[[nodiscard]] inline json scheme_parameters(const Settings& s) {
  return is_planar(parse_scheme(s.scheme)) ? planar_parameters(s) : scalar_parameters(s);
}

/// --jobs, then DYNCONS_JOBS, then the hardware concurrency.
[[nodiscard]] inline std::size_t resolve_jobs(std::size_t flag) {
  if (flag > 0) return flag;
  if (const char* env = std::getenv("DYNCONS_JOBS")) {
    try {
      const long v = std::stol(env);
      if (v > 0) return static_cast<std::size_t>(v);
    } catch (const std::exception&) {
    }
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

/**
 * Merges a JSON config file into the argument list: every key becomes
 * `--key value` unless the user already passed `--key`. Keys may use '-' or '_'.
 */
[[nodiscard]] inline std::vector<std::string> merge_config(std::vector<std::string> args) {
  auto it = std::find(args.begin(), args.end(), "--config");
  std::string path;
  if (it != args.end() && it + 1 != args.end()) {
    path = *(it + 1);
  } else {
    for (const auto& a : args) {
      if (a.rfind("--config=", 0) == 0) path = a.substr(9);
    }
  }
  if (path.empty()) return args;

  std::ifstream in(path);
  if (!in) throw ValidationError("cannot read config file " + path);
  json cfg;
  try {
    cfg = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ValidationError("invalid JSON in config file " + path + ": " + e.what());
  }
  if (!cfg.is_object()) throw ValidationError("config file must contain a JSON object");

  auto given = [&](const std::string& flag) {
    return std::any_of(args.begin(), args.end(),
                       [&](const std::string& a) { return a == flag || a.rfind(flag + "=", 0) == 0; });
  };
  for (const auto& [key, value] : cfg.items()) {
    std::string name = key;
    std::replace(name.begin(), name.end(), '_', '-');
    const std::string flag = "--" + name;
    if (name == "config" || given(flag)) continue;
    if (value.is_boolean()) {
      if (value.get<bool>()) args.push_back(flag);
    } else if (value.is_string()) {
      args.push_back(flag);
      args.push_back(value.get<std::string>());
    } else if (value.is_number()) {
      args.push_back(flag);
      args.push_back(value.dump());
    } else {
      throw ValidationError("config key '" + key + "' must be a number, string or boolean");
    }
  }
  return args;
}

class App {
 public:
  App(std::ostream& out, std::ostream& err) : out_(out), err_(err) {}

  int run(std::vector<std::string> args) {
    try {
      args_ = merge_config(std::move(args));
    } catch (const Error& e) {
      err_ << "error: " << e.what() << '\n';
      return kInvalid;
    }

    CLI::App app{"Dynamic-consistency toolkit for NSFD and Euler discretizations of a predator-prey model"};
    app.name(kToolName);
    app.set_help_flag("--help", "Print this help message and exit");
    app.set_version_flag("--version", kToolVersion);
    app.require_subcommand(1);

    auto* simulate = add_command(app, "simulate", "Iterate a discrete map and write the trajectory as CSV");
    add_scheme(simulate);
    add_model(simulate);
    add_initial(simulate);
    simulate->add_option("--h", s_.h, "Step size")->capture_default_str();
    simulate->add_option("--steps", s_.steps, "Number of map iterations")->capture_default_str();
    simulate->add_option("--out", s_.out, "Output CSV path (stdout when omitted)");

    auto* stability = add_command(app, "stability", "JSON stability report of the interior fixed point");
    add_scheme(stability);
    add_model(stability);
    stability->add_option("--h", s_.h, "Step size")->capture_default_str();

    auto* bifurcate = add_command(app, "bifurcate", "Step-size bifurcation sweep");
    add_scheme(bifurcate);
    add_model(bifurcate);
    add_initial(bifurcate);
    bifurcate->add_option("--h-min", s_.h_min, "Smallest step size")->capture_default_str();
    bifurcate->add_option("--h-max", s_.h_max, "Largest step size")->capture_default_str();
    bifurcate->add_option("--grid", s_.grid, "Number of grid points (>= 2)")->capture_default_str();
    bifurcate->add_option("--transient", s_.transient, "Discarded iterations per step size")->capture_default_str();
    bifurcate->add_option("--samples", s_.samples, "Recorded iterations per step size")->capture_default_str();
    bifurcate->add_option("--tol", s_.tol, "Convergence / cluster tolerance")->capture_default_str();
    bifurcate->add_option("--jobs", s_.jobs, "Worker threads (default: DYNCONS_JOBS or all cores)");
    bifurcate->add_flag("--warm-start", s_.warm_start, "Start each step size from the previous final state");
    bifurcate->add_option("--out", s_.out, "Output CSV path (stdout when omitted)");
    bifurcate->add_option("--plot-script", s_.plot_script, "Also write a gnuplot script to this path");

    auto* compare = add_command(app, "compare", "Continuous reference vs NSFD vs Euler");
    add_model(compare);
    add_initial(compare);
    compare->add_option("--h", s_.h, "Step size of both maps")->capture_default_str();
    compare->add_option("--t-end", s_.t_end, "Final time")->capture_default_str();
    compare->add_option("--out", s_.out, "Output prefix: <out>_continuous.csv, <out>_nsfd.csv, ...")->required();

    auto* repro = add_command(app, "repro", "Regenerate all figure datasets into a new directory");
    repro->add_option("--out-dir", s_.out_dir, "Parent directory")->capture_default_str();
    repro->add_option("--name", s_.name, "Directory name (default: repro-<UTC timestamp>)");
    repro->add_option("--jobs", s_.jobs, "Worker threads for the sweeps");

    std::vector<std::string> reversed(args_.rbegin(), args_.rend());
    try {
      app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
      out_ << app.help();
      return kOk;
    } catch (const CLI::CallForVersion&) {
      out_ << kToolVersion << '\n';
      return kOk;
    } catch (const CLI::ParseError& e) {
      err_ << "error: " << e.what() << '\n';
      return kInvalid;
    }

    try {
      if (*simulate) return cmd_simulate();
      if (*stability) return cmd_stability();
      if (*bifurcate) return cmd_bifurcate();
      if (*compare) return cmd_compare();
      if (*repro) return cmd_repro();
    } catch (const NonFiniteError& e) {
      err_ << "error: " << e.what() << '\n';
      return kNumerical;
    } catch (const StepFailure& e) {
      err_ << "error: " << e.what() << '\n';
      return kNumerical;
    } catch (const Error& e) {
      err_ << "error: " << e.what() << '\n';
      return kInvalid;
    } catch (const fs::filesystem_error& e) {
      err_ << "error: " << e.what() << '\n';
      return kInvalid;
    }
    return kInvalid;
  }

 private:
  CLI::App* add_command(CLI::App& app, const char* name, const char* description) {
    auto* sub = app.add_subcommand(name, description);
    sub->set_help_flag("--help", "Print this help message and exit");
    sub->add_option("--config", s_.config, "JSON file with option values; flags override it");
    return sub;
  }

  void add_scheme(CLI::App* sub) {
    sub->add_option("--scheme", s_.scheme, "nsfd | euler | logistic | decay")
        ->check(CLI::IsMember(scheme_names()))
        ->capture_default_str();
  }

  void add_model(CLI::App* sub) {
    sub->add_option("--alpha", s_.alpha, "Interference constant alpha")->capture_default_str();
    sub->add_option("--beta", s_.beta, "Predator intrinsic rate beta")->capture_default_str();
    sub->add_option("--delta", s_.delta, "Carrying ratio delta")->capture_default_str();
    sub->add_option("--r", s_.r, "Logistic growth rate")->capture_default_str();
    sub->add_option("--k", s_.k, "Logistic carrying capacity")->capture_default_str();
    sub->add_option("--lambda", s_.lambda, "Decay rate")->capture_default_str();
  }

  void add_initial(CLI::App* sub) {
    sub->add_option("--n0", s_.n0, "Initial prey density")->capture_default_str();
    sub->add_option("--p0", s_.p0, "Initial predator density")->capture_default_str();
    sub->add_option("--x0", s_.x0, "Initial value of the scalar models")->capture_default_str();
  }

  [[nodiscard]] State planar_start() const {
    if (!(s_.n0 > 0.0) || !(s_.p0 >= 0.0) || !std::isfinite(s_.n0) || !std::isfinite(s_.p0)) {
      throw ValidationError("initial state needs N0 > 0 and P0 >= 0");
    }
    return {s_.n0, s_.p0};
  }

  template <class Point>
  void write_trajectory(std::ostream& os, const DiscreteMap<Point>& map, const Point& s0, std::size_t steps,
                        std::optional<IterationFailure>& failure) {
    os << trajectory_header<Point>() << '\n';
    IterateOptions<Point> options;
    options.store_cap = 0;
    options.sink = [&](std::size_t k, const Point& s) { write_state_row(os, k, map.h() * double(k), s); };
    const auto traj = iterate(map, s0, steps, options);
    failure = traj.failure;
    if (failure) {
      if (failure->kind == FailureKind::NonFinite) {
        os << "# nonfinite at k=" << failure->index << '\n';
      } else {
        os << "# domain error at k=" << failure->index << '\n';
      }
    }
    os.flush();
  }

  template <class Point>
  int simulate_into(std::ostream& os, const DiscreteMap<Point>& map, const Point& s0) {
    std::optional<IterationFailure> failure;
    write_trajectory(os, map, s0, s_.steps, failure);
    if (failure) {
      err_ << "error: " << failure->message << " (k=" << failure->index << ")\n";
      return kNumerical;
    }
    return kOk;
  }

  int cmd_simulate() {
    const Scheme scheme = parse_scheme(s_.scheme);
    json params = scheme_parameters(s_);
    params["h"] = s_.h;
    params["steps"] = s_.steps;

    auto run_into = [&](std::ostream& os) {
      if (is_planar(scheme)) {
        return simulate_into(os, PlanarMap(scheme, model_params(s_), s_.h), planar_start());
      }
      return simulate_into(os, ScalarMap(scheme, scalar_params(s_), s_.h), s_.x0);
    };

    if (s_.out.empty()) {
      return run_into(out_);
    }
    // Validate before touching the filesystem.
    if (is_planar(scheme)) {
      (void)PlanarMap(scheme, model_params(s_), s_.h);
      (void)planar_start();
    } else {
      (void)ScalarMap(scheme, scalar_params(s_), s_.h);
    }
    int code = kOk;
    {
      auto os = open_output(s_.out);
      code = run_into(os);
    }
    write_manifest(manifest_path_for(s_.out), "simulate", args_, params, {s_.out});
    return code;
  }

  int cmd_stability() {
    const Scheme scheme = parse_scheme(s_.scheme);
    if (!is_planar(scheme)) {
      throw ValidationError("stability supports --scheme nsfd or euler");
    }
    const ModelParams params = model_params(s_);
    if (!params.interior_exists()) {
      throw ExistenceError("interior equilibrium does not exist: requires 1 + alpha*delta > delta");
    }
    const PlanarMap map(scheme, params, s_.h);
    const auto report = classify(jacobian_at_interior(map));

    json doc = {{"scheme", s_.scheme}, {"h", s_.h}, {"params", to_json(params)},
                {"equilibrium", to_json(require_interior(params))}};
    const json fields = to_json(report);
    for (const auto& [key, value] : fields.items()) doc[key] = value;
    if (scheme == Scheme::EulerPredPrey) {
      if (params.interior_stable()) {
        json threshold = to_json(euler_threshold(params));
        const auto crossing = euler_critical_step(params);
        threshold["eigenvalue_crossing"] = 0.5 * (crossing.stable + crossing.unstable);
        doc["euler_threshold"] = threshold;
      } else {
        doc["euler_threshold"] = nullptr;
      }
    }
    out_ << doc.dump(2) << '\n';
    return kOk;
  }

  template <class Point>
  [[nodiscard]] BifurcationDataset run_sweep(const Point& s0, Scheme scheme) const {
    SweepConfig<Point> config;
    config.h_min = s_.h_min;
    config.h_max = s_.h_max;
    config.steps = s_.grid;
    config.transient = s_.transient;
    config.samples = s_.samples;
    config.s0 = s0;
    config.tol = s_.tol;
    config.jobs = resolve_jobs(s_.jobs);
    config.warm_start = s_.warm_start;
    if constexpr (std::is_same_v<Point, State>) {
      return sweep(config, scheme, model_params(s_));
    } else {
      return sweep(config, scheme, scalar_params(s_));
    }
  }

  int cmd_bifurcate() {
    const Scheme scheme = parse_scheme(s_.scheme);
    const auto data = is_planar(scheme) ? run_sweep(planar_start(), scheme) : run_sweep(s_.x0, scheme);

    json params = scheme_parameters(s_);
    params.update(json{{"h_min", s_.h_min}, {"h_max", s_.h_max}, {"grid", s_.grid}, {"transient", s_.transient},
                       {"samples", s_.samples}, {"tol", s_.tol}, {"warm_start", s_.warm_start}});

    if (s_.out.empty()) {
      write_dataset_csv(out_, data);
    } else {
      {
        auto os = open_output(s_.out);
        write_dataset_csv(os, data);
      }
      std::vector<fs::path> outputs{s_.out};
      if (!s_.plot_script.empty()) {
        write_bifurcation_plot(s_.plot_script, s_.out, is_planar(scheme) ? "N" : "x",
                               std::string(to_string(scheme)) + " bifurcation in h");
        outputs.emplace_back(s_.plot_script);
      }
      write_manifest(manifest_path_for(s_.out), "bifurcate", args_, params, outputs);
    }
    return kOk;
  }

  int cmd_compare() {
    const ModelParams params = model_params(s_);
    const State s0 = planar_start();
    detail::require_step(s_.h);
    if (!(s_.t_end > 0.0)) throw ValidationError("--t-end must be positive");
    const auto steps = static_cast<std::size_t>(std::llround(s_.t_end / s_.h));
    if (steps == 0) throw ValidationError("--t-end must cover at least one step of size h");
    const double t_final = s_.h * static_cast<double>(steps);

    // Continuous reference sampled on the same grid as the maps.
    const std::size_t stride = (kMinContinuousSamples + steps - 1) / steps;
    IntegratorOptions options;
    options.samples = steps * stride;
    const auto reference = integrate_continuous(params, s0, t_final, options);

    const fs::path prefix = s_.out;
    const fs::path cont_path = prefix.string() + "_continuous.csv";
    const fs::path nsfd_path = prefix.string() + "_nsfd.csv";
    const fs::path euler_path = prefix.string() + "_euler.csv";
    const fs::path summary_path = prefix.string() + "_summary.json";

    const auto e_star = interior_equilibrium(params);
    auto dist = [&](const State& s) {
      return e_star ? distance(s, e_star->state) : std::numeric_limits<double>::quiet_NaN();
    };

    json summary = {{"params", to_json(params)},
                    {"h", s_.h},
                    {"t_end", t_final},
                    {"s0", to_json(s0)},
                    {"equilibrium", e_star ? to_json(e_star->state) : json(nullptr)}};
    {
      auto os = open_output(cont_path);
      os << "k,t,N,P\n";
      double max_d = 0.0;
      for (std::size_t k = 0; k <= steps; ++k) {
        const State& s = reference.states[k * stride];
        write_state_row(os, k, s_.h * double(k), s);
        max_d = std::max(max_d, dist(s));
      }
      summary["continuous"] = {{"terminal_distance", dist(reference.last)}, {"max_distance", max_d}};
    }

    int code = kOk;
    auto discrete = [&](const fs::path& path, const PlanarMap& map, const char* key) {
      std::optional<IterationFailure> failure;
      {
        auto os = open_output(path);
        write_trajectory(os, map, s0, steps, failure);
      }
      const auto traj = iterate(map, s0, steps);
      double max_d = 0.0;
      for (const auto& s : traj.states) max_d = std::max(max_d, dist(s));
      const auto label = simulation_stability_oracle(map, s0, kDefaultTransient, kDefaultSamples, kDefaultClusterTol);
      json entry = {{"terminal_distance", failure ? json(nullptr) : json(dist(traj.last))},
                    {"max_distance", max_d},
                    {"label", label.label()}};
      if (failure) {
        entry["failure_index"] = failure->index;
        code = kNumerical;
      }
      summary[key] = entry;
    };
    discrete(nsfd_path, PlanarMap::nsfd(params, s_.h), "nsfd");
    discrete(euler_path, PlanarMap::euler(params, s_.h), "euler");

    {
      auto os = open_output(summary_path);
      os << summary.dump(2) << '\n';
    }
    json mparams = planar_parameters(s_);
    mparams.erase("scheme");
    mparams["h"] = s_.h;
    mparams["t_end"] = s_.t_end;
    write_manifest(prefix.string() + "_manifest.json", "compare", args_, mparams,
                   {cont_path, nsfd_path, euler_path, summary_path});
    if (code != kOk) err_ << "error: a discrete trajectory became non-finite\n";
    return code;
  }

  int cmd_repro() {
    const std::string name = s_.name.empty() ? "repro-" + utc_timestamp("%Y%m%dT%H%M%SZ") : s_.name;
    const fs::path dir = fs::path(s_.out_dir) / name;
    if (fs::exists(dir)) throw ValidationError("output directory already exists: " + dir.string());
    fs::create_directories(dir);
    const std::string jobs = std::to_string(resolve_jobs(s_.jobs));
    auto p = [&](const char* file) { return (dir / file).string(); };

    std::vector<std::vector<std::string>> runs = {
        // Logistic Euler map: bifurcation in h.
        {"bifurcate", "--scheme", "logistic", "--r", "3", "--k", "50", "--x0", "0.4", "--h-min", "0.1", "--h-max",
         "1.0", "--grid", "181", "--jobs", jobs, "--out", p("fig2_logistic_bifurcation.csv"), "--plot-script",
         p("fig2_logistic_bifurcation.gp")},
        // Phase portraits at h = 0.1.
        {"compare", "--h", "0.1", "--t-end", "500", "--out", p("fig3")},
        // Euler and NSFD bifurcation in h.
        {"bifurcate", "--scheme", "euler", "--h-min", "0.1", "--h-max", "3.0", "--grid", "291", "--jobs", jobs,
         "--out", p("fig4a_euler_bifurcation.csv"), "--plot-script", p("fig4a_euler_bifurcation.gp")},
        {"bifurcate", "--scheme", "nsfd", "--h-min", "0.1", "--h-max", "30", "--grid", "300", "--jobs", jobs,
         "--out", p("fig4b_nsfd_bifurcation.csv"), "--plot-script", p("fig4b_nsfd_bifurcation.gp")},
        // Time series at h = 2 and h = 2.67.
        {"simulate", "--scheme", "nsfd", "--h", "2", "--steps", "200", "--out", p("fig5a_nsfd_h2.csv")},
        {"simulate", "--scheme", "euler", "--h", "2", "--steps", "200", "--out", p("fig5b_euler_h2.csv")},
        {"simulate", "--scheme", "nsfd", "--h", "2.67", "--steps", "200", "--out", p("fig5c_nsfd_h2.67.csv")},
        {"simulate", "--scheme", "euler", "--h", "2.67", "--steps", "200", "--out", p("fig5d_euler_h2.67.csv")},
    };

    for (const auto& run_args : runs) {
      std::ostringstream sink;
      App inner(sink, err_);
      const int code = inner.run(run_args);
      if (code != kOk) {
        err_ << "error: repro step '" << run_args.front() << "' failed with exit code " << code << '\n';
        return code;
      }
    }

    // Continuous logistic solution.
    {
      const ScalarModelParams sp(3.0, 50.0, 1.0);
      const auto traj = integrate_logistic(sp, 0.4, 10.0);
      const fs::path csv = dir / "fig1_logistic_continuous.csv";
      {
        auto os = open_output(csv);
        os << "k,t,x\n";
        for (std::size_t k = 0; k < traj.states.size(); ++k) {
          write_state_row(os, k, traj.time_at(k), traj.states[k]);
        }
      }
      write_series_plot(dir / "fig1_logistic_continuous.gp", {csv}, false, false, "logistic ODE, x(0) = 0.4");
      write_manifest(manifest_path_for(csv), "repro", args_,
                     {{"model", "logistic"}, {"r", 3.0}, {"k", 50.0}, {"x0", 0.4}, {"t_end", 10.0}},
                     {csv, dir / "fig1_logistic_continuous.gp"});
    }
    write_series_plot(dir / "fig3_phase.gp", {dir / "fig3_continuous.csv", dir / "fig3_nsfd.csv", dir / "fig3_euler.csv"},
                      true, true, "phase portraits, h = 0.1");
    write_series_plot(dir / "fig5_series.gp",
                      {dir / "fig5a_nsfd_h2.csv", dir / "fig5b_euler_h2.csv", dir / "fig5c_nsfd_h2.67.csv",
                       dir / "fig5d_euler_h2.67.csv"},
                      true, false, "time series, h = 2 and h = 2.67");

    std::vector<fs::path> outputs;
    for (const auto& entry : fs::directory_iterator(dir)) outputs.push_back(entry.path());
    std::sort(outputs.begin(), outputs.end());
    write_manifest(dir / "manifest.json", "repro", args_, {{"directory", dir.string()}}, outputs);
    out_ << dir.string() << '\n';
    return kOk;
  }

  std::ostream& out_;
  std::ostream& err_;
  Settings s_;
  std::vector<std::string> args_;
};

/// Entry point shared by the executable and the tests.
[[nodiscard]] inline int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  App app(out, err);
  return app.run(std::move(args));
}

}  // namespace dyncons::cli
