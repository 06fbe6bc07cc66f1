/**
 * @file io.hpp
 * @brief CSV, JSON and gnuplot emission for the dyncons command-line tool.
 *
 * CSV files: one header row, comma separated, '\n' line endings, doubles
 * printed with 17 significant digits. A '#'-prefixed line may only appear as
 * the final line, as a diagnostic.
 */
#pragma once

#include <chrono>
#include <cstdio>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "dyncons/dyncons.hpp"

namespace dyncons::cli {

inline constexpr const char* kToolName = "dyncons";
inline constexpr const char* kToolVersion = "0.1.0";

using json = nlohmann::ordered_json;

[[nodiscard]] inline std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

[[nodiscard]] inline std::ofstream open_output(const std::filesystem::path& path) {
  if (path.has_parent_path()) {
    std::filesystem::create_directories(path.parent_path());
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    throw ValidationError("cannot open output file " + path.string());
  }
  return out;
}

inline void write_state_row(std::ostream& os, std::size_t k, double t, const State& s) {
  os << k << ',' << fmt17(t) << ',' << fmt17(s.n) << ',' << fmt17(s.p) << '\n';
}

inline void write_state_row(std::ostream& os, std::size_t k, double t, double x) {
  os << k << ',' << fmt17(t) << ',' << fmt17(x) << '\n';
}

template <class Point>
[[nodiscard]] constexpr const char* trajectory_header() {
  return std::is_same_v<Point, State> ? "k,t,N,P" : "k,t,x";
}

inline void write_dataset_csv(std::ostream& os, const BifurcationDataset& data) {
  os << "h,component,value,label\n";
  std::size_t row = 0;
  for (const auto& point : data.points) {
    const std::string label = point.outcome.label();
    if (point.outcome.outcome == Outcome::Diverged) {
      os << fmt17(point.h) << ",,," << label << '\n';
      continue;
    }
    while (row < data.rows.size() && data.rows[row].h == point.h) {
      const auto& r = data.rows[row++];
      os << fmt17(r.h) << ',' << to_string(r.component) << ',' << fmt17(r.value) << ',' << label << '\n';
    }
  }
}

[[nodiscard]] inline json to_json(const ModelParams& p) {
  return {{"alpha", p.alpha()}, {"beta", p.beta()}, {"delta", p.delta()}};
}

[[nodiscard]] inline json to_json(const State& s) { return {{"N", s.n}, {"P", s.p}}; }

[[nodiscard]] inline json to_json(const StabilityReport& r) {
  const auto& j = r.jacobian;
  json eig = json::array();
  for (const auto& l : r.eigenvalues) {
    eig.push_back({{"re", l.real()}, {"im", l.imag()}});
  }
  return {
      {"jacobian", {{j.a11, j.a12}, {j.a21, j.a22}}},
      {"eigenvalues", eig},
      {"moduli", {r.moduli[0], r.moduli[1]}},
      {"jury",
       {{"det", r.jury.det},
        {"trace", r.jury.trace},
        {"cond_det", r.jury.cond_det},
        {"cond_flip", r.jury.cond_flip},
        {"cond_fold", r.jury.cond_fold}}},
      {"classification", to_string(r.classification)},
  };
}

[[nodiscard]] inline json to_json(const EulerThreshold& t) {
  return {{"g_euler", t.g_euler},       {"h_euler", t.h_euler}, {"det_bound", t.det_bound},
          {"fold_bound", t.fold_bound}, {"h_max", t.h_max}};
}

[[nodiscard]] inline std::string utc_timestamp(const char* format) {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[64];
  std::strftime(buf, sizeof buf, format, &tm);
  return buf;
}

/// Writes the manifest that accompanies one command's output files.
inline void write_manifest(const std::filesystem::path& path, const std::string& command,
                           const std::vector<std::string>& arguments, json parameters,
                           const std::vector<std::filesystem::path>& outputs) {
  json files = json::array();
  for (const auto& p : outputs) files.push_back(p.string());
  json manifest = {
      {"tool", kToolName},
      {"version", kToolVersion},
      {"command", command},
      {"arguments", arguments},
      {"parameters", std::move(parameters)},
      {"determinism", "no random numbers are used; rerunning with the same arguments reproduces the outputs byte for byte"},
      {"created_utc", utc_timestamp("%Y-%m-%dT%H:%M:%SZ")},
      {"outputs", files},
  };
  auto os = open_output(path);
  os << manifest.dump(2) << '\n';
}

[[nodiscard]] inline std::filesystem::path manifest_path_for(const std::filesystem::path& output) {
  return output.string() + ".manifest.json";
}

/// gnuplot script drawing a bifurcation scatter of one component against h.
inline void write_bifurcation_plot(const std::filesystem::path& script, const std::filesystem::path& csv,
                                   const std::string& component, const std::string& title) {
  auto os = open_output(script);
  std::filesystem::path png = script;
  png.replace_extension(".png");
  os << "# Render with: gnuplot " << script.filename().string() << "\n"
     << "set terminal pngcairo size 900,600\n"
     << "set output '" << png.filename().string() << "'\n"
     << "set datafile separator ','\n"
     << "set key off\n"
     << "set title '" << title << "'\n"
     << "set xlabel 'h'\n"
     << "set ylabel '" << component << "'\n"
     << "plot '" << csv.filename().string() << "' skip 1 using 1:(strcol(2) eq '" << component
     << "' ? $3 : NaN) with points pt 7 ps 0.2\n";
}

/// gnuplot script drawing time series (or a phase portrait) from trajectory CSVs.
inline void write_series_plot(const std::filesystem::path& script, const std::vector<std::filesystem::path>& csvs,
                              bool planar, bool phase, const std::string& title) {
  auto os = open_output(script);
  std::filesystem::path png = script;
  png.replace_extension(".png");
  os << "# Render with: gnuplot " << script.filename().string() << "\n"
     << "set terminal pngcairo size 900,600\n"
     << "set output '" << png.filename().string() << "'\n"
     << "set datafile separator ','\n"
     << "set title '" << title << "'\n";
  if (phase) {
    os << "set xlabel 'N'\nset ylabel 'P'\nplot ";
  } else {
    os << "set xlabel 't'\nset ylabel 'density'\nplot ";
  }
  for (std::size_t i = 0; i < csvs.size(); ++i) {
    const std::string name = csvs[i].filename().string();
    if (i) os << ", \\\n     ";
    if (phase) {
      os << "'" << name << "' skip 1 using 3:4 with lines title '" << csvs[i].stem().string() << "'";
    } else if (planar) {
      os << "'" << name << "' skip 1 using 2:3 with lines title 'N (" << csvs[i].stem().string() << ")', "
         << "'" << name << "' skip 1 using 2:4 with lines title 'P (" << csvs[i].stem().string() << ")'";
    } else {
      os << "'" << name << "' skip 1 using 2:3 with lines title 'x'";
    }
  }
  os << "\n";
}

}  // namespace dyncons::cli
