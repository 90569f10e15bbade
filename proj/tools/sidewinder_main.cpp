#include <atomic>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "sidewinder/io.hpp"
#include "sidewinder/locomotion.hpp"
#include "sidewinder/metrics.hpp"
#include "sidewinder/run_config.hpp"
#include "sidewinder/version.hpp"

namespace {

namespace fs = std::filesystem;
using namespace sidewinder;

constexpr int kExitOk = 0;
constexpr int kExitRuntime = 1;
constexpr int kExitConfig = 2;

struct CommonArgs {
  std::string config_path;
  std::vector<std::string> sets;
  std::string out_dir;
  std::string mode;
  int cycles = 0;
  bool reverse = false;
};

void add_common_options(CLI::App* cmd, CommonArgs* args, bool with_run_flags) {
  cmd->add_option("--config", args->config_path, "configuration file (key = value)");
  cmd->add_option("--set", args->sets, "override KEY=VALUE (repeatable)");
  cmd->add_option("--out", args->out_dir, "output directory");
  cmd->add_option("--mode", args->mode, "signal mode: ideal or square")
      ->check(CLI::IsMember({"ideal", "square"}));
  if (with_run_flags) {
    cmd->add_option("--cycles", args->cycles, "number of gait cycles");
  }
  cmd->add_flag("--reverse", args->reverse, "run the valve sequence in reverse order");
}

ConfigMap load_config(const CommonArgs& args) {
  ConfigMap map;
  if (!args.config_path.empty()) {
    map = ConfigMap::from_file(args.config_path);
  }
  for (const std::string& kv : args.sets) {
    const auto eq = kv.find('=');
    if (eq == std::string::npos || eq == 0) {
      throw ConfigError(kv, 0, "--set expects KEY=VALUE");
    }
    map.set(kv.substr(0, eq), kv.substr(eq + 1));
  }
  if (!args.mode.empty()) map.set("run.mode", args.mode, "--mode");
  if (args.cycles > 0) map.set("run.cycles", std::to_string(args.cycles), "--cycles");
  if (args.reverse) map.set("gait.direction", "reversed", "--reverse");
  if (!args.out_dir.empty()) map.set("run.out_dir", args.out_dir, "--out");
  return map;
}

void write_file(const fs::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << content;
}

int cmd_simulate(const CommonArgs& args, bool with_table) {
  RunConfig cfg;
  try {
    cfg = load_config(args).finalize();
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  }

  try {
    const Trajectory traj = simulate(cfg.model, cfg.gait, cfg.cycles, cfg.mode);
    const RunSummary summary = summarize(traj, cfg.model.body_length);

    fs::create_directories(cfg.out_dir);
    {
      std::ofstream out(fs::path(cfg.out_dir) / "trajectory.csv", std::ios::binary);
      write_trajectory_csv(out, traj);
    }
    write_file(fs::path(cfg.out_dir) / "summary.json", summary_json(summary));
    write_file(fs::path(cfg.out_dir) / "effective.cfg", serialize_config(cfg));

    std::cout << format_double(summary.bl_per_cycle) << "\n";
    if (traj.any_degenerate) {
      std::cerr << "warning: degenerate contact geometry encountered\n";
    }

    if (with_table) {
      RunConfig rev = cfg;
      rev.gait.direction = cfg.gait.direction == Direction::kForward
                               ? Direction::kReversed
                               : Direction::kForward;
      const Trajectory rtraj = simulate(rev.model, rev.gait, rev.cycles, rev.mode);
      const RunSummary rsummary = summarize(rtraj, rev.model.body_length);
      std::vector<TableRow> rows;
      rows.push_back({std::string("kinematic (") + to_string(cfg.mode) + ")",
                      summary.bl_per_cycle, rsummary.bl_per_cycle, true});
      std::cout << format_surface_table(rows);
    }
    return kExitOk;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitRuntime;
  }
}

int cmd_gait(const CommonArgs& args, int samples) {
  RunConfig cfg;
  try {
    cfg = load_config(args).finalize();
    if (samples < 8) {
      throw ConfigError("--samples", 0, "must be >= 8 (got " + std::to_string(samples) + ")");
    }
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  }

  try {
    fs::create_directories(cfg.out_dir);
    std::ostringstream gait_csv;
    write_gait_csv(gait_csv, cfg.gait, cfg.mode, samples);
    write_file(fs::path(cfg.out_dir) / "gait.csv", gait_csv.str());
    std::ostringstream phase_csv;
    write_phase_csv(phase_csv, cfg.gait, cfg.mode, samples);
    write_file(fs::path(cfg.out_dir) / "phase.csv", phase_csv.str());
    return kExitOk;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitRuntime;
  }
}

struct GridAxis {
  std::string key;
  std::vector<std::string> values;
};

std::vector<GridAxis> parse_grid(const std::vector<std::string>& specs) {
  std::vector<GridAxis> axes;
  for (const std::string& spec : specs) {
    const auto eq = spec.find('=');
    if (eq == std::string::npos || eq == 0 || eq + 1 >= spec.size()) {
      throw ConfigError(spec, 0, "--grid expects KEY=V1,V2,...");
    }
    GridAxis axis;
    axis.key = spec.substr(0, eq);
    std::string rest = spec.substr(eq + 1);
    std::istringstream in(rest);
    std::string item;
    while (std::getline(in, item, ',')) {
      if (!item.empty()) axis.values.push_back(item);
    }
    if (axis.values.empty()) throw ConfigError(spec, 0, "--grid has no values");
    axes.push_back(std::move(axis));
  }
  return axes;
}

std::string sanitize_cell(std::string s) {
  for (char& c : s) {
    if (c == ',' || c == '\n' || c == '\r') c = ';';
  }
  return s;
}

int cmd_sweep(const CommonArgs& args, const std::vector<std::string>& grid_specs, int jobs) {
  ConfigMap base;
  std::vector<GridAxis> axes;
  std::string out_dir;
  try {
    base = load_config(args);
    axes = parse_grid(grid_specs);
    if (axes.empty()) throw ConfigError("--grid", 0, "at least one grid axis is required");
    // Validate the base configuration once up front.
    out_dir = base.finalize().out_dir;
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  }

  // Enumerate the grid in row-major order, last axis fastest.
  size_t total = 1;
  for (const GridAxis& axis : axes) total *= axis.values.size();
  std::vector<std::vector<std::string>> points(total);
  for (size_t i = 0; i < total; ++i) {
    size_t rem = i;
    points[i].resize(axes.size());
    for (size_t a = axes.size(); a-- > 0;) {
      points[i][a] = axes[a].values[rem % axes[a].values.size()];
      rem /= axes[a].values.size();
    }
  }

  std::vector<std::string> rows(total);
  std::atomic<size_t> next{0};
  std::atomic<int> ok_count{0};

  auto run_point = [&](size_t i) {
    std::ostringstream row;
    for (const std::string& v : points[i]) row << sanitize_cell(v) << ',';
    try {
      ConfigMap map = base;  // each run works on its own copy
      for (size_t a = 0; a < axes.size(); ++a) {
        map.set(axes[a].key, points[i][a], "--grid");
      }
      const RunConfig cfg = map.finalize();
      const Trajectory traj = simulate(cfg.model, cfg.gait, cfg.cycles, cfg.mode);
      const RunSummary summary = summarize(traj, cfg.model.body_length);
      row << format_double(summary.bl_per_cycle) << ',' << format_double(summary.track_r2)
          << ",ok";
      ok_count++;
    } catch (const std::exception& e) {
      row << ",,error: " << sanitize_cell(e.what());
    }
    rows[i] = row.str();
  };

  jobs = std::max(1, jobs);
  std::vector<std::thread> workers;
  for (int w = 0; w < jobs; ++w) {
    workers.emplace_back([&] {
      for (size_t i = next++; i < total; i = next++) run_point(i);
    });
  }
  for (std::thread& w : workers) w.join();

  std::ostringstream csv;
  for (const GridAxis& axis : axes) csv << sanitize_cell(axis.key) << ',';
  csv << "bl_per_cycle,track_r2,status\n";
  for (const std::string& row : rows) csv << row << '\n';

  try {
    fs::create_directories(out_dir);
    write_file(fs::path(out_dir) / "sweep.csv", csv.str());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitRuntime;
  }

  std::cout << ok_count.load() << " of " << total << " runs succeeded\n";
  return ok_count.load() > 0 ? kExitOk : kExitRuntime;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"sidewinding soft snake kinematic simulator"};
  app.require_subcommand(1);

  CommonArgs sim_args;
  bool sim_table = false;
  CLI::App* sim = app.add_subcommand("simulate", "run the gait and write trajectory outputs");
  add_common_options(sim, &sim_args, true);
  sim->add_flag("--table", sim_table,
                "also run the reversed gait and print a displacement table");

  CommonArgs gait_args;
  int gait_samples = 600;
  CLI::App* gait = app.add_subcommand("gait", "write the actuation signals for one cycle");
  add_common_options(gait, &gait_args, false);
  gait->add_option("--samples", gait_samples, "samples over one cycle (>= 8)");

  CommonArgs sweep_args;
  std::vector<std::string> grid_specs;
  int jobs = 1;
  CLI::App* sweep = app.add_subcommand("sweep", "run a parameter grid and tabulate results");
  add_common_options(sweep, &sweep_args, true);
  sweep->add_option("--grid", grid_specs, "grid axis KEY=V1,V2,... (repeatable)")->required();
  sweep->add_option("--jobs", jobs, "concurrent runs");

  CLI::App* version = app.add_subcommand("version", "print the version");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitConfig;
  }

  if (sim->parsed()) return cmd_simulate(sim_args, sim_table);
  if (gait->parsed()) return cmd_gait(gait_args, gait_samples);
  if (sweep->parsed()) return cmd_sweep(sweep_args, grid_specs, jobs);
  if (version->parsed()) {
    std::cout << "sidewinder " << sidewinder::kVersion << "\n";
    return kExitOk;
  }
  return kExitConfig;
}
