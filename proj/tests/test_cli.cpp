// Process-level tests of the command-line tool.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

namespace {

namespace fs = std::filesystem;

struct RunResult {
  int exit_code = -1;
  std::string out;
  std::string err;
};

RunResult run_cli(const std::string& args, const fs::path& dir) {
  const fs::path out_file = dir / "stdout.txt";
  const fs::path err_file = dir / "stderr.txt";
  const std::string cmd = std::string(SIDEWINDER_CLI_PATH) + " " + args + " > " +
                          out_file.string() + " 2> " + err_file.string();
  const int status = std::system(cmd.c_str());
  RunResult r;
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  auto slurp = [](const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
  };
  r.out = slurp(out_file);
  r.err = slurp(err_file);
  return r;
}

std::string slurp_file(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

fs::path fresh_dir(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / "sidewinder_cli_tests" / name;
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

std::vector<std::string> data_rows(const std::string& csv) {
  std::vector<std::string> rows;
  std::istringstream in(csv);
  std::string line;
  std::getline(in, line);  // header
  while (std::getline(in, line)) {
    if (!line.empty()) rows.push_back(line);
  }
  return rows;
}

}  // namespace

TEST_CASE("version subcommand") {
  const fs::path dir = fresh_dir("version");
  const RunResult r = run_cli("version", dir);
  CHECK(r.exit_code == 0);
  CHECK(r.out.rfind("sidewinder ", 0) == 0);
}

TEST_CASE("simulate writes outputs and prints the displacement") {
  const fs::path dir = fresh_dir("simulate");
  const fs::path out = dir / "run";
  const RunResult r = run_cli("simulate --cycles 3 --out " + out.string(), dir);
  CHECK(r.exit_code == 0);
  CHECK(fs::exists(out / "trajectory.csv"));
  CHECK(fs::exists(out / "summary.json"));
  CHECK(fs::exists(out / "effective.cfg"));
  const double bl = std::stod(r.out);
  CHECK(bl > 0.0);
  CHECK(bl < 1.0);
}

TEST_CASE("simulate rejects invalid configuration with exit 2") {
  const fs::path dir = fresh_dir("invalid");
  const RunResult r =
      run_cli("simulate --set model.n_links=1 --out " + (dir / "x").string(), dir);
  CHECK(r.exit_code == 2);
  CHECK(r.err.find("model.n_links") != std::string::npos);
}

TEST_CASE("config file errors carry the line number") {
  const fs::path dir = fresh_dir("badfile");
  const fs::path cfg = dir / "bad.cfg";
  std::ofstream(cfg) << "model.n_links = 30\nmodel.dt = fast\n";
  const RunResult r = run_cli("simulate --config " + cfg.string(), dir);
  CHECK(r.exit_code == 2);
  CHECK(r.err.find("model.dt") != std::string::npos);
  CHECK(r.err.find("line 2") != std::string::npos);
}

TEST_CASE("identical runs produce byte-identical outputs") {
  const fs::path dir = fresh_dir("determinism");
  const RunResult a = run_cli("simulate --cycles 2 --out " + (dir / "a").string(), dir);
  const RunResult b = run_cli("simulate --cycles 2 --out " + (dir / "b").string(), dir);
  REQUIRE(a.exit_code == 0);
  REQUIRE(b.exit_code == 0);
  CHECK(slurp_file(dir / "a" / "trajectory.csv") == slurp_file(dir / "b" / "trajectory.csv"));
  CHECK(slurp_file(dir / "a" / "summary.json") == slurp_file(dir / "b" / "summary.json"));
  CHECK(a.out == b.out);
}

TEST_CASE("gait subcommand emits the signal files") {
  const fs::path dir = fresh_dir("gait");
  const fs::path out = dir / "g";
  const RunResult r = run_cli("gait --mode square --samples 120 --out " + out.string(), dir);
  CHECK(r.exit_code == 0);
  const std::string gait_csv = slurp_file(out / "gait.csv");
  CHECK(gait_csv.rfind("time_s,u1,u2,u3,u4,p1,p2,p3,p4,a1,a2\n", 0) == 0);
  CHECK(data_rows(gait_csv).size() == 120);
  const std::string phase_csv = slurp_file(out / "phase.csv");
  CHECK(phase_csv.rfind("pair1,pair2\n", 0) == 0);
  CHECK(data_rows(phase_csv).size() == 120);

  const RunResult bad = run_cli("gait --samples 4 --out " + (dir / "h").string(), dir);
  CHECK(bad.exit_code == 2);
}

TEST_CASE("sweep runs the grid in enumeration order") {
  const fs::path dir = fresh_dir("sweep");
  const fs::path out = dir / "s";
  const RunResult r = run_cli(
      "sweep --cycles 2 --grid gait.actuator_delay=0.1875,0.375,0.5625 --out " +
          out.string(),
      dir);
  CHECK(r.exit_code == 0);
  const std::string csv = slurp_file(out / "sweep.csv");
  CHECK(csv.rfind("gait.actuator_delay,bl_per_cycle,track_r2,status\n", 0) == 0);
  const std::vector<std::string> rows = data_rows(csv);
  REQUIRE(rows.size() == 3);
  CHECK(rows[0].rfind("0.1875,", 0) == 0);
  CHECK(rows[1].rfind("0.375,", 0) == 0);  // the canonical delay
  CHECK(rows[2].rfind("0.5625,", 0) == 0);
  for (const std::string& row : rows) {
    CHECK(row.find(",ok") != std::string::npos);
  }

  // permuting the grid values permutes the rows, same multiset
  const fs::path out2 = dir / "s2";
  run_cli("sweep --cycles 2 --grid gait.actuator_delay=0.5625,0.1875,0.375 --out " +
              out2.string(),
          dir);
  std::multiset<std::string> first(rows.begin(), rows.end());
  const std::vector<std::string> rows2 = data_rows(slurp_file(out2 / "sweep.csv"));
  std::multiset<std::string> second(rows2.begin(), rows2.end());
  CHECK(first == second);
}

TEST_CASE("sweep rows are independent of the job count") {
  const fs::path dir = fresh_dir("sweep_jobs");
  const std::string grid = "--grid model.amplitude=0.8,1.0,1.2 --grid run.cycles=1,2";
  const RunResult a =
      run_cli("sweep " + grid + " --jobs 1 --out " + (dir / "j1").string(), dir);
  const RunResult b =
      run_cli("sweep " + grid + " --jobs 4 --out " + (dir / "j4").string(), dir);
  REQUIRE(a.exit_code == 0);
  REQUIRE(b.exit_code == 0);
  CHECK(slurp_file(dir / "j1" / "sweep.csv") == slurp_file(dir / "j4" / "sweep.csv"));
}

TEST_CASE("sweep records per-row failures without aborting") {
  const fs::path dir = fresh_dir("sweep_fail");
  const fs::path out = dir / "s";
  const RunResult r = run_cli(
      "sweep --cycles 1 --grid model.n_links=1,30 --out " + out.string(), dir);
  CHECK(r.exit_code == 0);  // one run succeeded
  const std::vector<std::string> rows = data_rows(slurp_file(out / "sweep.csv"));
  REQUIRE(rows.size() == 2);
  CHECK(rows[0].find("error") != std::string::npos);
  CHECK(rows[1].find(",ok") != std::string::npos);
}

TEST_CASE("a one-point sweep matches a plain simulate") {
  const fs::path dir = fresh_dir("sweep_one");
  const RunResult sim =
      run_cli("simulate --cycles 2 --out " + (dir / "sim").string(), dir);
  const RunResult sweep = run_cli(
      "sweep --cycles 2 --grid model.amplitude=1.0 --out " + (dir / "sw").string(), dir);
  REQUIRE(sim.exit_code == 0);
  REQUIRE(sweep.exit_code == 0);
  const std::vector<std::string> rows = data_rows(slurp_file(dir / "sw" / "sweep.csv"));
  REQUIRE(rows.size() == 1);
  std::istringstream cells(rows[0]);
  std::string amplitude, bl;
  std::getline(cells, amplitude, ',');
  std::getline(cells, bl, ',');
  CHECK(std::stod(bl) == doctest::Approx(std::stod(sim.out)).epsilon(1e-12));
}

TEST_CASE("reverse flag flips the gait direction") {
  const fs::path dir = fresh_dir("reverse");
  const RunResult r =
      run_cli("simulate --cycles 2 --reverse --out " + (dir / "r").string(), dir);
  REQUIRE(r.exit_code == 0);
  const std::string cfg = slurp_file(dir / "r" / "effective.cfg");
  CHECK(cfg.find("gait.direction = reversed") != std::string::npos);
}
