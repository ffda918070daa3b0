#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "swpm/io.hpp"
#include "swpm_cli/cli.hpp"

namespace fs = std::filesystem;

namespace {

struct Outcome {
  int code;
  std::string out, err;
};

Outcome invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "swpm");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = swpm::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

fs::path scratch_dir(const char* name) {
  const fs::path p = fs::temp_directory_path() / "swpm_tests" / name;
  fs::remove_all(p);
  fs::create_directories(p);
  return p;
}

}  // namespace

TEST_CASE("exit codes") {
  CHECK(invoke({"--help"}).code == swpm::cli::kOk);
  CHECK(invoke({}).code == swpm::cli::kConfigError);
  CHECK(invoke({"frobnicate"}).code == swpm::cli::kConfigError);
  const Outcome missing = invoke({"run", "--config", "/nonexistent/x.cfg"});
  CHECK(missing.code == swpm::cli::kConfigError);
  CHECK(missing.err.find("config error") != std::string::npos);
  const Outcome unknown = invoke({"run", "--preset", "no-such-preset"});
  CHECK(unknown.code == swpm::cli::kConfigError);
  CHECK(unknown.err.find("formation") != std::string::npos);
  CHECK(invoke({"run", "--preset", "formation-paper"}).code == swpm::cli::kConfigError);
}

TEST_CASE("run from a configuration file") {
  const fs::path dir = scratch_dir("cli_run");
  std::ofstream(dir / "tiny.cfg") << "name = tiny\n"
                                     "grid.x1 = 2\ngrid.y1 = 2\ngrid.h = 1/8\n"
                                     "time.final = 0.25\noutput.times = 0.25\n";
  const Outcome r = invoke({"run", "--config", (dir / "tiny.cfg").string(), "--outdir", dir.string()});
  CHECK(r.code == swpm::cli::kOk);
  CHECK(r.out.find("tiny:") == 0);
  CHECK(fs::exists(dir / "tiny" / "dumps" / "tiny_t_0.25.swpm"));
  CHECK(fs::exists(dir / "tiny" / "series" / "tiny_diagnostics.csv"));
}

TEST_CASE("riemann-debug compares the two solvers") {
  const Outcome r = invoke({"riemann-debug", "--ql", "0.01,0,0", "--qr", "0,0,0", "--ml", "1,1",
                            "--mr", "4,1"});
  CHECK(r.code == swpm::cli::kOk);
  CHECK(r.out.find("f-wave solver") != std::string::npos);
  CHECK(r.out.find("all-shock solution") != std::string::npos);
  CHECK(r.out.find("max |f-wave - exact|") != std::string::npos);
  CHECK(invoke({"riemann-debug", "--ql", "0,0"}).code == swpm::cli::kConfigError);
}

TEST_CASE("rates appends a rate column") {
  const fs::path dir = scratch_dir("cli_rates");
  swpm::write_csv(dir / "e.csv", {{"inv_h", "error"}, {{80, 1.737e-3}, {120, 8.943e-4}}});
  const Outcome r = invoke({"rates", "--errors", (dir / "e.csv").string()});
  CHECK(r.code == swpm::cli::kOk);
  const swpm::CsvTable t = swpm::read_csv(dir / "e.csv");
  REQUIRE(t.columns.size() == 3u);
  CHECK(t.columns[2] == "rate");
  CHECK(std::isnan(t.rows[0][2]));
  CHECK(t.rows[1][2] == doctest::Approx(1.638).epsilon(1e-3));
  swpm::write_csv(dir / "bad.csv", {{"x", "error"}, {{1, 1}, {2, 2}}});
  CHECK(invoke({"rates", "--errors", (dir / "bad.csv").string()}).code == swpm::cli::kConfigError);
}
