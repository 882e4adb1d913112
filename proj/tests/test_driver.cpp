// Command-layer tests: artifacts on disk, exit statuses, and reproducibility.
#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "core/driver.hpp"
#include "json.hpp"
#include "doctest.h"

using namespace quenchlab;
namespace fs = std::filesystem;
using nlohmann::json;

namespace {

std::string slurp(const fs::path& p) {
  std::ifstream f(p, std::ios::binary);
  REQUIRE(f.good());
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

fs::path fresh_dir(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / name;
  fs::remove_all(dir);
  return dir;
}

// Small quenching configuration: coarse grid, raised floor, dense samples.
ExperimentConfig small_quench_cfg(const std::string& out_dir) {
  ExperimentConfig cfg = parse_config_text(
      "[ic]\nname = example_A\n"
      "[grid]\nN = 9\n"
      "[stepping]\ntau_min = 1e-6\n"
      "[output]\nsample_stride = 50\n");
  cfg.output_dir = out_dir;
  return cfg;
}

}  // namespace

TEST_CASE("validate-ic: compatible profile reports its quench side") {
  ExperimentConfig cfg = parse_config_text("[ic]\nname = example_A\n");
  const CommandResult res = cmd_validate_ic(cfg);
  CHECK(res.status == 0);
  const json j = json::parse(res.json);
  CHECK(j.at("predicted_quench_side") == "right");
  CHECK(j.at("hypotheses_ok") == true);
  CHECK(j.at("compat_right_residual").get<double>() <= 1e-10);
}

TEST_CASE("validate-ic: flat profile fails the hypotheses") {
  // constant admissible profile: both compatibility residuals are O(1)
  ExperimentConfig cfg =
      parse_config_text("[ic]\nc0 = 0.5\nc1 = 0\nc2 = 0\n");
  const CommandResult res = cmd_validate_ic(cfg);
  CHECK(res.status == 2);
  const json j = json::parse(res.json);
  CHECK(j.at("hypotheses_ok") == false);
  CHECK(j.at("predicted_quench_side") == "none");
}

TEST_CASE("run: bounded fixed-step run writes the full artifact set") {
  const fs::path dir = fresh_dir("qlb_run_fixed");
  ExperimentConfig cfg = parse_config_text(
      "[ic]\nname = example_A\n"
      "[grid]\nN = 9\n"
      "[stepping]\nmode = fixed\nfixed_tau = 1e-6\nmax_time = 1e-4\n"
      "[output]\nsample_stride = 10\n");
  cfg.output_dir = dir.string();

  const CommandResult res = cmd_run(cfg);
  CHECK(res.status == 0);

  const json summary = json::parse(res.json);
  CHECK(summary.at("termination") == "max_time");
  CHECK(summary.at("quench").is_null());
  CHECK(summary.at("rate_fit").is_null());  // no quench, no asymptote
  CHECK(summary.at("monotonicity_violations") == 0);
  CHECK(summary.at("interior_sign_violations") == 0);

  for (const char* name :
       {"trajectory.csv", "summary.json", "loglog.csv", "manifest.json"})
    CHECK(fs::exists(dir / name));

  // summary on disk equals the report on stdout
  CHECK(slurp(dir / "summary.json") == res.json);

  const std::string traj = slurp(dir / "trajectory.csv");
  CHECK(traj.rfind("t,u_left,u_right,tau,mass,flux_balance\n", 0) == 0);

  // no fit -> loglog.csv is just its header
  CHECK(slurp(dir / "loglog.csv") == "log_T_minus_t,log_y\n");

  // manifest lists exactly the artifacts next to it
  const json manifest = json::parse(slurp(dir / "manifest.json"));
  for (auto& [key, value] : manifest.at("artifacts").items())
    CHECK(fs::exists(dir / value.get<std::string>()));
  CHECK(manifest.at("config").at("grid").at("N") == 9);
  fs::remove_all(dir);
}

TEST_CASE("run: reruns are byte-identical") {
  const fs::path d1 = fresh_dir("qlb_repro_1");
  const fs::path d2 = fresh_dir("qlb_repro_2");
  ExperimentConfig cfg = parse_config_text(
      "[ic]\nname = example_B\n"
      "[grid]\nN = 9\n"
      "[stepping]\nmode = fixed\nfixed_tau = 1e-6\nmax_time = 5e-5\n"
      "[output]\nsample_stride = 7\n");
  cfg.output_dir = d1.string();
  REQUIRE(cmd_run(cfg).status == 0);
  cfg.output_dir = d2.string();
  REQUIRE(cmd_run(cfg).status == 0);

  CHECK(slurp(d1 / "trajectory.csv") == slurp(d2 / "trajectory.csv"));
  CHECK(slurp(d1 / "loglog.csv") == slurp(d2 / "loglog.csv"));
  CHECK(slurp(d1 / "summary.json") == slurp(d2 / "summary.json"));
  fs::remove_all(d1);
  fs::remove_all(d2);
}

TEST_CASE("run: quenching run reports the quench and the fitted rate") {
  const fs::path dir = fresh_dir("qlb_run_quench");
  const ExperimentConfig cfg = small_quench_cfg(dir.string());
  const CommandResult res = cmd_run(cfg);
  CHECK(res.status == 0);

  const json summary = json::parse(res.json);
  CHECK(summary.at("termination") == "quenched");
  CHECK(summary.at("quench").at("side") == "right");
  CHECK(summary.at("quench").at("T_est").get<double>() > 0.0);
  CHECK(summary.at("bounds").at("T_lower").get<double>() <=
        summary.at("quench").at("T_est").get<double>());

  // the fit exists on this run and the loglog rows match its sample count
  REQUIRE(!summary.at("rate_fit").is_null());
  const int n_points = summary.at("rate_fit").at("n_points").get<int>();
  CHECK(n_points >= 10);
  const std::string loglog = slurp(dir / "loglog.csv");
  int rows = -1;  // discount the header
  for (char c : loglog)
    if (c == '\n') ++rows;
  CHECK(rows == n_points);

  CHECK(summary.at("envelope").at("fraction_satisfied").get<double>() >= 0.0);
  CHECK(summary.at("ic_validation").at("predicted_quench_side") == "right");
  fs::remove_all(dir);
}

TEST_CASE("convergence: configuration gate") {
  ExperimentConfig cfg = parse_config_text("[ic]\nname = example_A\n");
  SUBCASE("missing block") { CHECK(cmd_convergence(cfg).status == 1); }
  SUBCASE("divisor too small for a reference solution") {
    cfg.conv_tau = 1e-6;
    cfg.conv_time = 1e-5;
    cfg.conv_divisor = 2;
    CHECK(cmd_convergence(cfg).status == 1);
  }
  SUBCASE("comparison time not a multiple of the step") {
    cfg.conv_tau = 3e-6;
    cfg.conv_time = 1e-5;
    cfg.conv_divisor = 16;
    CHECK(cmd_convergence(cfg).status == 1);
  }
}

TEST_CASE("convergence: observed order on a short horizon") {
  const fs::path dir = fresh_dir("qlb_conv");
  ExperimentConfig cfg = parse_config_text(
      "[ic]\nname = example_A\n[grid]\nN = 9\n"
      "[analysis]\nconv_tau = 1e-5\nconv_time = 1e-4\nconv_divisor = 16\n");
  cfg.output_dir = dir.string();
  const CommandResult res = cmd_convergence(cfg);
  CHECK(res.status == 0);
  const json j = json::parse(res.json);
  CHECK(j.at("tau") == 1e-5);
  CHECK(j.at("divisor") == 16);
  CHECK(j.at("nodes_used").get<int>() > 0);
  CHECK(std::isfinite(j.at("median_order").get<double>()));
  CHECK(fs::exists(dir / "convergence.json"));
  CHECK(json::parse(slurp(dir / "convergence.json")) == j);
  fs::remove_all(dir);
}

TEST_CASE("convergence: quench before the comparison time is a failure") {
  const fs::path dir = fresh_dir("qlb_conv_quench");
  ExperimentConfig cfg = parse_config_text(
      "[ic]\nname = example_A\n[grid]\nN = 9\n"
      "[analysis]\nconv_tau = 1e-6\nconv_time = 5e-3\nconv_divisor = 16\n");
  cfg.output_dir = dir.string();
  const CommandResult res = cmd_convergence(cfg);
  CHECK(res.status == 3);
  const json j = json::parse(res.json);
  CHECK(j.contains("error"));
  fs::remove_all(dir);
}
