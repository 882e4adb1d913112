// Command-line front end; talks to the solver exclusively through the
// shared library's C interface.
#include <cstdio>
#include <string>

#include "CLI11.hpp"
#include "quenchlab.h"

namespace {

int run_command(const std::string& config_path, const std::string& output_dir,
                int (*cmd)(const qlb_config*, char**)) {
  qlb_config* cfg = nullptr;
  int rc = qlb_config_load(config_path.c_str(), &cfg);
  if (rc != QLB_OK) {
    std::fprintf(stderr, "error: %s\n", qlb_last_error());
    return rc;
  }
  if (!output_dir.empty()) {
    rc = qlb_config_set_output_dir(cfg, output_dir.c_str());
    if (rc != QLB_OK) {
      std::fprintf(stderr, "error: %s\n", qlb_last_error());
      qlb_config_free(cfg);
      return rc;
    }
  }
  char* json = nullptr;
  rc = cmd(cfg, &json);
  if (json) {
    std::fputs(json, stdout);
    qlb_string_free(json);
  } else if (rc != QLB_OK) {
    std::fprintf(stderr, "error: %s\n", qlb_last_error());
  }
  qlb_config_free(cfg);
  return rc;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{std::string("quench — finite-difference laboratory for singular "
                           "boundary-flux diffusion (v") +
               qlb_version() + ")"};
  app.require_subcommand(1);

  std::string config_path, output_dir;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--config", config_path, "configuration file")
        ->required()
        ->check(CLI::ExistingFile);
    sub->add_option("--output-dir", output_dir, "artifact directory override");
  };

  CLI::App* validate =
      app.add_subcommand("validate-ic", "check the initial profile hypotheses");
  CLI::App* runcmd =
      app.add_subcommand("run", "integrate the experiment and write artifacts");
  CLI::App* conv = app.add_subcommand(
      "convergence", "observed temporal order from three fixed-step runs");
  add_common(validate);
  add_common(runcmd);
  add_common(conv);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    // usage problems map onto the config slot of the exit contract
    return code == 0 ? 0 : QLB_ERR_CONFIG;
  }

  if (validate->parsed())
    return run_command(config_path, output_dir, &qlb_validate_ic);
  if (runcmd->parsed()) return run_command(config_path, output_dir, &qlb_run);
  return run_command(config_path, output_dir, &qlb_convergence);
}
