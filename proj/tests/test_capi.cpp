// Exercises the shared library strictly through the C header: status codes,
// report strings, error text, and artifact side effects.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cstring>
#include <filesystem>
#include <string>

#include "doctest.h"
#include "quenchlab.h"

namespace fs = std::filesystem;

namespace {

const char* kExampleA = "[ic]\nname = example_A\n";

struct ConfigHandle {
  qlb_config* cfg = nullptr;
  ~ConfigHandle() { qlb_config_free(cfg); }
};

struct JsonOut {
  char* s = nullptr;
  ~JsonOut() { qlb_string_free(s); }
  std::string str() const { return s ? std::string(s) : std::string(); }
};

}  // namespace

TEST_CASE("capi: version string") {
  CHECK(std::strcmp(qlb_version(), "1.0.0") == 0);
}

TEST_CASE("capi: load text, validate, and read the report") {
  ConfigHandle h;
  REQUIRE(qlb_config_load_text(kExampleA, &h.cfg) == QLB_OK);
  REQUIRE(h.cfg != nullptr);
  CHECK(std::string(qlb_last_error()).empty());

  JsonOut out;
  CHECK(qlb_validate_ic(h.cfg, &out.s) == QLB_OK);
  REQUIRE(out.s != nullptr);
  CHECK(out.str().find("\"predicted_quench_side\": \"right\"") !=
        std::string::npos);
}

TEST_CASE("capi: malformed text is a config error with a located message") {
  ConfigHandle h;
  CHECK(qlb_config_load_text("[grid]\nN = many\n", &h.cfg) == QLB_ERR_CONFIG);
  CHECK(h.cfg == nullptr);
  CHECK(std::string(qlb_last_error()).find("line") != std::string::npos);
}

TEST_CASE("capi: missing file is a config error") {
  ConfigHandle h;
  CHECK(qlb_config_load("/no/such/file.cfg", &h.cfg) == QLB_ERR_CONFIG);
  CHECK(std::string(qlb_last_error()).find("cannot read") != std::string::npos);
}

TEST_CASE("capi: hypothesis failure surfaces as status 2") {
  ConfigHandle h;
  REQUIRE(qlb_config_load_text("[ic]\nc0 = 0.5\nc1 = 0\nc2 = 0\n", &h.cfg) ==
          QLB_OK);
  JsonOut out;
  CHECK(qlb_validate_ic(h.cfg, &out.s) == QLB_ERR_HYPOTHESIS);
  REQUIRE(out.s != nullptr);  // the report is still produced
  CHECK(out.str().find("\"hypotheses_ok\": false") != std::string::npos);
  CHECK(!std::string(qlb_last_error()).empty());
}

TEST_CASE("capi: null arguments") {
  CHECK(qlb_config_load_text(nullptr, nullptr) == QLB_ERR_ARGUMENT);
  CHECK(qlb_validate_ic(nullptr, nullptr) == QLB_ERR_ARGUMENT);
  CHECK(qlb_run(nullptr, nullptr) == QLB_ERR_ARGUMENT);
  CHECK(qlb_convergence(nullptr, nullptr) == QLB_ERR_ARGUMENT);
  ConfigHandle h;
  CHECK(qlb_config_load_text(kExampleA, nullptr) == QLB_ERR_ARGUMENT);
  CHECK(qlb_config_set_output_dir(nullptr, "x") == QLB_ERR_ARGUMENT);
  qlb_config_free(nullptr);  // must be a no-op
  qlb_string_free(nullptr);  // must be a no-op
}

TEST_CASE("capi: run writes artifacts into the overridden directory") {
  const fs::path dir = fs::temp_directory_path() / "qlb_capi_run";
  fs::remove_all(dir);

  ConfigHandle h;
  REQUIRE(qlb_config_load_text(
              "[ic]\nname = example_A\n[grid]\nN = 9\n"
              "[stepping]\nmode = fixed\nfixed_tau = 1e-6\nmax_time = 1e-4\n"
              "[output]\nsample_stride = 10\n",
              &h.cfg) == QLB_OK);
  REQUIRE(qlb_config_set_output_dir(h.cfg, dir.string().c_str()) == QLB_OK);

  JsonOut out;
  CHECK(qlb_run(h.cfg, &out.s) == QLB_OK);
  REQUIRE(out.s != nullptr);
  CHECK(out.str().find("\"termination\": \"max_time\"") != std::string::npos);
  for (const char* name :
       {"trajectory.csv", "summary.json", "loglog.csv", "manifest.json"})
    CHECK(fs::exists(dir / name));
  fs::remove_all(dir);
}

TEST_CASE("capi: convergence status codes pass through") {
  ConfigHandle h;
  REQUIRE(qlb_config_load_text(kExampleA, &h.cfg) == QLB_OK);
  JsonOut out;
  CHECK(qlb_convergence(h.cfg, &out.s) == QLB_ERR_CONFIG);  // no block
  REQUIRE(out.s != nullptr);
  CHECK(out.str().find("error") != std::string::npos);
}
