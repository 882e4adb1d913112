#include "quenchlab.h"

#include <cstring>
#include <new>
#include <string>

#include "core/config.hpp"
#include "core/driver.hpp"

struct qlb_config {
  quenchlab::ExperimentConfig cfg;
};

namespace {

thread_local std::string g_error;

char* dup_string(const std::string& s) {
  char* p = new (std::nothrow) char[s.size() + 1];
  if (!p) return nullptr;
  std::memcpy(p, s.data(), s.size() + 1);
  return p;
}

template <typename Fn>
int guarded(Fn&& fn) {
  try {
    g_error.clear();
    return fn();
  } catch (const quenchlab::ConfigError& e) {
    g_error = e.what();
    return QLB_ERR_CONFIG;
  } catch (const std::exception& e) {
    g_error = e.what();
    return QLB_ERR_RUNTIME;
  } catch (...) {
    g_error = "unknown failure";
    return QLB_ERR_RUNTIME;
  }
}

using Command = quenchlab::CommandResult (*)(const quenchlab::ExperimentConfig&);

int run_command(Command cmd, const qlb_config* cfg, char** out_json) {
  if (out_json) *out_json = nullptr;
  if (!cfg) {
    g_error = "null config handle";
    return QLB_ERR_ARGUMENT;
  }
  return guarded([&] {
    quenchlab::CommandResult res = cmd(cfg->cfg);
    if (out_json) *out_json = dup_string(res.json);
    if (res.status != QLB_OK) g_error = "command reported status " +
                                        std::to_string(res.status) +
                                        "; see the JSON report";
    return res.status;
  });
}

}  // namespace

extern "C" {

int qlb_config_load(const char* path, qlb_config** out) {
  if (!path || !out) {
    g_error = "null argument";
    return QLB_ERR_ARGUMENT;
  }
  *out = nullptr;
  return guarded([&] {
    auto* handle = new qlb_config{quenchlab::load_config(path)};
    *out = handle;
    return QLB_OK;
  });
}

int qlb_config_load_text(const char* text, qlb_config** out) {
  if (!text || !out) {
    g_error = "null argument";
    return QLB_ERR_ARGUMENT;
  }
  *out = nullptr;
  return guarded([&] {
    auto* handle = new qlb_config{quenchlab::parse_config_text(text)};
    *out = handle;
    return QLB_OK;
  });
}

int qlb_config_set_output_dir(qlb_config* cfg, const char* dir) {
  if (!cfg || !dir || !*dir) {
    g_error = "null or empty argument";
    return QLB_ERR_ARGUMENT;
  }
  cfg->cfg.output_dir = dir;
  g_error.clear();
  return QLB_OK;
}

void qlb_config_free(qlb_config* cfg) { delete cfg; }

int qlb_validate_ic(const qlb_config* cfg, char** out_json) {
  return run_command(&quenchlab::cmd_validate_ic, cfg, out_json);
}

int qlb_run(const qlb_config* cfg, char** out_json) {
  return run_command(&quenchlab::cmd_run, cfg, out_json);
}

int qlb_convergence(const qlb_config* cfg, char** out_json) {
  return run_command(&quenchlab::cmd_convergence, cfg, out_json);
}

void qlb_string_free(char* s) { delete[] s; }

const char* qlb_last_error(void) { return g_error.c_str(); }

const char* qlb_version(void) {
#ifdef QLB_VERSION
  return QLB_VERSION;
#else
  return "0.0.0";
#endif
}

}  // extern "C"
