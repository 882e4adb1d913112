#include "config.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <vector>

namespace quenchlab {

namespace {

struct KV {
  std::string section, key, value;
  int line = 0;
};

std::string trim(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

[[noreturn]] void fail(int line, const std::string& msg) {
  std::ostringstream os;
  os << "config line " << line << ": " << msg;
  throw ConfigError(os.str());
}

double parse_real(const KV& kv) {
  std::string v = kv.value;
  if (v == "inf" || v == "+inf" || v == "infinity")
    return std::numeric_limits<double>::infinity();
  double out = 0.0;
  const char* b = v.data();
  const char* e = b + v.size();
  auto [p, ec] = std::from_chars(b, e, out);
  if (ec != std::errc{} || p != e)
    fail(kv.line, "value for '" + kv.key + "' is not a number: '" + v + "'");
  return out;
}

std::int64_t parse_int(const KV& kv) {
  std::int64_t out = 0;
  const char* b = kv.value.data();
  const char* e = b + kv.value.size();
  auto [p, ec] = std::from_chars(b, e, out);
  if (ec != std::errc{} || p != e)
    fail(kv.line, "value for '" + kv.key + "' is not an integer: '" + kv.value + "'");
  return out;
}

bool known_section(const std::string& s) {
  return s == "problem" || s == "ic" || s == "grid" || s == "stepping" ||
         s == "analysis" || s == "output";
}

}  // namespace

ExperimentConfig parse_config_text(const std::string& text) {
  std::vector<KV> entries;
  std::string section;
  std::istringstream in(text);
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    std::string s = trim(raw);
    if (s.empty() || s[0] == '#' || s[0] == ';') continue;
    if (s.front() == '[') {
      if (s.back() != ']') fail(line, "unterminated section header");
      section = trim(s.substr(1, s.size() - 2));
      if (!known_section(section)) fail(line, "unknown section [" + section + "]");
      continue;
    }
    std::size_t eq = s.find('=');
    if (eq == std::string::npos) fail(line, "expected 'key = value'");
    std::string key = trim(s.substr(0, eq));
    std::string value = trim(s.substr(eq + 1));
    if (key.empty()) fail(line, "empty key");
    if (value.empty()) fail(line, "empty value for '" + key + "'");
    if (section.empty()) fail(line, "key '" + key + "' appears before any section");
    entries.push_back({section, key, value, line});
  }

  ExperimentConfig cfg;
  // staged problem/profile fields so a builtin seed and explicit keys compose
  double a = cfg.problem.a, p = cfg.problem.p, q = cfg.problem.q, r = cfg.problem.r;
  PhiSpec phi = cfg.problem.phi;
  double phi_m = phi.m;
  bool phi_power = false;
  double c0 = 0.0, c1 = 0.0, c2 = 0.0;
  bool have_c0 = false, have_c1 = false, have_c2 = false;

  // a builtin name seeds problem and profile before any explicit key applies
  const KV* name_kv = nullptr;
  for (const KV& kv : entries)
    if (kv.section == "ic" && kv.key == "name") name_kv = &kv;
  if (name_kv) {
    std::pair<ProblemSpec, InitialCondition> ex;
    if (name_kv->value == "example_A")
      ex = example_A();
    else if (name_kv->value == "example_B")
      ex = example_B();
    else
      fail(name_kv->line, "unknown builtin ic '" + name_kv->value + "'");
    a = ex.first.a;
    p = ex.first.p;
    q = ex.first.q;
    r = ex.first.r;
    phi = ex.first.phi;
    phi_power = phi.kind == PhiKind::power;
    phi_m = phi.m;
    c0 = ex.second.c0;
    c1 = ex.second.c1;
    c2 = ex.second.c2;
    have_c0 = have_c1 = have_c2 = true;
  }

  bool tau_max_set = false;
  for (const KV& kv : entries) {
    const std::string& sec = kv.section;
    const std::string& key = kv.key;
    if (sec == "problem") {
      if (key == "a") a = parse_real(kv);
      else if (key == "p") p = parse_real(kv);
      else if (key == "q") q = parse_real(kv);
      else if (key == "r") r = parse_real(kv);
      else if (key == "phi") {
        if (kv.value == "identity") phi_power = false;
        else if (kv.value == "power") phi_power = true;
        else fail(kv.line, "phi must be 'identity' or 'power'");
      } else if (key == "m") phi_m = parse_real(kv);
      else fail(kv.line, "unknown key '" + key + "' in [problem]");
    } else if (sec == "ic") {
      if (key == "name") continue;  // applied above
      else if (key == "c0") { c0 = parse_real(kv); have_c0 = true; }
      else if (key == "c1") { c1 = parse_real(kv); have_c1 = true; }
      else if (key == "c2") { c2 = parse_real(kv); have_c2 = true; }
      else fail(kv.line, "unknown key '" + key + "' in [ic]");
    } else if (sec == "grid") {
      if (key == "N") cfg.N = static_cast<int>(parse_int(kv));
      else fail(kv.line, "unknown key '" + key + "' in [grid]");
    } else if (sec == "stepping") {
      if (key == "tau0") cfg.tau0 = parse_real(kv);
      else if (key == "tau1") cfg.tau1 = parse_real(kv);
      else if (key == "tau_min") cfg.tau_min = parse_real(kv);
      else if (key == "tau_max") { cfg.tau_max = parse_real(kv); tau_max_set = true; }
      else if (key == "mode") {
        if (kv.value == "adaptive") cfg.mode = StepMode::adaptive;
        else if (kv.value == "fixed") cfg.mode = StepMode::fixed_step;
        else fail(kv.line, "mode must be 'adaptive' or 'fixed'");
      } else if (key == "fixed_tau") cfg.fixed_tau = parse_real(kv);
      else if (key == "max_time") cfg.max_time = parse_real(kv);
      else if (key == "max_steps") cfg.max_steps = parse_int(kv);
      else if (key == "epsilon_quench") cfg.epsilon_quench = parse_real(kv);
      else fail(kv.line, "unknown key '" + key + "' in [stepping]");
    } else if (sec == "analysis") {
      if (key == "window_decades") cfg.window_decades = parse_real(kv);
      else if (key == "conv_tau") cfg.conv_tau = parse_real(kv);
      else if (key == "conv_time") cfg.conv_time = parse_real(kv);
      else if (key == "conv_divisor") cfg.conv_divisor = static_cast<int>(parse_int(kv));
      else fail(kv.line, "unknown key '" + key + "' in [analysis]");
    } else {  // output
      if (key == "output_dir") cfg.output_dir = kv.value;
      else if (key == "sample_stride") cfg.sample_stride = parse_int(kv);
      else fail(kv.line, "unknown key '" + key + "' in [output]");
    }
  }

  try {
    cfg.problem =
        make_problem(a, p, q, r, phi_power ? PhiSpec::power(phi_m) : PhiSpec::identity());
  } catch (const std::exception& e) {
    throw ConfigError(std::string("config: invalid [problem]: ") + e.what());
  }

  if (have_c0 || have_c1 || have_c2) {
    if (!(have_c0 && have_c1 && have_c2))
      throw ConfigError("config: [ic] needs all of c0, c1, c2 (or a builtin name)");
    try {
      cfg.ic = make_ic(c0, c1, c2, cfg.problem.a);
    } catch (const std::exception& e) {
      throw ConfigError(std::string("config: invalid [ic]: ") + e.what());
    }
    cfg.ic_set = true;
  } else {
    throw ConfigError("config: no initial condition ([ic] name or c0, c1, c2)");
  }

  if (!tau_max_set || std::isnan(cfg.tau_max)) cfg.tau_max = 10.0 * cfg.tau0;

  if (cfg.N < 2) throw ConfigError("config: [grid] N must be >= 2");
  if (!(cfg.tau_min > 0.0)) throw ConfigError("config: tau_min must be > 0");
  if (cfg.tau0 < cfg.tau_min || cfg.tau1 < cfg.tau_min)
    throw ConfigError("config: tau0 and tau1 must be >= tau_min");
  if (cfg.tau0 > cfg.tau_max || cfg.tau1 > cfg.tau_max)
    throw ConfigError("config: tau0 and tau1 must be <= tau_max");
  if (cfg.mode == StepMode::fixed_step && !(cfg.fixed_tau > 0.0))
    throw ConfigError("config: fixed mode needs fixed_tau > 0");
  if (!(cfg.epsilon_quench > 0.0) || cfg.epsilon_quench >= 0.5)
    throw ConfigError("config: epsilon_quench must lie in (0, 0.5)");
  if (cfg.sample_stride < 1) throw ConfigError("config: sample_stride must be >= 1");
  if (cfg.max_steps < 1) throw ConfigError("config: max_steps must be >= 1");
  if (!(cfg.max_time > 0.0)) throw ConfigError("config: max_time must be > 0");
  if (!(cfg.window_decades > 0.0))
    throw ConfigError("config: window_decades must be > 0");
  if (cfg.conv_divisor < 0) throw ConfigError("config: conv_divisor must be >= 0");

  return cfg;
}

ExperimentConfig load_config(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw ConfigError("cannot read config file: " + path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return parse_config_text(ss.str());
}

RunConfig to_run_config(const ExperimentConfig& cfg) {
  RunConfig rc;
  rc.problem = cfg.problem;
  rc.ic = cfg.ic;
  rc.N = cfg.N;
  rc.tau0 = cfg.tau0;
  rc.tau1 = cfg.tau1;
  rc.tau_min = cfg.tau_min;
  rc.tau_max = cfg.tau_max;
  rc.epsilon_quench = cfg.epsilon_quench;
  rc.sample_stride = cfg.sample_stride;
  rc.mode = cfg.mode;
  rc.fixed_tau = cfg.fixed_tau;
  rc.max_time = cfg.max_time;
  rc.max_steps = cfg.max_steps;
  return rc;
}

}  // namespace quenchlab
