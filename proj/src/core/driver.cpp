#include "driver.hpp"

#include <charconv>
#include <chrono>
#include <cmath>
#include <ctime>
#include <filesystem>
#include <fstream>

#include "json.hpp"

namespace quenchlab {

namespace {

using nlohmann::json;
namespace fs = std::filesystem;

#ifndef QLB_VERSION
#define QLB_VERSION "0.0.0"
#endif

// shortest decimal form that round-trips to the same double
std::string fmt(double v) {
  char buf[32];
  auto [p, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, p);
}

std::string utc_now() {
  std::time_t t =
      std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

void write_file(const fs::path& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open for writing: " + path.string());
  f << content;
  if (!f) throw std::runtime_error("write failed: " + path.string());
}

const char* to_string(Concavity c) {
  switch (c) {
    case Concavity::concave_up: return "concave_up";
    case Concavity::concave_down: return "concave_down";
    case Concavity::mixed: return "mixed";
  }
  return "unknown";
}

bool hypotheses_ok(const ICValidationReport& rep, double tol = 1e-10) {
  if (std::abs(rep.compat_left_residual) > tol) return false;
  if (std::abs(rep.compat_right_residual) > tol) return false;
  if (rep.predicted_quench_side == Side::none) return false;
  if (rep.predicted_quench_side == Side::right && !rep.slope_cond_right_ok)
    return false;
  if (rep.predicted_quench_side == Side::left && !rep.slope_cond_left_ok)
    return false;
  return true;
}

json ic_json(const ICValidationReport& rep) {
  return json{{"compat_left_residual", rep.compat_left_residual},
              {"compat_right_residual", rep.compat_right_residual},
              {"concavity_class", to_string(rep.concavity_class)},
              {"monotone_ok", rep.monotone_ok},
              {"slope_cond_right_ok", rep.slope_cond_right_ok},
              {"slope_cond_left_ok", rep.slope_cond_left_ok},
              {"predicted_quench_side", to_string(rep.predicted_quench_side)},
              {"hypotheses_ok", hypotheses_ok(rep)}};
}

json config_json(const ExperimentConfig& cfg) {
  json problem{{"a", cfg.problem.a}, {"p", cfg.problem.p},    {"q", cfg.problem.q},
               {"r", cfg.problem.r}, {"phi", cfg.problem.phi.kind == PhiKind::power
                                                 ? "power"
                                                 : "identity"}};
  if (cfg.problem.phi.kind == PhiKind::power) problem["m"] = cfg.problem.phi.m;
  return json{
      {"problem", problem},
      {"ic", {{"c0", cfg.ic.c0}, {"c1", cfg.ic.c1}, {"c2", cfg.ic.c2}}},
      {"grid", {{"N", cfg.N}}},
      {"stepping",
       {{"tau0", cfg.tau0},
        {"tau1", cfg.tau1},
        {"tau_min", cfg.tau_min},
        {"tau_max", cfg.tau_max},
        {"mode", cfg.mode == StepMode::fixed_step ? "fixed" : "adaptive"},
        {"fixed_tau", cfg.fixed_tau},
        {"max_time", cfg.max_time},
        {"max_steps", cfg.max_steps},
        {"epsilon_quench", cfg.epsilon_quench}}},
      {"analysis",
       {{"window_decades", cfg.window_decades},
        {"conv_tau", cfg.conv_tau},
        {"conv_time", cfg.conv_time},
        {"conv_divisor", cfg.conv_divisor}}},
      {"output",
       {{"output_dir", cfg.output_dir}, {"sample_stride", cfg.sample_stride}}}};
}

}  // namespace

CommandResult cmd_validate_ic(const ExperimentConfig& cfg) {
  ICValidationReport rep = validate(cfg.ic, cfg.problem);
  CommandResult out;
  out.status = hypotheses_ok(rep) ? 0 : 2;
  out.json = ic_json(rep).dump(2) + "\n";
  return out;
}

CommandResult cmd_run(const ExperimentConfig& cfg) {
  RunResult res = run(to_run_config(cfg));
  const RunRecord& rec = res.record;
  const QuenchReport& qr = res.quench;
  ICValidationReport icrep = validate(cfg.ic, cfg.problem);

  fs::path dir(cfg.output_dir);
  fs::create_directories(dir);

  std::string csv = "t,u_left,u_right,tau,mass,flux_balance\n";
  for (const Sample& s : rec.samples) {
    csv += fmt(s.t);
    csv += ',';
    csv += fmt(s.u_left);
    csv += ',';
    csv += fmt(s.u_right);
    csv += ',';
    csv += fmt(s.tau);
    csv += ',';
    csv += fmt(s.mass);
    csv += ',';
    csv += fmt(s.flux_balance);
    csv += '\n';
  }
  write_file(dir / "trajectory.csv", csv);

  json jq = nullptr, jb = nullptr, jf = nullptr, je = nullptr;
  std::string loglog = "log_T_minus_t,log_y\n";
  if (qr.side != Side::none) {
    jq = json{{"side", to_string(qr.side)},
              {"T_est", qr.T_est},
              {"epsilon", qr.epsilon},
              {"wall_value_at_stop", qr.wall_value_at_stop},
              {"blowup_indicator", qr.blowup_indicator}};
    BoundsReport bounds = lower_bound_T(qr.side, cfg.problem, cfg.ic);
    jb = json{{"side", to_string(bounds.side)},
              {"T_lower", bounds.T_lower},
              {"C_envelope", bounds.C_envelope},
              {"rate_theory", bounds.rate_theory}};
    try {
      RateFit fit = fit_quench_rate(rec, qr, cfg.window_decades);
      jf = json{{"slope", fit.slope},
                {"intercept", fit.intercept},
                {"residual_rms", fit.residual_rms},
                {"window", {{"t_lo", fit.t_lo}, {"t_hi", fit.t_hi}}},
                {"n_points", fit.n_points}};
      EnvelopeReport env = check_envelopes(rec, qr, bounds, fit);
      je = json{{"fraction_satisfied", env.fraction_satisfied},
                {"n_window", env.n_window},
                {"slope_sign_ok", env.slope_sign_ok}};
      for (std::size_t i = 0; i + 1 < rec.samples.size(); ++i) {
        const Sample& s = rec.samples[i];
        double dt = qr.T_est - s.t;
        if (dt < fit.t_lo || dt > fit.t_hi) continue;
        double y = qr.side == Side::right ? 1.0 - s.u_right : s.u_left;
        if (!(y > 0.0)) continue;
        loglog += fmt(std::log(dt));
        loglog += ',';
        loglog += fmt(std::log(y));
        loglog += '\n';
      }
    } catch (const std::runtime_error&) {
      // too few samples inside the window: the fit and envelope stay null
    }
  }
  write_file(dir / "loglog.csv", loglog);

  json summary{{"termination", to_string(rec.termination)},
               {"step_count", rec.step_count},
               {"t_final", res.t_final},
               {"monotonicity_violations", rec.monotonicity_violations},
               {"interior_sign_violations", rec.interior_sign_violations},
               {"quench", jq},
               {"bounds", jb},
               {"rate_fit", jf},
               {"envelope", je},
               {"ic_validation", ic_json(icrep)}};
  write_file(dir / "summary.json", summary.dump(2) + "\n");

  json manifest{{"config", config_json(cfg)},
                {"artifacts",
                 {{"trajectory_csv", "trajectory.csv"},
                  {"summary_json", "summary.json"},
                  {"loglog_csv", "loglog.csv"}}},
                {"created_utc", utc_now()},
                {"version", QLB_VERSION}};
  write_file(dir / "manifest.json", manifest.dump(2) + "\n");

  CommandResult out;
  out.status = rec.termination == Termination::step_floor_stall ? 3 : 0;
  out.json = summary.dump(2) + "\n";
  return out;
}

CommandResult cmd_convergence(const ExperimentConfig& cfg) {
  CommandResult out;
  if (!(cfg.conv_tau > 0.0) || !(cfg.conv_time > 0.0) || cfg.conv_divisor == 0) {
    out.status = 1;
    out.json = json{{"error",
                     "convergence needs [analysis] conv_tau, conv_time, "
                     "conv_divisor"}}.dump(2) + "\n";
    return out;
  }
  if (cfg.conv_divisor < 4) {
    out.status = 1;
    out.json =
        json{{"error", "conv_divisor must be >= 4 (reference step not credibly "
                       "finer)"}}.dump(2) + "\n";
    return out;
  }
  const double t = cfg.conv_time;
  const double n_real = t / cfg.conv_tau;
  const std::int64_t n = std::llround(n_real);
  if (n < 1 || std::abs(n * cfg.conv_tau - t) > 1e-9 * t) {
    out.status = 1;
    out.json = json{{"error",
                     "conv_time must be a whole number of conv_tau steps"}}
                   .dump(2) + "\n";
    return out;
  }

  const double taus[3] = {cfg.conv_tau, cfg.conv_tau / 2.0,
                          cfg.conv_tau / cfg.conv_divisor};
  const std::int64_t steps[3] = {n, 2 * n, n * cfg.conv_divisor};
  std::vector<double> states[3];
  for (int i = 0; i < 3; ++i) {
    RunConfig rc = to_run_config(cfg);
    rc.mode = StepMode::fixed_step;
    rc.fixed_tau = taus[i];
    rc.max_steps = steps[i];
    rc.max_time = std::numeric_limits<double>::infinity();
    rc.sample_stride = steps[i];
    RunResult res = run(rc);
    if (res.record.termination != Termination::max_steps) {
      out.status = 3;
      out.json = json{{"error", "comparison time not reached"},
                      {"termination", to_string(res.record.termination)},
                      {"tau", taus[i]},
                      {"t_final", res.t_final}}.dump(2) + "\n";
      return out;
    }
    states[i] = std::move(res.final_state);
  }

  ConvergenceReport rep;
  try {
    rep = estimate_order(states[0], states[1], states[2]);
  } catch (const std::runtime_error& e) {
    out.status = 3;
    out.json = json{{"error", e.what()}}.dump(2) + "\n";
    return out;
  }

  json jr{{"tau", cfg.conv_tau},
          {"time", cfg.conv_time},
          {"divisor", cfg.conv_divisor},
          {"median_order", rep.median_order},
          {"nodes_used", rep.nodes_used},
          {"per_node_order", rep.per_node_order}};
  fs::path dir(cfg.output_dir);
  fs::create_directories(dir);
  write_file(dir / "convergence.json", jr.dump(2) + "\n");

  out.status = 0;
  out.json = jr.dump(2) + "\n";
  return out;
}

}  // namespace quenchlab
