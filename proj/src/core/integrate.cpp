#include "integrate.hpp"

#include <algorithm>
#include <cmath>

namespace quenchlab {

double adapt_tau(const StepController& ctrl) {
  double mn = std::numeric_limits<double>::infinity();
  const std::size_t n = ctrl.d_k.size();
  for (std::size_t i = 0; i < n; ++i) {
    double a = ctrl.d_km1[i] - ctrl.d_km2[i];
    double b = ctrl.d_k[i] - ctrl.d_km1[i];
    mn = std::min(mn, a * a - b * b);
  }
  double rad = ctrl.tau_prev * ctrl.tau_prev + mn;
  double tau = rad <= 0.0 ? ctrl.tau_min : std::sqrt(rad);
  return std::clamp(tau, ctrl.tau_min, ctrl.tau_max);
}

namespace {

// wall-exit classification for a trial state; Side::none means both walls
// stayed interior
Side wall_exit(const std::vector<double>& v) {
  double lo = v.front(), hi = v.back();
  bool left = !(lo > 0.0), right = !(hi < 1.0);
  if (left && right) return -lo >= hi - 1.0 ? Side::left : Side::right;
  if (left) return Side::left;
  if (right) return Side::right;
  return Side::none;
}

}  // namespace

StepOutcome step_with(const std::vector<double>& v, const std::vector<double>& F_v,
                      double tau, const ProblemSpec& spec, const Grid& g, RhsFn f,
                      std::vector<double>& scratch_pred,
                      std::vector<double>& scratch_F, std::vector<double>& out) {
  const std::size_t n = v.size();
  const double mu = tau / (2.0 * g.h * g.h);

  scratch_pred.resize(n);
  for (std::size_t i = 0; i < n; ++i) scratch_pred[i] = v[i] + 2.0 * mu * F_v[i];
  switch (wall_exit(scratch_pred)) {
    case Side::left: out = scratch_pred; return StepOutcome::reject_left;
    case Side::right: out = scratch_pred; return StepOutcome::reject_right;
    case Side::none: break;
  }

  if (!f(scratch_pred, spec, g, scratch_F)) return StepOutcome::reject_nonfinite;

  out.resize(n);
  for (std::size_t i = 0; i < n; ++i)
    out[i] = v[i] + mu * (scratch_F[i] + F_v[i]);
  switch (wall_exit(out)) {
    case Side::left: return StepOutcome::reject_left;
    case Side::right: return StepOutcome::reject_right;
    case Side::none: break;
  }
  for (std::size_t i = 0; i < n; ++i)
    if (!std::isfinite(out[i])) return StepOutcome::reject_nonfinite;
  return StepOutcome::ok;
}

StepOutcome step(const std::vector<double>& v, const std::vector<double>& F_v,
                 double tau, const ProblemSpec& spec, const Grid& g,
                 std::vector<double>& scratch_pred, std::vector<double>& scratch_F,
                 std::vector<double>& out) {
  return step_with(v, F_v, tau, spec, g, &rhs, scratch_pred, scratch_F, out);
}

Side detect_quench(const std::vector<double>& u, double epsilon) {
  double lo = u.front(), hi = u.back();
  bool left = lo <= epsilon, right = hi >= 1.0 - epsilon;
  if (left && right) {
    double dl = (epsilon - lo) / epsilon;
    double dr = (hi - (1.0 - epsilon)) / epsilon;
    return dl >= dr ? Side::left : Side::right;
  }
  if (left) return Side::left;
  if (right) return Side::right;
  return Side::none;
}

RunResult run(const RunConfig& cfg) {
  RunResult res;
  const Grid g = build_grid(cfg.problem.a, cfg.N);
  const double h2 = g.h * g.h;
  const std::size_t n = g.nodes.size();
  const bool fixed = cfg.mode == StepMode::fixed_step;
  const double tau_floor = fixed ? cfg.fixed_tau : cfg.tau_min;

  std::vector<double> u(n);
  for (std::size_t j = 0; j < n; ++j) u[j] = cfg.ic.eval(g.nodes[j]);

  // expected interior du/dt sign from the profile's concavity (0 = unaudited)
  const int expect_sign = cfg.ic.c2 > 0.0 ? 1 : (cfg.ic.c2 < 0.0 ? -1 : 0);

  StepController ctrl;
  ctrl.tau_min = cfg.tau_min;
  ctrl.tau_max = cfg.tau_max;
  ctrl.mode = cfg.mode;
  ctrl.d_km2.assign(n, 0.0);
  ctrl.d_km1.assign(n, 0.0);
  ctrl.d_k.assign(n, 0.0);

  std::vector<double> F(n), d(n), pred(n), Fs(n), trial(n);
  RunRecord& rec = res.record;
  QuenchReport& rep = res.quench;
  rep.epsilon = cfg.epsilon_quench;

  double t = 0.0;
  double tau_prev = 0.0;
  bool done = false;

  auto push_sample = [&](double tau_col) {
    Sample s;
    s.t = t;
    s.u_left = u.front();
    s.u_right = u.back();
    s.tau = tau_col;
    s.mass = mass(u, cfg.problem, g);
    s.flux_balance = flux_balance(u, cfg.problem);
    s.d_left = d.front();
    s.d_right = d.back();
    rec.samples.push_back(s);
  };

  while (!done) {
    if (!rhs(u, cfg.problem, g, F)) {
      // accepted states stay interior, so this only fires on a degenerate IC
      rec.termination = Termination::step_floor_stall;
      break;
    }
    for (std::size_t i = 0; i < n; ++i) d[i] = F[i] / h2;
    ctrl.d_k = d;

    // audits over the accepted state
    for (std::size_t j = 0; j + 1 < n; ++j)
      if (!(u[j + 1] > u[j])) ++rec.monotonicity_violations;
    if (expect_sign != 0)
      for (std::size_t i = 1; i + 1 < n; ++i)
        if ((expect_sign > 0 && d[i] <= 0.0) || (expect_sign < 0 && d[i] >= 0.0))
          ++rec.interior_sign_violations;

    if (rec.step_count % cfg.sample_stride == 0)
      push_sample(rec.step_count == 0 ? (fixed ? cfg.fixed_tau : cfg.tau0) : tau_prev);

    Side hit = detect_quench(u, cfg.epsilon_quench);
    if (hit != Side::none) {
      rec.termination = Termination::quenched;
      rep.side = hit;
      rep.T_est = t;
      rep.wall_value_at_stop = hit == Side::left ? u.front() : u.back();
      break;
    }
    if (t >= cfg.max_time) {
      rec.termination = Termination::max_time;
      break;
    }
    if (rec.step_count >= cfg.max_steps) {
      rec.termination = Termination::max_steps;
      break;
    }

    double tau;
    if (fixed)
      tau = cfg.fixed_tau;
    else if (rec.step_count == 0)
      tau = cfg.tau0;
    else if (rec.step_count == 1)
      tau = cfg.tau1;
    else
      tau = adapt_tau(ctrl);

    // attempt/reject loop: halve toward the floor, classifying a floor-level
    // wall exit as the quench arriving inside one smallest step
    for (;;) {
      StepOutcome out = step(u, F, tau, cfg.problem, g, pred, Fs, trial);
      if (out == StepOutcome::ok) break;
      bool at_floor = fixed || tau <= cfg.tau_min * (1.0 + 1e-12);
      if (at_floor) {
        if (out == StepOutcome::reject_left || out == StepOutcome::reject_right) {
          rec.termination = Termination::quenched;
          rep.side = out == StepOutcome::reject_left ? Side::left : Side::right;
          rep.T_est = t + tau_floor;
          rep.wall_value_at_stop =
              rep.side == Side::left ? trial.front() : trial.back();
        } else {
          rec.termination = Termination::step_floor_stall;
        }
        done = true;
        break;
      }
      tau = std::max(tau / 2.0, cfg.tau_min);
    }
    if (done) break;

    double dw = std::max(std::abs(trial.front() - u.front()),
                         std::abs(trial.back() - u.back()));
    u.swap(trial);
    t += tau;
    ctrl.tau_prev2 = ctrl.tau_prev;
    ctrl.tau_prev = tau;
    tau_prev = tau;
    // history shift: d (the state just stepped from) becomes d^{k-1} for the
    // next selection; d^k is refreshed at the top of the next iteration
    ctrl.d_km2.swap(ctrl.d_km1);
    ctrl.d_km1 = d;
    if (ctrl.warm < 3) ++ctrl.warm;
    ++rec.step_count;

    if (!fixed && tau <= cfg.tau_min * (1.0 + 1e-12) && dw < 1e-14) {
      rec.termination = Termination::step_floor_stall;
      break;
    }
  }

  // terminal sample: the last accepted state, unless it is already recorded
  if (rhs(u, cfg.problem, g, F)) {
    for (std::size_t i = 0; i < n; ++i) d[i] = F[i] / h2;
    if (rec.samples.empty() || rec.samples.back().t < t) push_sample(tau_prev);
  }

  if (rep.side != Side::none) {
    double peak = 0.0;
    std::size_t m = rec.samples.size();
    for (std::size_t i = m > 10 ? m - 10 : 0; i < m; ++i) {
      const Sample& s = rec.samples[i];
      peak = std::max(peak, std::abs(rep.side == Side::left ? s.d_left : s.d_right));
    }
    rep.blowup_indicator = peak;
  }

  res.final_state = std::move(u);
  res.t_final = t;
  return res;
}

const char* to_string(Termination t) {
  switch (t) {
    case Termination::quenched: return "quenched";
    case Termination::max_time: return "max_time";
    case Termination::max_steps: return "max_steps";
    case Termination::step_floor_stall: return "step_floor_stall";
  }
  return "unknown";
}

const char* to_string(Side s) {
  switch (s) {
    case Side::left: return "left";
    case Side::right: return "right";
    case Side::none: return "none";
  }
  return "unknown";
}

}  // namespace quenchlab
