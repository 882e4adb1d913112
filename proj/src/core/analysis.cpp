#include "analysis.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace quenchlab {

double theoretical_rate(Side side, const ProblemSpec& spec) {
  switch (side) {
    case Side::right: return 1.0 / (2.0 * (spec.q + 1.0));
    case Side::left: return 1.0 / (2.0 * (spec.p + 1.0));
    case Side::none: break;
  }
  throw std::invalid_argument("theoretical_rate: side must be left or right");
}

BoundsReport lower_bound_T(Side side, const ProblemSpec& spec,
                           const InitialCondition& ic) {
  BoundsReport rep;
  rep.side = side;
  rep.rate_theory = theoretical_rate(side, spec);
  const double a = spec.a;
  if (side == Side::right) {
    const double e = 2.0 * spec.q + 2.0;
    const double gap = 1.0 - ic.eval(a);
    rep.T_lower = a * std::pow(gap, e) / (2.0 * (spec.q * a + 1.0) * (spec.q + 1.0));
    rep.C_envelope = std::pow((spec.q * a + 1.0) * e / a, 1.0 / e);
  } else {
    const double e = 2.0 * spec.p + 2.0;
    rep.T_lower =
        a * std::pow(ic.eval(0.0), e) / (2.0 * (spec.p * a + 1.0) * (spec.p + 1.0));
    rep.C_envelope = std::pow((spec.p * a + 1.0) * e / a, 1.0 / e);
  }
  return rep;
}

namespace {

// window selection shared by the fit and the envelope check: walk samples
// that precede termination, keep those with T - t inside the last
// `window_decades` decades anchored at the latest retained sample.
struct WindowPoint {
  double dt;  // T - t
  double y;   // wall distance from its singular value
};

std::vector<WindowPoint> fit_window(const RunRecord& rec, const QuenchReport& rep,
                                    double window_decades) {
  std::vector<WindowPoint> pts;
  if (rec.samples.size() < 2) return pts;
  const double T = rep.T_est;
  // drop the final sample: it sits on (or past) the threshold clamp
  for (std::size_t i = 0; i + 1 < rec.samples.size(); ++i) {
    const Sample& s = rec.samples[i];
    double dt = T - s.t;
    double y = rep.side == Side::right ? 1.0 - s.u_right : s.u_left;
    if (dt > 0.0 && y > 0.0) pts.push_back({dt, y});
  }
  if (pts.empty()) return pts;
  const double lo = pts.back().dt;  // latest retained sample anchors the window
  const double hi = lo * std::pow(10.0, window_decades);
  std::vector<WindowPoint> in;
  for (const WindowPoint& p : pts)
    if (p.dt <= hi) in.push_back(p);
  return in;
}

}  // namespace

RateFit fit_quench_rate(const RunRecord& rec, const QuenchReport& rep,
                        double window_decades) {
  if (rep.side == Side::none)
    throw std::invalid_argument("fit_quench_rate: run did not quench");
  std::vector<WindowPoint> pts = fit_window(rec, rep, window_decades);
  if (pts.size() < 10)
    throw std::runtime_error("fit_quench_rate: fewer than 10 samples in window");

  double sx = 0.0, sy = 0.0;
  for (const WindowPoint& p : pts) {
    sx += std::log(p.dt);
    sy += std::log(p.y);
  }
  const double n = static_cast<double>(pts.size());
  const double mx = sx / n, my = sy / n;
  double sxx = 0.0, sxy = 0.0;
  for (const WindowPoint& p : pts) {
    double dx = std::log(p.dt) - mx;
    sxx += dx * dx;
    sxy += dx * (std::log(p.y) - my);
  }
  RateFit fit;
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  double ss = 0.0;
  double dt_min = pts.front().dt, dt_max = pts.front().dt;
  for (const WindowPoint& p : pts) {
    double r = std::log(p.y) - (fit.intercept + fit.slope * std::log(p.dt));
    ss += r * r;
    dt_min = std::min(dt_min, p.dt);
    dt_max = std::max(dt_max, p.dt);
  }
  fit.residual_rms = std::sqrt(ss / n);
  fit.t_lo = dt_min;
  fit.t_hi = dt_max;
  fit.n_points = static_cast<int>(pts.size());
  return fit;
}

EnvelopeReport check_envelopes(const RunRecord& rec, const QuenchReport& rep,
                               const BoundsReport& bounds, const RateFit& fit) {
  if (rep.side == Side::none)
    throw std::invalid_argument("check_envelopes: run did not quench");
  EnvelopeReport out;
  out.slope_sign_ok = fit.slope > 0.0;
  int n = 0, ok = 0;
  for (std::size_t i = 0; i + 1 < rec.samples.size(); ++i) {
    const Sample& s = rec.samples[i];
    double dt = rep.T_est - s.t;
    if (dt < fit.t_lo || dt > fit.t_hi) continue;
    double y = rep.side == Side::right ? 1.0 - s.u_right : s.u_left;
    if (!(y > 0.0)) continue;
    ++n;
    if (y <= bounds.C_envelope * std::pow(dt, bounds.rate_theory)) ++ok;
  }
  out.n_window = n;
  out.fraction_satisfied = n > 0 ? static_cast<double>(ok) / n : 0.0;
  return out;
}

ConvergenceReport estimate_order(const std::vector<double>& v_tau,
                                 const std::vector<double>& v_half,
                                 const std::vector<double>& v_ref) {
  if (v_tau.size() != v_ref.size() || v_half.size() != v_ref.size())
    throw std::invalid_argument("estimate_order: state sizes differ");
  ConvergenceReport rep;
  for (std::size_t i = 0; i < v_ref.size(); ++i) {
    double den = std::abs(v_half[i] - v_ref[i]);
    if (den < 1e-13) continue;  // indeterminate ratio
    double num = std::abs(v_tau[i] - v_ref[i]);
    if (!(num > 0.0)) continue;
    rep.per_node_order.push_back(std::log(num / den) / std::log(2.0));
  }
  if (rep.per_node_order.empty())
    throw std::runtime_error("estimate_order: every node excluded");
  rep.nodes_used = static_cast<int>(rep.per_node_order.size());
  std::vector<double> sorted = rep.per_node_order;
  std::sort(sorted.begin(), sorted.end());
  std::size_t m = sorted.size();
  rep.median_order =
      m % 2 == 1 ? sorted[m / 2] : 0.5 * (sorted[m / 2 - 1] + sorted[m / 2]);
  return rep;
}

}  // namespace quenchlab
