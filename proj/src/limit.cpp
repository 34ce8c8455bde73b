#include "cwft/limit.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "cwft/numerics.hpp"

namespace cwft {

double RhoRule::rho(double eps) const {
  return scale * std::pow(eps, exponent);
}

void RhoRule::validate() const {
  if (!(scale > 0.0)) throw std::invalid_argument("RhoRule: scale must be > 0");
  if (!(exponent >= 1.0))
    throw std::invalid_argument(
        "RhoRule: exponent must be >= 1 so rho(eps) vanishes at least as "
        "fast as eps");
}

void SweepConfig::validate() const {
  rho_rule.validate();
  if (eps_values.size() < 1)
    throw std::invalid_argument("SweepConfig: eps_values must be nonempty");
  for (std::size_t i = 0; i < eps_values.size(); ++i) {
    if (!(eps_values[i] > 0.0))
      throw std::invalid_argument("SweepConfig: eps values must be > 0");
    if (i > 0 && !(eps_values[i] < eps_values[i - 1]))
      throw std::invalid_argument(
          "SweepConfig: eps values must be strictly decreasing");
  }
  if (!(t_final > 0.0))
    throw std::invalid_argument("SweepConfig: t_final must be > 0");
}

std::vector<SweepEntry> run_sweep(const SweepConfig& sweep,
                                  const ScenarioSpec& scenario,
                                  const PerturbationSpec& perturbation,
                                  const SimConfig& sim_template,
                                  const EosParams& base_params) {
  sweep.validate();
  std::vector<SweepEntry> entries;
  for (double eps : sweep.eps_values) {
    SweepEntry entry;
    entry.eps = eps;
    entry.rho = sweep.rho_rule.rho(eps);
    try {
      EosParams params = base_params;
      params.eps = eps;
      ScenarioProfile ref = build_scenario(scenario, eps, params);
      entry.lambda_bar2 = ref.lambda_bar2;
      if (perturbation.empty()) {
        entry.datum = ref.profile;
        entry.consumed_budget = 0.0;
      } else {
        PerturbedDatum pd = perturb(ref, perturbation, scenario.delta, params);
        entry.datum = std::move(pd.profile);
        entry.consumed_budget = pd.consumed_budget;
      }
      SimConfig sim = sim_template;
      sim.rho = entry.rho;
      sim.t_final = sweep.t_final;
      entry.result = run(entry.datum, ref.interface_xs, sim, params);
    } catch (const std::exception& e) {
      entry.failed = true;
      entry.error = e.what();
    }
    entries.push_back(std::move(entry));
  }
  return entries;
}

TvScalingFit fit_tv_scaling(const std::vector<double>& eps_values,
                            const std::vector<double>& tv_values) {
  if (eps_values.size() != tv_values.size() || eps_values.size() < 4)
    throw std::invalid_argument("fit_tv_scaling: need >= 4 matching points");
  TvScalingFit out;
  std::vector<double> lx, ly;
  for (std::size_t i = 0; i < eps_values.size(); ++i) {
    if (tv_values[i] <= 0.0) continue;
    lx.push_back(std::log(eps_values[i]));
    ly.push_back(std::log(tv_values[i]));
  }
  if (lx.empty()) {
    out.all_zero = true;
    return out;
  }
  if (lx.size() < 4)
    throw std::invalid_argument(
        "fit_tv_scaling: fewer than 4 nonzero TV values");
  LinearFit fit = fit_line(lx, ly);
  out.exponent = fit.slope;
  out.residual = fit.residual;
  return out;
}

namespace {

double limit_tau(double p, const EosParams& params) {
  EosParams lim = params;
  lim.eps = 0.0;
  return specific_volume(p, lim);
}

}  // namespace

LimitSolution reconstruct_hard_limit(const RunResult& result,
                                     const Profile& datum, double u_c0,
                                     double offset,
                                     const std::vector<double>& times,
                                     const EosParams& params) {
  if (result.interface_paths.size() != 1)
    throw std::invalid_argument(
        "reconstruct_hard_limit: expected a single interface path");
  const InterfacePath& path = result.interface_paths[0];
  auto pieces = trace_pieces(result, path, offset, params);

  LimitSolution sol;
  sol.u_c0 = u_c0;
  for (double t : times) {
    State tr;
    if (t <= 0.0) {
      // exact one-sided limit at the interface from the datum itself
      double x0 = path.points.front().second;
      tr = datum.value_at(x0);
    } else {
      std::size_t i = 0;
      while (i + 1 < pieces.size() && pieces[i + 1].t <= t) ++i;
      tr = pieces[i].state;
    }
    double tau = limit_tau(tr.p, params);
    if (!(tau > 1.0 + 1e-14))
      throw std::domain_error(
          "reconstruct_hard_limit: degenerate free-side trace, tau = 1");
    double du = u_c0 - tr.u;
    sol.times.push_back(t);
    sol.interface_slope.push_back(du / (tau - 1.0));
    sol.p_c.push_back(tr.p + du * du / (tau - 1.0));
  }
  return sol;
}

LimitSolution reconstruct_two_interface(const RunResult& result, double u_in_c,
                                        double offset,
                                        const std::vector<double>& times,
                                        const EosParams& params) {
  if (result.interface_paths.size() != 2)
    throw std::invalid_argument(
        "reconstruct_two_interface: expected two interface paths");
  const InterfacePath& left = result.interface_paths[0];
  const InterfacePath& right = result.interface_paths[1];
  auto left_pieces = trace_pieces(result, left, -offset, params);
  auto right_pieces = trace_pieces(result, right, offset, params);
  auto at = [](const std::vector<TracePiece>& pieces, double t) {
    std::size_t i = 0;
    while (i + 1 < pieces.size() && pieces[i + 1].t <= t) ++i;
    return pieces[i].state;
  };

  LimitSolution sol;
  sol.u_c0 = u_in_c;
  double uc = u_in_c;
  for (std::size_t k = 0; k < times.size(); ++k) {
    double t = times[k];
    State lo = at(left_pieces, t);
    State ro = at(right_pieces, t);
    double tau_l = limit_tau(lo.p, params);
    double tau_r = limit_tau(ro.p, params);
    if (!(tau_l > 1.0 + 1e-14 && tau_r > 1.0 + 1e-14))
      throw std::domain_error(
          "reconstruct_two_interface: degenerate outer trace");
    auto pc_pair = [&](double u_mid) {
      double pc1 = lo.p + (u_mid - lo.u) * (u_mid - lo.u) / (tau_l - 1.0);
      double pc2 = ro.p + (ro.u - u_mid) * (ro.u - u_mid) / (tau_r - 1.0);
      return std::pair<double, double>{pc1, pc2};
    };
    if (k > 0) {
      double dt = times[k] - times[k - 1];
      double width_prev = right.position(times[k - 1]) -
                          left.position(times[k - 1]);
      double width_now = right.position(t) - left.position(t);
      double f_prev = (sol.p_c2.back() - sol.p_c1.back()) / width_prev;
      // trapezoidal step with one corrector pass
      double uc_pred = uc - dt * f_prev;
      auto [pc1p, pc2p] = pc_pair(uc_pred);
      double f_pred = (pc2p - pc1p) / width_now;
      uc = uc - 0.5 * dt * (f_prev + f_pred);
    }
    auto [pc1, pc2] = pc_pair(uc);
    sol.times.push_back(t);
    sol.u_c.push_back(uc);
    sol.p_c1.push_back(pc1);
    sol.p_c2.push_back(pc2);
  }
  return sol;
}

InterfaceConvergence interface_convergence(
    const std::vector<InterfacePath>& paths, double T) {
  InterfaceConvergence out;
  for (std::size_t k = 0; k + 1 < paths.size(); ++k) {
    const InterfacePath& a = paths[k];
    const InterfacePath& b = paths[k + 1];
    std::vector<double> knots{0.0, T};
    for (const auto& pt : a.points)
      if (pt.first > 0.0 && pt.first < T) knots.push_back(pt.first);
    for (const auto& pt : b.points)
      if (pt.first > 0.0 && pt.first < T) knots.push_back(pt.first);
    std::sort(knots.begin(), knots.end());
    knots.erase(std::unique(knots.begin(), knots.end()), knots.end());
    double sup = 0.0;
    double l1 = 0.0;
    for (std::size_t i = 0; i < knots.size(); ++i) {
      sup = std::max(sup,
                     std::abs(a.position(knots[i]) - b.position(knots[i])));
      if (i + 1 < knots.size()) {
        double tm = 0.5 * (knots[i] + knots[i + 1]);
        l1 += std::abs(a.slope(tm) - b.slope(tm)) * (knots[i + 1] - knots[i]);
      }
    }
    out.sup_distance.push_back(sup);
    out.slope_l1.push_back(l1);
  }
  return out;
}

}  // namespace cwft
