#ifndef CWFT_LIMIT_HPP
#define CWFT_LIMIT_HPP

#include <optional>
#include <string>
#include <vector>

#include "cwft/diagnostics.hpp"
#include "cwft/scenarios.hpp"
#include "cwft/wft.hpp"

namespace cwft {

// rho(eps) = scale * eps^exponent; exponent >= 1 keeps the splitting error
// subordinate to the eps-scalings under test.
struct RhoRule {
  double scale = 5e-3;
  double exponent = 1.0;

  double rho(double eps) const;
  void validate() const;
};

struct SweepConfig {
  std::vector<double> eps_values;  // strictly decreasing
  RhoRule rho_rule;
  double t_final = 1.0;

  void validate() const;
};

struct SweepEntry {
  double eps = 0.0;
  double rho = 0.0;
  double lambda_bar2 = 0.0;
  double consumed_budget = 0.0;
  Profile datum;
  RunResult result;
  bool failed = false;
  std::string error;
};

// Independent runs of the same scenario/perturbation per eps; failures are
// isolated per entry and the sweep continues.
std::vector<SweepEntry> run_sweep(const SweepConfig& sweep,
                                  const ScenarioSpec& scenario,
                                  const PerturbationSpec& perturbation,
                                  const SimConfig& sim_template,
                                  const EosParams& base_params);

struct TvScalingFit {
  bool all_zero = false;
  double exponent = 0.0;
  double residual = 0.0;
};

// Least-squares slope of log TV against log eps. Entries with zero TV make
// the exact-zero case (unperturbed congested side).
TvScalingFit fit_tv_scaling(const std::vector<double>& eps_values,
                            const std::vector<double>& tv_values);

// Reconstruction of the limit solution from free-side traces, per the
// congested-region dynamics: u* constant, interface slope and congested
// pressure from the jump relations with the saturated law.
struct LimitSolution {
  double u_c0 = 0.0;
  std::vector<double> times;
  std::vector<double> p_c;           // congested pressure (single interface)
  std::vector<double> interface_slope;
  // two-interface case
  std::vector<double> p_c1, p_c2, u_c;
};

// Single-interface case. The t = 0 entry is evaluated on the datum's own
// interface-right state (exact); later entries use the trace at
// x_bar(t) + offset.
LimitSolution reconstruct_hard_limit(const RunResult& result,
                                     const Profile& datum, double u_c0,
                                     double offset,
                                     const std::vector<double>& times,
                                     const EosParams& params);

// Two non-interacting interfaces: affine congested pressure between the
// two interface traces and u^c(t) from trapezoidal integration of the
// pressure gradient.
LimitSolution reconstruct_two_interface(const RunResult& result, double u_in_c,
                                        double offset,
                                        const std::vector<double>& times,
                                        const EosParams& params);

struct InterfaceConvergence {
  std::vector<double> sup_distance;  // consecutive eps pairs
  std::vector<double> slope_l1;      // L1 distance of slopes over [0, T]
};

InterfaceConvergence interface_convergence(
    const std::vector<InterfacePath>& paths, double T);

}  // namespace cwft

#endif
