#include "cwft/eos.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "cwft/numerics.hpp"

namespace cwft {

void EosParams::validate() const {
  if (!(kappa > 0.0)) throw std::invalid_argument("EosParams: kappa must be > 0");
  if (!(eps >= 0.0)) throw std::invalid_argument("EosParams: eps must be >= 0");
  if (!(gamma_i > 1.0))
    throw std::invalid_argument("EosParams: gamma_i must be > 1");
  if (!(gamma_c > 1.0))
    throw std::invalid_argument("EosParams: gamma_c must be > 1");
}

void ClassifierThresholds::validate(double kappa) const {
  if (!(pf_lo > 0.0 && pf_lo < pf_hi && pf_hi < kappa && kappa < pc_lo &&
        pc_lo < pc_hi))
    throw std::invalid_argument(
        "ClassifierThresholds: need 0 < pf_lo < pf_hi < kappa < pc_lo < pc_hi");
}

namespace {

// Both terms of the law evaluated from s = tau - 1; working in s avoids the
// cancellation tau - 1 would suffer next to the asymptote.
double pressure_from_s(double s, const EosParams& prm) {
  return prm.kappa * std::pow(1.0 + s, -prm.gamma_i) +
         prm.eps * std::pow(s, -prm.gamma_c);
}

double pressure_deriv_from_s(double s, const EosParams& prm) {
  return -prm.kappa * prm.gamma_i * std::pow(1.0 + s, -prm.gamma_i - 1.0) -
         prm.eps * prm.gamma_c * std::pow(s, -prm.gamma_c - 1.0);
}

}  // namespace

double pressure(double tau, const EosParams& params) {
  if (params.eps > 0.0) {
    if (!(tau > 1.0))
      throw std::domain_error("pressure: tau must be > 1 for eps > 0");
    return pressure_from_s(tau - 1.0, params);
  }
  if (!(tau >= 1.0))
    throw std::domain_error("pressure: tau must be >= 1 for eps = 0");
  return params.kappa * std::pow(tau, -params.gamma_i);
}

double pressure_deriv(double tau, const EosParams& params) {
  if (params.eps > 0.0) {
    if (!(tau > 1.0))
      throw std::domain_error("pressure_deriv: tau must be > 1 for eps > 0");
    return pressure_deriv_from_s(tau - 1.0, params);
  }
  if (!(tau >= 1.0))
    throw std::domain_error("pressure_deriv: tau must be >= 1 for eps = 0");
  return -params.kappa * params.gamma_i * std::pow(tau, -params.gamma_i - 1.0);
}

double specific_volume(double p, const EosParams& params) {
  if (!(p > 0.0)) throw std::domain_error("specific_volume: p must be > 0");
  if (params.eps == 0.0) {
    if (p >= params.kappa) return 1.0;
    return std::pow(params.kappa / p, 1.0 / params.gamma_i);
  }
  // s_lo makes the singular term alone equal to p, so P(1+s_lo) > p.
  const double s_lo0 = std::pow(params.eps / p, 1.0 / params.gamma_c);
  double s_lo = s_lo0;
  double s_hi = s_lo0;
  int grow = 0;
  while (pressure_from_s(s_hi, params) > p) {
    s_hi *= 2.0;
    if (++grow > 2100)
      throw ConvergenceError("specific_volume: bracket growth failed");
  }
  auto f = [&](double s) { return pressure_from_s(s, params) - p; };
  auto df = [&](double s) { return pressure_deriv_from_s(s, params); };
  double s = bracketed_newton(f, df, s_lo, s_hi, 1e-12,
                              1e-14 * std::max(1.0, p), 200, "specific_volume");
  return 1.0 + s;
}

double specific_volume_deriv(double p, const EosParams& params) {
  if (!(p > 0.0))
    throw std::domain_error("specific_volume_deriv: p must be > 0");
  if (params.eps == 0.0) {
    if (p >= params.kappa)
      throw std::domain_error(
          "specific_volume_deriv: limit law has a kink at p = kappa; "
          "undefined for p >= kappa at eps = 0");
    double tau = std::pow(params.kappa / p, 1.0 / params.gamma_i);
    return 1.0 / (-params.kappa * params.gamma_i *
                  std::pow(tau, -params.gamma_i - 1.0));
  }
  double tau = specific_volume(p, params);
  return 1.0 / pressure_deriv_from_s(tau - 1.0, params);
}

std::pair<double, double> eigenvalues(double p, const EosParams& params) {
  double dtau = specific_volume_deriv(p, params);
  double lam = std::sqrt(-1.0 / dtau);
  return {-lam, lam};
}

StateClass classify(double p, const ClassifierThresholds& thresholds) {
  if (p >= thresholds.pf_lo && p <= thresholds.pf_hi) return StateClass::Free;
  if (p >= thresholds.pc_lo && p <= thresholds.pc_hi)
    return StateClass::Congested;
  return StateClass::Intermediate;
}

double energy_potential(double tau, const EosParams& params) {
  if (params.eps > 0.0 && !(tau > 1.0))
    throw std::domain_error("energy_potential: tau must be > 1 for eps > 0");
  if (!(tau >= 1.0)) throw std::domain_error("energy_potential: tau must be >= 1");
  double gi = params.gamma_i, gc = params.gamma_c;
  double iso = params.kappa / (gi - 1.0) *
               (std::pow(tau, 1.0 - gi) - std::pow(2.0, 1.0 - gi));
  double sing = 0.0;
  if (params.eps > 0.0)
    sing = params.eps / (gc - 1.0) * (std::pow(tau - 1.0, 1.0 - gc) - 1.0);
  return iso + sing;
}

}  // namespace cwft
