#ifndef CWFT_EOS_HPP
#define CWFT_EOS_HPP

#include <utility>

namespace cwft {

// Parameters of the singular pressure law
//   P(tau) = kappa / tau^gamma_i + eps / (tau - 1)^gamma_c,   tau > 1,
// whose inverse gives the specific volume as a function of pressure.
// eps == 0 selects the saturated limit law (tau = (kappa/p)^{1/gamma_i}
// below kappa, tau = 1 at and above), so scenario code stays generic over
// the soft and hard systems.
struct EosParams {
  double kappa = 1.0;
  double eps = 0.1;
  double gamma_i = 2.0;
  double gamma_c = 2.0;

  void validate() const;  // throws std::invalid_argument on a bad field
};

enum class StateClass { Free, Congested, Intermediate };

// Pressure bands used to classify states. Must satisfy
// pf_lo < pf_hi < kappa < pc_lo < pc_hi; the bands are eps-independent.
struct ClassifierThresholds {
  double pf_lo = 0.15;
  double pf_hi = 0.5;
  double pc_lo = 1.3;
  double pc_hi = 1.7;

  void validate(double kappa) const;
};

// P(tau). Domain: tau > 1 for eps > 0, tau >= 1 for eps == 0.
double pressure(double tau, const EosParams& params);

// dP/dtau; same domain as pressure(), always negative.
double pressure_deriv(double tau, const EosParams& params);

// Inverse of the pressure law. For eps > 0 the unique tau > 1 with
// P(tau) = p, found by bracketing Newton (relative tolerance 1e-12,
// iteration cap 200). For eps == 0 the limit law.
double specific_volume(double p, const EosParams& params);

// d(specific_volume)/dp = 1 / P'(T(p)); negative. The eps == 0 law has a
// kink at p = kappa, so that branch is rejected for p >= kappa.
double specific_volume_deriv(double p, const EosParams& params);

// Characteristic speeds (lambda1, lambda2) = (-s, +s), s = sqrt(-1/T'(p)).
std::pair<double, double> eigenvalues(double p, const EosParams& params);

StateClass classify(double p, const ClassifierThresholds& thresholds);

// Potential of the physical energy entropy: Pi'(tau) = -P(tau),
// normalized by Pi(2) = 0.
double energy_potential(double tau, const EosParams& params);

}  // namespace cwft

#endif
