#include "cwft/riemann.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "cwft/numerics.hpp"

namespace cwft {

namespace {

constexpr double kZeroStrength = 1e-12;
constexpr double kQuadTol = 1e-11;

// Integral of sqrt(-T'(xi)) over [pa, pb], evaluated in the tau variable
// where the integrand sqrt(-P'(tau)) is closed-form:
//   int_pa^pb sqrt(-T'(xi)) dxi = int_{T(pb)}^{T(pa)} sqrt(-P'(tau)) dtau.
double rarefaction_integral(double pa, double pb, const EosParams& prm) {
  if (pa == pb) return 0.0;
  double sign = 1.0;
  if (pa > pb) {
    std::swap(pa, pb);
    sign = -1.0;
  }
  if (prm.eps == 0.0) {
    // Only the isentropic branch contributes; tau is frozen above kappa.
    double hi = std::min(pb, prm.kappa);
    if (pa >= hi) return 0.0;
    double beta = 0.5 * (1.0 + 1.0 / prm.gamma_i);
    double c = std::sqrt(std::pow(prm.kappa, 1.0 / prm.gamma_i) / prm.gamma_i);
    double e = 1.0 - beta;
    return sign * c * (std::pow(hi, e) - std::pow(pa, e)) / e;
  }
  double ta = specific_volume(pb, prm);  // lower tau bound
  double tb = specific_volume(pa, prm);
  std::vector<double> splits;
  if (pa < prm.kappa && pb > prm.kappa)
    splits.push_back(specific_volume(prm.kappa, prm));
  auto g = [&](double tau) { return std::sqrt(-pressure_deriv(tau, prm)); };
  return sign * adaptive_simpson(g, ta, tb, kQuadTol, splits);
}

double sqrt_neg_tprime(double p, const EosParams& prm) {
  return std::sqrt(-specific_volume_deriv(p, prm));
}

// (T(p_base) - T(p)) * (p - p_base), nonnegative on both shock branches.
double shock_radicand(double p_base, double tau_base, double p,
                      const EosParams& prm) {
  return (tau_base - specific_volume(p, prm)) * (p - p_base);
}

bool near_base(double p, double p_base) {
  return std::abs(p - p_base) <= 1e-9 * std::max(1.0, std::max(p, p_base));
}

}  // namespace

double lax_curve_velocity(const State& left, double p, WaveFamily family,
                          const EosParams& params) {
  if (!(p > 0.0)) throw std::domain_error("lax_curve_velocity: p must be > 0");
  bool shock_side =
      (family == WaveFamily::One) ? (p >= left.p) : (p <= left.p);
  if (shock_side) {
    double v = shock_radicand(left.p, specific_volume(left.p, params), p, params);
    return left.u - std::sqrt(std::max(v, 0.0));
  }
  if (family == WaveFamily::One)
    return left.u - rarefaction_integral(left.p, p, params);
  return left.u + rarefaction_integral(left.p, p, params);
}

double lax_curve_velocity_deriv(const State& left, double p, WaveFamily family,
                                const EosParams& params) {
  bool shock_side =
      (family == WaveFamily::One) ? (p >= left.p) : (p <= left.p);
  if (shock_side && !near_base(p, left.p)) {
    double tau_l = specific_volume(left.p, params);
    double v = shock_radicand(left.p, tau_l, p, params);
    double vp = -specific_volume_deriv(p, params) * (p - left.p) +
                (tau_l - specific_volume(p, params));
    return -vp / (2.0 * std::sqrt(std::max(v, 1e-300)));
  }
  // Rarefaction branch; also the limit of the shock branch at the base.
  double g = sqrt_neg_tprime(p, params);
  return (family == WaveFamily::One) ? -g : g;
}

double backward_two_curve_velocity(const State& right, double p,
                                   const EosParams& params) {
  if (!(p > 0.0))
    throw std::domain_error("backward_two_curve_velocity: p must be > 0");
  if (p >= right.p) {
    double w =
        shock_radicand(p, specific_volume(p, params), right.p, params);
    return right.u + std::sqrt(std::max(w, 0.0));
  }
  return right.u - rarefaction_integral(p, right.p, params);
}

namespace {

double backward_two_curve_velocity_deriv(const State& right, double p,
                                         const EosParams& prm) {
  if (p >= right.p && !near_base(p, right.p)) {
    double tau_r = specific_volume(right.p, prm);
    double w = (tau_r - specific_volume(p, prm)) * (p - right.p);
    double wp = -specific_volume_deriv(p, prm) * (p - right.p) +
                (tau_r - specific_volume(p, prm));
    return wp / (2.0 * std::sqrt(std::max(w, 1e-300)));
  }
  return sqrt_neg_tprime(p, prm);
}

Wave make_shock(WaveFamily family, const State& l, const State& r,
                const EosParams& prm) {
  Wave w;
  w.family = family;
  w.kind = WaveKind::Shock;
  w.left = l;
  w.right = r;
  w.strength = r.p - l.p;
  double s = shock_speed(l, r, prm);
  w.speed_lo = w.speed_hi = s;
  return w;
}

Wave make_rarefaction(WaveFamily family, const State& l, const State& r,
                      const EosParams& prm) {
  Wave w;
  w.family = family;
  w.kind = WaveKind::Rarefaction;
  w.left = l;
  w.right = r;
  w.strength = r.p - l.p;
  auto edge = [&](double p) {
    auto [l1, l2] = eigenvalues(p, prm);
    return family == WaveFamily::One ? l1 : l2;
  };
  w.speed_lo = edge(l.p);
  w.speed_hi = edge(r.p);
  return w;
}

}  // namespace

double rh_residual(const State& left, const State& right,
                   const EosParams& params) {
  double du = right.u - left.u;
  double dp = right.p - left.p;
  double dtau =
      specific_volume(right.p, params) - specific_volume(left.p, params);
  return du * du + dp * dtau;
}

WaveFan solve_riemann(const State& left, const State& right,
                      const EosParams& params) {
  if (!(left.p > 0.0 && right.p > 0.0))
    throw std::domain_error("solve_riemann: pressures must be > 0");

  WaveFan fan;
  double pscale = std::max(left.p, right.p);
  double uscale = std::max({1.0, std::abs(left.u), std::abs(right.u)});
  if (std::abs(left.p - right.p) <= 1e-14 * pscale &&
      std::abs(left.u - right.u) <= 1e-14 * uscale) {
    fan.middle = left;
    return fan;
  }

  auto f = [&](double p) {
    return lax_curve_velocity(left, p, WaveFamily::One, params) -
           backward_two_curve_velocity(right, p, params);
  };
  auto df = [&](double p) {
    return lax_curve_velocity_deriv(left, p, WaveFamily::One, params) -
           backward_two_curve_velocity_deriv(right, p, params);
  };

  double lo = std::min(left.p, right.p) / 10.0;
  double hi = std::max(left.p, right.p) * 10.0;
  double flo = f(lo);
  double fhi = f(hi);
  // f is strictly decreasing; grow the bracket until it straddles the root.
  while (flo < 0.0 && lo > 1e-13) {
    lo *= 0.1;
    flo = f(lo);
  }
  while (fhi > 0.0 && hi < 1e13) {
    hi *= 10.0;
    fhi = f(hi);
  }
  if (flo < 0.0)
    throw NoIntersectionError(
        "solve_riemann: curves do not intersect (vacuum-like data)");
  if (fhi > 0.0)
    throw NoIntersectionError("solve_riemann: no intersection at high pressure");

  double pm = bracketed_newton(f, df, lo, hi, 1e-14, 1e-13 * uscale, 200,
                               "solve_riemann middle state");
  bool drop1 = std::abs(pm - left.p) <= kZeroStrength;
  bool drop2 = std::abs(right.p - pm) <= kZeroStrength;
  // zero-strength cleanup snaps the middle state onto the datum so side
  // states chain exactly
  if (drop1) {
    fan.middle = left;
  } else if (drop2) {
    fan.middle = right;
  } else {
    fan.middle = State{pm, lax_curve_velocity(left, pm, WaveFamily::One, params)};
  }
  if (drop1 && drop2) return fan;

  if (!drop1) {
    double sigma1 = fan.middle.p - left.p;
    fan.waves.push_back(sigma1 > 0.0
                            ? make_shock(WaveFamily::One, left, fan.middle, params)
                            : make_rarefaction(WaveFamily::One, left,
                                               fan.middle, params));
  }
  if (!drop2) {
    double sigma2 = right.p - fan.middle.p;
    fan.waves.push_back(sigma2 < 0.0
                            ? make_shock(WaveFamily::Two, fan.middle, right, params)
                            : make_rarefaction(WaveFamily::Two, fan.middle,
                                               right, params));
  }
  return fan;
}

double shock_speed(const State& left, const State& right,
                   const EosParams& params) {
  double dtau =
      specific_volume(right.p, params) - specific_volume(left.p, params);
  if (std::abs(dtau) < 1e-14)
    throw RiemannError("shock_speed: degenerate jump, |dtau| < 1e-14");
  double du = right.u - left.u;
  double res = du * du + (right.p - left.p) * dtau;
  double scale = std::max({1.0, du * du, std::abs((right.p - left.p) * dtau)});
  if (std::abs(res) > 1e-8 * scale)
    throw RiemannError("shock_speed: states violate the RH relation, residual " +
                       format_double(res));
  return -du / dtau;
}

bool check_lax(const Wave& wave, const EosParams& params) {
  if (!(wave.left.p > 0.0 && wave.right.p > 0.0))
    throw std::domain_error("check_lax: pressures must be > 0");
  if (wave.kind == WaveKind::Rarefaction) return true;
  if (std::abs(wave.strength) <= kZeroStrength) return true;
  auto lambda = [&](double p) {
    auto [l1, l2] = eigenvalues(p, params);
    return wave.family == WaveFamily::One ? l1 : l2;
  };
  double s = wave.speed_lo;
  double tol = 1e-12 * (1.0 + std::abs(s));
  return lambda(wave.left.p) > s - tol && s > lambda(wave.right.p) - tol;
}

}  // namespace cwft
