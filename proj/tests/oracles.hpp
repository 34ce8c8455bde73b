#ifndef CWFT_TESTS_ORACLES_HPP
#define CWFT_TESTS_ORACLES_HPP

// Test-only reference implementations, kept independent of the library
// paths they check: the EOS inversion oracle inverts the closed-form
// pressure by plain bisection, and the Riemann oracle evaluates the curves
// with a p-space cumulative Simpson table plus bisection on the middle
// pressure (the library inverts with safeguarded Newton and integrates the
// rarefaction curves adaptively in the tau variable).

#include <cmath>
#include <functional>
#include <stdexcept>
#include <vector>

#include "cwft/eos.hpp"
#include "cwft/state.hpp"

namespace cwft::testing {

// Inverse of the pressure law by bisection on s = tau - 1.
inline double oracle_specific_volume(double p, const EosParams& prm) {
  if (prm.eps == 0.0) {
    return p >= prm.kappa ? 1.0 : std::pow(prm.kappa / p, 1.0 / prm.gamma_i);
  }
  auto f = [&](double s) {
    return prm.kappa * std::pow(1.0 + s, -prm.gamma_i) +
           prm.eps * std::pow(s, -prm.gamma_c) - p;
  };
  double lo = std::pow(prm.eps / p, 1.0 / prm.gamma_c);
  double hi = lo;
  while (f(hi) > 0.0) hi *= 2.0;
  for (int i = 0; i < 200; ++i) {
    double mid = 0.5 * (lo + hi);
    (f(mid) > 0.0 ? lo : hi) = mid;
  }
  return 1.0 + 0.5 * (lo + hi);
}

inline double central_difference(const std::function<double(double)>& f,
                                 double x, double h) {
  return (f(x + h) - f(x - h)) / (2.0 * h);
}

// Cumulative integral of g(xi) = sqrt(-T'(xi)) on a log-spaced grid; one
// table per EOS parameter set serves every problem of a sweep.
class RarefactionTable {
 public:
  RarefactionTable(const EosParams& prm, double p_lo, double p_hi,
                   std::size_t cells = 16384)
      : prm_(prm), lo_(p_lo), hi_(p_hi) {
    nodes_.resize(cells + 1);
    cum_.resize(cells + 1);
    double r = std::log(hi_ / lo_) / static_cast<double>(cells);
    for (std::size_t k = 0; k <= cells; ++k)
      nodes_[k] = lo_ * std::exp(r * static_cast<double>(k));
    cum_[0] = 0.0;
    for (std::size_t k = 0; k < cells; ++k)
      cum_[k + 1] = cum_[k] + simpson_cell(nodes_[k], nodes_[k + 1]);
  }

  double integral(double pa, double pb) const {  // int_pa^pb g
    return antiderivative(pb) - antiderivative(pa);
  }

  double g(double xi) const {
    double tau = oracle_specific_volume(xi, prm_);
    double dP = -prm_.kappa * prm_.gamma_i *
                    std::pow(tau, -prm_.gamma_i - 1.0) -
                prm_.eps * prm_.gamma_c *
                    std::pow(tau - 1.0, -prm_.gamma_c - 1.0);
    return std::sqrt(-1.0 / dP);
  }

 private:
  double simpson_cell(double a, double b) const {
    return (b - a) / 6.0 * (g(a) + 4.0 * g(0.5 * (a + b)) + g(b));
  }

  double antiderivative(double p) const {
    if (p < lo_ || p > hi_)
      throw std::out_of_range("RarefactionTable: pressure outside the table");
    auto it = std::upper_bound(nodes_.begin(), nodes_.end(), p);
    std::size_t k = static_cast<std::size_t>(it - nodes_.begin());
    if (k == 0) return 0.0;
    --k;
    if (k + 1 >= nodes_.size()) return cum_.back();
    return cum_[k] + simpson_cell(nodes_[k], p);
  }

  EosParams prm_;
  double lo_, hi_;
  std::vector<double> nodes_, cum_;
};

// Brute-force exact Riemann solver: curve evaluation through the table,
// middle pressure by bisection.
class RiemannOracle {
 public:
  explicit RiemannOracle(const EosParams& prm, double p_lo = 1e-3,
                         double p_hi = 50.0)
      : prm_(prm), table_(prm, p_lo, p_hi), p_lo_(p_lo), p_hi_(p_hi) {}

  double forward_one(const State& left, double p) const {
    if (p >= left.p) {
      double v = (oracle_specific_volume(left.p, prm_) -
                  oracle_specific_volume(p, prm_)) *
                 (p - left.p);
      return left.u - std::sqrt(std::max(v, 0.0));
    }
    return left.u + table_.integral(p, left.p);
  }

  double backward_two(const State& right, double p) const {
    if (p >= right.p) {
      double w = (oracle_specific_volume(right.p, prm_) -
                  oracle_specific_volume(p, prm_)) *
                 (p - right.p);
      return right.u + std::sqrt(std::max(w, 0.0));
    }
    return right.u - table_.integral(p, right.p);
  }

  // middle pressure; throws if the curves do not intersect
  double middle_pressure(const State& left, const State& right) const {
    auto f = [&](double p) {
      return forward_one(left, p) - backward_two(right, p);
    };
    double lo = std::max(std::min(left.p, right.p) / 10.0, p_lo_ * 1.01);
    double hi = std::min(std::max(left.p, right.p) * 10.0, p_hi_ * 0.99);
    while (f(lo) < 0.0 && lo > p_lo_ * 1.02) lo = std::max(lo * 0.5, p_lo_ * 1.01);
    while (f(hi) > 0.0 && hi < p_hi_ * 0.98) hi = std::min(hi * 2.0, p_hi_ * 0.99);
    if (f(lo) < 0.0 || f(hi) > 0.0)
      throw std::runtime_error("RiemannOracle: no intersection in table range");
    for (int i = 0; i < 120; ++i) {
      double mid = 0.5 * (lo + hi);
      (f(mid) > 0.0 ? lo : hi) = mid;
      if (hi - lo < 1e-11 * std::max(1.0, hi)) break;
    }
    return 0.5 * (lo + hi);
  }

 private:
  EosParams prm_;
  RarefactionTable table_;
  double p_lo_, p_hi_;
};

}  // namespace cwft::testing

#endif
