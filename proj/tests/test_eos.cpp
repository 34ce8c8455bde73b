#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <vector>

#include "cwft/eos.hpp"
#include "cwft/numerics.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace cwft;

namespace {
EosParams params(double eps, double kappa = 1.0, double gi = 2.0,
                 double gc = 2.0) {
  EosParams p;
  p.kappa = kappa;
  p.eps = eps;
  p.gamma_i = gi;
  p.gamma_c = gc;
  return p;
}
}  // namespace

TEST_CASE("pressure closed form and domain") {
  CHECK(pressure(2.0, params(0.1)) == doctest::Approx(0.35).epsilon(1e-14));
  CHECK(pressure(2.0, params(0.0)) == doctest::Approx(0.25).epsilon(1e-14));
  CHECK_THROWS_AS(pressure(1.0, params(0.1)), std::domain_error);
  CHECK_THROWS_AS(pressure(0.999, params(0.0)), std::domain_error);
  CHECK(pressure(1.0, params(0.0)) == doctest::Approx(1.0));

  // strict decrease
  double prev = pressure(1.0 + 1e-6, params(0.1));
  for (double tau : {1.01, 1.1, 1.5, 2.0, 5.0, 50.0}) {
    double p = pressure(tau, params(0.1));
    CHECK(p < prev);
    prev = p;
  }
}

TEST_CASE("specific_volume pinned values") {
  CHECK(specific_volume(0.35, params(0.1)) ==
        doctest::Approx(2.0).epsilon(1e-12));
  CHECK(specific_volume(1.0, params(0.0)) == 1.0);
  CHECK(specific_volume(2.5, params(0.0)) == 1.0);
  CHECK(specific_volume(0.25, params(0.0)) ==
        doctest::Approx(2.0).epsilon(1e-14));
  CHECK_THROWS_AS(specific_volume(0.0, params(0.1)), std::domain_error);
}

TEST_CASE("round trip over the (p, eps) grid") {
  for (double eps : {1e-1, 1e-2, 1e-3, 1e-4, 1e-5, 1e-6}) {
    EosParams prm = params(eps);
    for (int k = 0; k <= 60; ++k) {
      double p = 1e-3 * std::pow(10.0, 6.0 * k / 60.0);
      double tau = specific_volume(p, prm);
      CHECK(std::abs(pressure(tau, prm) - p) <= 1e-10 * std::max(1.0, p));
      // independent bisection oracle
      double tau_oracle = testing::oracle_specific_volume(p, prm);
      CHECK(tau == doctest::Approx(tau_oracle).epsilon(1e-10));
    }
  }
}

TEST_CASE("specific_volume is strictly decreasing in p") {
  EosParams prm = params(1e-2);
  double prev = specific_volume(1e-3, prm);
  for (int k = 1; k <= 40; ++k) {
    double p = 1e-3 * std::pow(10.0, 5.0 * k / 40.0);
    double tau = specific_volume(p, prm);
    CHECK(tau < prev);
    prev = tau;
  }
}

TEST_CASE("specific_volume_deriv pinned value and finite differences") {
  CHECK(specific_volume_deriv(0.35, params(0.1)) ==
        doctest::Approx(-1.0 / 0.45).epsilon(1e-10));

  for (double eps : {1e-1, 1e-3}) {
    EosParams prm = params(eps);
    for (double p : {0.3, 0.7, 1.2, 2.0}) {
      auto f = [&](double x) { return specific_volume(x, prm); };
      double fd = testing::central_difference(f, p, 1e-6 * p);
      double an = specific_volume_deriv(p, prm);
      CHECK(an == doctest::Approx(fd).epsilon(1e-6));
      CHECK(an < 0.0);
    }
  }
  CHECK_THROWS_AS(specific_volume_deriv(1.0, params(0.0)), std::domain_error);
  CHECK_THROWS_AS(specific_volume_deriv(1.5, params(0.0)), std::domain_error);
  CHECK(specific_volume_deriv(0.5, params(0.0)) < 0.0);
}

TEST_CASE("congested band scaling of the derivative") {
  // normalized ratio eps^{-1/gc} |T'(p)| stays within a fixed bracket
  for (double p : {1.35, 1.5, 1.65}) {
    double lo = 1e300, hi = 0.0;
    for (double eps : {1e-3, 1e-4, 1e-5, 1e-6, 1e-7}) {
      double r = std::abs(specific_volume_deriv(p, params(eps))) /
                 std::sqrt(eps);
      lo = std::min(lo, r);
      hi = std::max(hi, r);
    }
    CHECK(hi / lo < 2.0);
  }

  // fitted slope of log|T'| vs log eps at a deep congested pressure
  std::vector<double> lx, ly;
  for (int k = 1; k <= 6; ++k) {
    double eps = std::pow(10.0, -k);
    lx.push_back(std::log(eps));
    ly.push_back(std::log(std::abs(specific_volume_deriv(8.0, params(eps)))));
  }
  LinearFit fit = fit_line(lx, ly);
  CHECK(std::abs(fit.slope - 0.5) <= 0.02 * 0.5);
}

TEST_CASE("free band boundedness of the derivative") {
  EosParams lim = params(0.0);
  for (double p : {0.2, 0.3, 0.45}) {
    double limit_deriv = std::abs(specific_volume_deriv(p, lim));
    for (double eps : {1e-1, 1e-2, 1e-3, 1e-4, 1e-5, 1e-6}) {
      double d = std::abs(specific_volume_deriv(p, params(eps)));
      CHECK(d > 0.5 * limit_deriv);
      CHECK(d < 1.5 * limit_deriv);
    }
  }
}

TEST_CASE("eigenvalues") {
  auto [l1, l2] = eigenvalues(0.35, params(0.1));
  CHECK(l2 == doctest::Approx(std::sqrt(0.45)).epsilon(1e-12));
  CHECK(l1 == -l2);
  for (double p : {0.2, 0.9, 1.4, 3.0}) {
    auto [a, b] = eigenvalues(p, params(1e-3));
    CHECK(a == -b);
    CHECK(b > 0.0);
  }

  // congested blow-up lambda2 ~ eps^{-1/(2 gc)}
  std::vector<double> lx, ly;
  for (int k = 5; k <= 8; ++k) {
    double eps = std::pow(10.0, -k);
    lx.push_back(std::log(eps));
    ly.push_back(std::log(eigenvalues(1.5, params(eps)).second));
  }
  LinearFit fit = fit_line(lx, ly);
  CHECK(std::abs(fit.slope + 0.25) < 0.01);
}

TEST_CASE("classification bands") {
  ClassifierThresholds th;  // 0.15 / 0.5 / 1.3 / 1.7 around kappa = 1
  th.validate(1.0);
  CHECK(classify(0.3, th) == StateClass::Free);
  CHECK(classify(1.5, th) == StateClass::Congested);
  CHECK(classify(1.0, th) == StateClass::Intermediate);
  CHECK(classify(0.6, th) == StateClass::Intermediate);
  CHECK(classify(2.0, th) == StateClass::Intermediate);

  ClassifierThresholds bad = th;
  bad.pf_hi = 1.2;
  CHECK_THROWS_AS(bad.validate(1.0), std::invalid_argument);
}

TEST_CASE("pointwise limit eps -> 0 is monotone") {
  EosParams lim = params(0.0);
  for (double p : {0.5, 1.5}) {
    double tau_lim = specific_volume(p, lim);
    double first = 0.0, prev = 1e300;
    for (double eps : {1e-1, 1e-2, 1e-3, 1e-4, 1e-5, 1e-6}) {
      double gap = std::abs(specific_volume(p, params(eps)) - tau_lim);
      CHECK(gap < prev);
      if (first == 0.0) first = gap;
      prev = gap;
    }
    // congested side converges at the sqrt(eps) rate, free side linearly
    CHECK(prev < first / 50.0);
    CHECK(prev < 5e-3);
  }
}

TEST_CASE("energy potential normalization and derivative") {
  EosParams prm = params(0.1);
  CHECK(energy_potential(2.0, prm) == doctest::Approx(0.0).epsilon(1e-14));
  for (double tau : {1.2, 1.7, 3.0}) {
    auto f = [&](double x) { return energy_potential(x, prm); };
    double fd = testing::central_difference(f, tau, 1e-7);
    CHECK(fd == doctest::Approx(-pressure(tau, prm)).epsilon(1e-6));
  }
}

TEST_CASE("parameter validation") {
  EosParams bad = params(0.1);
  bad.kappa = 0.0;
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
  bad = params(-1e-3);
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
  bad = params(0.1);
  bad.gamma_i = 1.0;
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
}
