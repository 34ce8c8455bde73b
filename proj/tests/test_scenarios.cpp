#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>

#include "cwft/riemann.hpp"
#include "cwft/scenarios.hpp"
#include "cwft/wft.hpp"
#include "doctest.h"

using namespace cwft;

namespace {
EosParams base_params() {
  EosParams p;
  p.eps = 0.1;
  return p;
}

SingleInterfaceSpec reference_spec() {
  SingleInterfaceSpec s;
  s.p01 = 1.5;
  s.u01 = 1.0;
  s.p02 = 0.5;
  return s;
}
}  // namespace

TEST_CASE("single interface limit reference (pinned)") {
  ScenarioProfile ref =
      build_single_interface_limit(reference_spec(), base_params());
  REQUIRE(ref.profile.values.size() == 2);
  CHECK(ref.profile.xs[0] == 0.0);
  CHECK(ref.profile.values[1].u - ref.profile.values[0].u ==
        doctest::Approx(-0.64359425290558262).epsilon(1e-12));
  CHECK(ref.lambda_bar2 == doctest::Approx(1.5537739740300373).epsilon(1e-12));
  CHECK(ref.lambda_bar2 > 0.0);

  // solving for p02 from du recovers the same datum
  SingleInterfaceSpec from_du;
  from_du.p01 = 1.5;
  from_du.u01 = 1.0;
  from_du.du = -0.64359425290558262;
  ScenarioProfile ref2 = build_single_interface_limit(from_du, base_params());
  CHECK(ref2.profile.values[1].p == doctest::Approx(0.5).epsilon(1e-10));

  // lambda_bar2 > 0 across admissible inputs
  for (double p02 : {0.1, 0.3, 0.6, 0.9}) {
    SingleInterfaceSpec s = reference_spec();
    s.p02 = p02;
    CHECK(build_single_interface_limit(s, base_params()).lambda_bar2 > 0.0);
  }
}

TEST_CASE("degenerate and invalid single-interface inputs") {
  SingleInterfaceSpec s = reference_spec();
  s.p02 = 1.0;  // = kappa, rejected as exact input
  CHECK_THROWS_AS(build_single_interface_limit(s, base_params()),
                  ScenarioError);
  s.p02 = 1.2;
  CHECK_THROWS_AS(build_single_interface_limit(s, base_params()),
                  ScenarioError);
  s = reference_spec();
  s.du = 0.2;  // must be negative
  s.p02.reset();
  CHECK_THROWS_AS(build_single_interface_limit(s, base_params()),
                  ScenarioError);

  // p02 -> kappa-: du -> 0, lambda finite
  SingleInterfaceSpec near = reference_spec();
  near.p02 = 0.999999;
  ScenarioProfile ref = build_single_interface_limit(near, base_params());
  CHECK(std::abs(ref.profile.values[1].u - ref.profile.values[0].u) < 1e-2);
  CHECK(ref.lambda_bar2 > 0.0);
  CHECK(std::isfinite(ref.lambda_bar2));
}

TEST_CASE("eps-level reference satisfies the jump relation exactly") {
  EosParams prm = base_params();
  ScenarioProfile lim =
      build_single_interface_limit(reference_spec(), prm);
  ScenarioProfile ref = build_single_interface_eps(lim, 0.1, prm);
  const State& l = ref.profile.values[0];
  const State& r = ref.profile.values[1];
  CHECK(r.u == doctest::Approx(1.0 - 0.65395299262214305).epsilon(1e-10));
  double res = rh_residual(l, r, prm);
  CHECK(std::abs(res) <= 1e-10);

  // u02^eps -> u02, monotone once past the pre-asymptotic dip near 1e-2
  // (the congested side converges at the sqrt(eps) rate)
  double u02 = lim.profile.values[1].u;
  double prev = 1e300;
  for (double eps : {1e-2, 1e-3, 1e-4, 1e-5, 1e-6}) {
    ScenarioProfile r2 = build_single_interface_eps(lim, eps, prm);
    double gap = std::abs(r2.profile.values[1].u - u02);
    CHECK(gap < prev);
    prev = gap;
  }
  CHECK(prev < 5e-3);
}

TEST_CASE("unperturbed eps-reference runs with zero interactions") {
  EosParams prm = base_params();
  ScenarioProfile lim = build_single_interface_limit(reference_spec(), prm);
  ScenarioProfile ref = build_single_interface_eps(lim, 0.1, prm);
  SimConfig sim;
  sim.rho = 1e-3;
  sim.t_final = 1.0;
  RunResult res = run(ref.profile, ref.interface_xs, sim, prm);
  CHECK(res.records.empty());
  REQUIRE(res.interface_paths.size() == 1);
  auto slopes = res.interface_paths[0].segment_slopes();
  REQUIRE(slopes.size() == 1);
  CHECK(slopes[0] == doctest::Approx(shock_speed(ref.profile.values[0],
                                                 ref.profile.values[1], prm))
                         .epsilon(1e-14));
}

TEST_CASE("two non-interacting interfaces, symmetric data") {
  TwoNonInteractingSpec spec;
  spec.p1 = spec.p3 = 0.5;
  spec.u1 = 1.0;
  spec.du = 2.0;
  EosParams lim = base_params();

  ScenarioProfile ref = build_two_noninteracting(spec, 0.0, lim);
  REQUIRE(ref.profile.values.size() == 3);
  CHECK(ref.profile.values[1].p ==
        doctest::Approx(2.914213562373095).epsilon(1e-12));
  CHECK(ref.profile.values[1].u == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(ref.profile.values[1].p > lim.kappa);

  // speeds ordered and opposite for symmetric data
  EosParams prm = base_params();
  prm.eps = 0.05;
  ScenarioProfile repx = build_two_noninteracting(spec, 0.05, prm);
  double s1 = shock_speed(repx.profile.values[0], repx.profile.values[1], prm);
  double s2 = shock_speed(repx.profile.values[1], repx.profile.values[2], prm);
  CHECK(s1 < 0.0);
  CHECK(s2 > 0.0);
  CHECK(s1 == doctest::Approx(-s2).epsilon(1e-12));

  SimConfig sim;
  sim.rho = 1e-3;
  sim.t_final = 0.8;
  RunResult res = run(repx.profile, repx.interface_xs, sim, prm);
  CHECK(res.records.empty());
  CHECK(res.interface_paths.size() == 2);
}

TEST_CASE("two interacting interfaces collide at the kinematic time") {
  TwoInteractingSpec spec;  // defaults: (1.5, +-0.8), x = -+0.5
  EosParams prm = base_params();
  prm.eps = 0.05;
  ScenarioProfile ref = build_two_interacting(spec, 0.05, prm);
  REQUIRE(ref.profile.values.size() == 3);
  CHECK(ref.profile.values[1].p < prm.kappa);

  double s_left = shock_speed(ref.profile.values[0], ref.profile.values[1], prm);
  double s_right =
      shock_speed(ref.profile.values[1], ref.profile.values[2], prm);
  CHECK(s_left > 0.0);
  CHECK(s_right < 0.0);
  double t_star = (spec.x2 - spec.x1) / (s_left - s_right);

  SimConfig sim;
  sim.rho = 1e-3;
  sim.t_final = 3.0 * t_star;
  RunResult res = run(ref.profile, ref.interface_xs, sim, prm);
  REQUIRE(!res.records.empty());
  CHECK(res.records[0].time == doctest::Approx(t_star).epsilon(1e-12));

  // post-collision middle state is strongly compressed
  Profile prof = sample_solution(res, 1.05 * t_star);
  double pmax = 0.0;
  for (const State& s : prof.values) pmax = std::max(pmax, s.p);
  CHECK(pmax > ref.profile.values[0].p);
}

TEST_CASE("three interfaces datum chains valid shocks") {
  ThreeInterfacesSpec spec;
  EosParams prm = base_params();
  prm.eps = 0.05;
  ScenarioProfile ref = build_three_interfaces(spec, 0.05, prm);
  REQUIRE(ref.profile.values.size() == 4);
  CHECK(ref.interface_xs.size() == 3);
  for (std::size_t i = 0; i + 1 < ref.profile.values.size(); ++i) {
    double res = rh_residual(ref.profile.values[i], ref.profile.values[i + 1],
                             prm);
    CHECK(std::abs(res) < 1e-9);
  }
}

TEST_CASE("in_function") {
  EosParams lim = base_params();
  lim.eps = 0.0;
  ScenarioProfile ref = build_single_interface_limit(reference_spec(), lim);

  // the reference datum reproduces p01 exactly
  Profile redef = in_function(ref.profile, 0.0, lim);
  REQUIRE(redef.values.size() == 2);
  CHECK(redef.values[0].p == doctest::Approx(1.5).epsilon(1e-14));
  CHECK(redef.values[0].u == ref.profile.values[0].u);  // velocity preserved

  // idempotent / fixed point
  Profile again = in_function(redef, 0.0, lim);
  CHECK(again.values[0].p == redef.values[0].p);
  CHECK(again.values[0].u == redef.values[0].u);
  CHECK(again.xs == redef.xs);

  // a shifted congested pressure is redefined to the same p_in_c
  Profile shifted = ref.profile;
  shifted.values[0].p = 1.4;
  Profile redef2 = in_function(shifted, 0.0, lim);
  CHECK(redef2.values[0].p == doctest::Approx(1.5).epsilon(1e-12));

  // degenerate right trace at p >= kappa
  Profile bad = ref.profile;
  bad.values[1].p = 1.2;
  CHECK_THROWS_AS(in_function(bad, 0.0, lim), ScenarioError);

  EosParams soft = base_params();
  CHECK_THROWS_AS(in_function(ref.profile, 0.0, soft), ScenarioError);
}

TEST_CASE("perturbation budget accounting") {
  EosParams prm = base_params();
  prm.eps = 1e-2;
  ScenarioProfile lim = build_single_interface_limit(reference_spec(), prm);
  ScenarioProfile ref = build_single_interface_eps(lim, prm.eps, prm);
  double delta = 0.05;

  PerturbationSpec empty;
  PerturbedDatum same = perturb(ref, empty, delta, prm);
  CHECK(same.profile.xs == ref.profile.xs);
  CHECK(same.consumed_budget == 0.0);

  // congested-side velocity jump scaled by eps^{1/(2 gc)} is accepted
  PerturbationSpec small;
  PerturbationJump j;
  j.offset = -0.2;
  j.family = WaveFamily::Two;
  j.kind = PerturbationJump::Kind::Velocity;
  j.value = -std::pow(prm.eps, 0.25) * delta / 4.0;
  small.congested_side.push_back(j);
  PerturbedDatum pd = perturb(ref, small, delta, prm);
  CHECK(pd.consumed_budget > 0.0);
  CHECK(pd.consumed_budget < delta);
  REQUIRE(pd.profile.values.size() == 3);
  // inserted jump sits on an exact locus: its own Riemann problem is a
  // single wave of the requested family
  WaveFan fan =
      solve_riemann(pd.profile.values[0], pd.profile.values[1], prm);
  REQUIRE(fan.waves.size() == 1);
  CHECK(fan.waves[0].family == WaveFamily::Two);

  // an O(delta) congested velocity jump overflows the weighted budget
  PerturbationSpec big;
  j.value = -delta;
  big.congested_side.push_back(j);
  CHECK_THROWS_AS(perturb(ref, big, delta, prm), BudgetExceededError);

  // wrong-side offsets are rejected
  PerturbationSpec wrong;
  j.value = -1e-3;
  j.offset = 0.2;
  wrong.congested_side.push_back(j);
  CHECK_THROWS_AS(perturb(ref, wrong, delta, prm), ScenarioError);
}

TEST_CASE("free-side pressure perturbations discretize without spurious waves") {
  EosParams prm = base_params();
  prm.eps = 1e-2;
  ScenarioProfile lim = build_single_interface_limit(reference_spec(), prm);
  ScenarioProfile ref = build_single_interface_eps(lim, prm.eps, prm);

  PerturbationSpec spec;
  PerturbationJump a;
  a.offset = 0.3;
  a.family = WaveFamily::Two;
  a.kind = PerturbationJump::Kind::Pressure;
  a.value = -0.004;
  spec.free_side.push_back(a);
  PerturbationJump b;
  b.offset = 0.5;
  b.family = WaveFamily::One;
  b.kind = PerturbationJump::Kind::Pressure;
  b.value = 0.004;
  spec.free_side.push_back(b);

  PerturbedDatum pd = perturb(ref, spec, 0.05, prm);
  SimConfig sim;
  sim.rho = 1e-3;
  sim.t_final = 1e-6;  // only the discretization matters here
  FrontConfiguration cfg =
      discretize_initial_datum(pd.profile, ref.interface_xs, sim, prm);
  CHECK(cfg.fronts.size() == 3);  // interface + the two inserted shocks
  int interfaces = 0;
  for (const Front& f : cfg.fronts) interfaces += f.is_interface ? 1 : 0;
  CHECK(interfaces == 1);
}
