#include "cwft/scenarios.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "cwft/numerics.hpp"

namespace cwft {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

EosParams with_eps(const EosParams& params, double eps) {
  EosParams p = params;
  p.eps = eps;
  return p;
}

// (du)^2 across a shock between pressures pa, pb under the law `prm`.
double jump_du_squared(double pa, double pb, const EosParams& prm) {
  return -(pb - pa) * (specific_volume(pb, prm) - specific_volume(pa, prm));
}

}  // namespace

ScenarioProfile build_single_interface_limit(const SingleInterfaceSpec& spec,
                                             const EosParams& params) {
  EosParams lim = with_eps(params, 0.0);
  if (spec.p02.has_value() == spec.du.has_value())
    throw ScenarioError(
        "single interface: exactly one of p02 / du must be given");
  if (!(spec.p01 > params.kappa))
    throw ScenarioError("single interface: requires p01 > kappa");

  double p02;
  if (spec.p02) {
    p02 = *spec.p02;
    if (!(p02 > 0.0 && p02 < params.kappa))
      throw ScenarioError("single interface: requires 0 < p02 < kappa");
  } else {
    double du = *spec.du;
    if (!(du < 0.0)) throw ScenarioError("single interface: requires du < 0");
    // (p01 - p)(T^i(p) - 1) - du^2 is strictly decreasing on (0, kappa).
    auto h = [&](double p) {
      return (spec.p01 - p) * (specific_volume(p, lim) - 1.0) - du * du;
    };
    double lo = 1e-12 * params.kappa;
    double hi = params.kappa * (1.0 - 1e-12);
    if (!(h(hi) < 0.0 && h(lo) > 0.0))
      throw ScenarioError("single interface: |du| too large for this p01");
    p02 = bisect(h, lo, hi, 1e-14, 400, "single interface p02");
  }

  double tau2 = specific_volume(p02, lim);
  double du = -std::sqrt((spec.p01 - p02) * (tau2 - 1.0));
  double lambda = -du / (tau2 - 1.0);

  ScenarioProfile out;
  out.profile.xs = {0.0};
  out.profile.values = {State{spec.p01, spec.u01},
                        State{p02, spec.u01 + du}};
  out.interface_xs = {0.0};
  out.lambda_bar2 = lambda;
  return out;
}

ScenarioProfile build_single_interface_eps(const ScenarioProfile& limit_ref,
                                           double eps,
                                           const EosParams& params) {
  if (!(eps > 0.0))
    throw ScenarioError("single interface eps: requires eps > 0");
  if (limit_ref.profile.values.size() != 2)
    throw ScenarioError("single interface eps: malformed limit reference");
  EosParams prm = with_eps(params, eps);
  const State& l = limit_ref.profile.values[0];
  const State& r = limit_ref.profile.values[1];
  double du = -std::sqrt(jump_du_squared(l.p, r.p, prm));
  ScenarioProfile out = limit_ref;
  out.profile.values[1] = State{r.p, l.u + du};
  return out;
}

ScenarioProfile build_two_noninteracting(const TwoNonInteractingSpec& spec,
                                         double eps, const EosParams& params) {
  EosParams prm = with_eps(params, eps);
  if (!(spec.p1 < params.kappa && spec.p3 < params.kappa))
    throw ScenarioError("two non-interacting: outer pressures must be < kappa");
  if (!(spec.du > 0.0))
    throw ScenarioError("two non-interacting: requires du = u1 - u3 > 0");
  if (!(spec.x1 < spec.x2))
    throw ScenarioError("two non-interacting: requires x1 < x2");
  double u3 = spec.u1 - spec.du;

  // Middle state: right state of a 1-shock from (p1, u1) and left state of
  // a 2-shock to (p3, u3); F is strictly decreasing in p2.
  auto F = [&](double p2) {
    double from_left = spec.u1 - std::sqrt(jump_du_squared(spec.p1, p2, prm));
    double from_right = u3 + std::sqrt(jump_du_squared(p2, spec.p3, prm));
    return from_left - from_right;
  };
  double lo = params.kappa * (1.0 + 1e-10);
  if (!(F(lo) > 0.0))
    throw ScenarioError(
        "two non-interacting: shock loci do not intersect above kappa");
  double hi = 2.0 * params.kappa;
  int grow = 0;
  while (F(hi) > 0.0) {
    hi *= 2.0;
    if (++grow > 200)
      throw ScenarioError("two non-interacting: no congested intersection");
  }
  double p2 = bisect(F, lo, hi, 1e-14, 400, "two non-interacting p2");
  double u2 = spec.u1 - std::sqrt(jump_du_squared(spec.p1, p2, prm));

  ScenarioProfile out;
  out.profile.xs = {spec.x1, spec.x2};
  out.profile.values = {State{spec.p1, spec.u1}, State{p2, u2},
                        State{spec.p3, u3}};
  out.interface_xs = {spec.x1, spec.x2};
  out.lambda_bar2 = kNaN;
  return out;
}

ScenarioProfile build_two_interacting(const TwoInteractingSpec& spec,
                                      double eps, const EosParams& params) {
  EosParams prm = with_eps(params, eps);
  if (!(spec.left.p > params.kappa && spec.right.p > params.kappa))
    throw ScenarioError("two interacting: outer pressures must be > kappa");
  if (!(spec.left.u > spec.right.u))
    throw ScenarioError("two interacting: requires left.u > right.u");
  if (!(spec.x1 < spec.x2))
    throw ScenarioError("two interacting: requires x1 < x2");

  // Free middle state: right state of the 2-shock from `left` and left
  // state of the 1-shock to `right`; G is strictly increasing in pm.
  auto G = [&](double pm) {
    double from_left =
        spec.left.u - std::sqrt(jump_du_squared(spec.left.p, pm, prm));
    double from_right =
        spec.right.u + std::sqrt(jump_du_squared(pm, spec.right.p, prm));
    return from_left - from_right;
  };
  double hi = params.kappa * (1.0 - 1e-10);
  double lo = 1e-10 * params.kappa;
  if (!(G(hi) > 0.0 && G(lo) < 0.0))
    throw ScenarioError(
        "two interacting: shock loci do not intersect below kappa");
  double pm = bisect(G, lo, hi, 1e-14, 400, "two interacting pm");
  double um = spec.left.u - std::sqrt(jump_du_squared(spec.left.p, pm, prm));

  ScenarioProfile out;
  out.profile.xs = {spec.x1, spec.x2};
  out.profile.values = {spec.left, State{pm, um}, spec.right};
  out.interface_xs = {spec.x1, spec.x2};
  out.lambda_bar2 = kNaN;
  return out;
}

ScenarioProfile build_three_interfaces(const ThreeInterfacesSpec& spec,
                                       double eps, const EosParams& params) {
  ScenarioProfile pair = build_two_interacting(spec.pair, eps, params);
  if (!(spec.x3 > spec.pair.x2))
    throw ScenarioError("three interfaces: requires x3 > x2");
  if (!(spec.p4 < params.kappa))
    throw ScenarioError("three interfaces: requires p4 < kappa");
  EosParams prm = with_eps(params, eps);
  const State& r = pair.profile.values.back();
  double u4 = r.u - std::sqrt(jump_du_squared(r.p, spec.p4, prm));

  ScenarioProfile out = pair;
  out.profile.xs.push_back(spec.x3);
  out.profile.values.push_back(State{spec.p4, u4});
  out.interface_xs.push_back(spec.x3);
  return out;
}

ScenarioProfile build_scenario(const ScenarioSpec& spec, double eps,
                               const EosParams& params) {
  return std::visit(
      [&](const auto& s) -> ScenarioProfile {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, SingleInterfaceSpec>) {
          ScenarioProfile lim = build_single_interface_limit(s, params);
          if (eps == 0.0) return lim;
          return build_single_interface_eps(lim, eps, params);
        } else if constexpr (std::is_same_v<T, TwoNonInteractingSpec>) {
          return build_two_noninteracting(s, eps, params);
        } else if constexpr (std::is_same_v<T, TwoInteractingSpec>) {
          return build_two_interacting(s, eps, params);
        } else {
          return build_three_interfaces(s, eps, params);
        }
      },
      spec.variant);
}

Profile in_function(const Profile& datum, double interface_x,
                    const EosParams& params) {
  if (params.eps != 0.0)
    throw ScenarioError("in_function: defined for the limit law (eps = 0)");
  datum.validate();

  // Right trace at the interface; value_at is right-continuous, so a jump
  // sitting exactly at interface_x is resolved to its right state.
  const State& right = datum.value_at(interface_x);

  // The congested-side velocity (cells wholly left of the interface) must
  // be a single constant u_c = u(interface_x-).
  double u_c = datum.values.front().u;
  bool have_left_cell = false;
  for (std::size_t i = 0; i < datum.values.size(); ++i) {
    double cell_hi = (i < datum.xs.size())
                         ? datum.xs[i]
                         : std::numeric_limits<double>::infinity();
    if (cell_hi > interface_x) break;
    have_left_cell = true;
    if (std::abs(datum.values[i].u - u_c) > 1e-12)
      throw ScenarioError(
          "in_function: congested-side velocity is not constant");
  }
  if (!have_left_cell)
    throw ScenarioError("in_function: no jump at the interface position");

  double tau_r = specific_volume(right.p, params);
  if (!(tau_r > 1.0 + 1e-14))
    throw ScenarioError("in_function: degenerate right trace, T(p) = 1");
  double pc = right.p + (u_c - right.u) * (u_c - right.u) / (tau_r - 1.0);

  Profile out;
  out.values.push_back(State{pc, u_c});
  for (std::size_t i = 0; i < datum.xs.size(); ++i) {
    if (datum.xs[i] >= interface_x) {
      out.xs.push_back(datum.xs[i]);
      out.values.push_back(datum.values[i + 1]);
    }
  }
  if (out.xs.empty()) {
    out.xs.push_back(interface_x);
    out.values.push_back(right);
  }
  return out;
}

namespace {

// State reached from `base` along the forward Lax curve of `family` with a
// velocity jump du; the pressure jump is solved on the curve.
State locus_state_from_du(const State& base, WaveFamily family, double du,
                          const EosParams& prm) {
  double target = base.u + du;
  auto g = [&](double p) {
    return lax_curve_velocity(base, p, family, prm) - target;
  };
  // u is monotone in p along the curve (decreasing for family One,
  // increasing for family Two); bracket accordingly.
  bool upward = (family == WaveFamily::One) ? (du > 0.0) : (du < 0.0);
  double lo, hi;
  if (upward) {
    hi = base.p;
    lo = base.p * 0.5;
    int grow = 0;
    while (std::signbit(g(lo)) == std::signbit(g(hi))) {
      lo *= 0.5;
      if (++grow > 200 || lo < 1e-13)
        throw ScenarioError("perturb: velocity jump not reachable on locus");
    }
  } else {
    lo = base.p;
    hi = base.p * 2.0;
    int grow = 0;
    while (std::signbit(g(lo)) == std::signbit(g(hi))) {
      hi *= 2.0;
      if (++grow > 200)
        throw ScenarioError("perturb: velocity jump not reachable on locus");
    }
  }
  double p = bisect(g, lo, hi, 1e-14, 400, "perturb locus pressure");
  return State{p, lax_curve_velocity(base, p, family, prm)};
}

}  // namespace

double weighted_tv_profile(const Profile& prof, double interface_x,
                           const EosParams& params) {
  double inf = std::numeric_limits<double>::infinity();
  double tvp = tv_p(prof, -inf, interface_x) + tv_p(prof, interface_x, inf);
  double tvu1 = tv_u(prof, -inf, interface_x);
  double tvu2 = tv_u(prof, interface_x, inf);
  if (params.eps == 0.0)
    return tvp + tvu2 + (tvu1 == 0.0 ? 0.0 : inf);
  double w = std::pow(params.eps, -1.0 / (2.0 * params.gamma_c));
  return tvp + w * tvu1 + tvu2;
}

PerturbedDatum perturb(const ScenarioProfile& reference,
                       const PerturbationSpec& perturbation, double delta,
                       const EosParams& params) {
  if (reference.interface_xs.size() != 1)
    throw ScenarioError("perturb: supported for single-interface references");
  if (!(params.eps > 0.0))
    throw ScenarioError("perturb: requires eps > 0");
  double xif = reference.interface_xs[0];
  const State ref_left = reference.profile.values.front();
  const State ref_right = reference.profile.values.back();

  struct Insertion {
    double x;
    PerturbationJump jump;
  };
  std::vector<Insertion> ins;
  for (const auto& j : perturbation.congested_side) {
    if (!(j.offset < 0.0))
      throw ScenarioError("perturb: congested-side offsets must be < 0");
    ins.push_back({xif + j.offset, j});
  }
  for (const auto& j : perturbation.free_side) {
    if (!(j.offset > 0.0))
      throw ScenarioError("perturb: free-side offsets must be > 0");
    ins.push_back({xif + j.offset, j});
  }
  std::sort(ins.begin(), ins.end(),
            [](const Insertion& a, const Insertion& b) { return a.x < b.x; });
  for (std::size_t i = 0; i + 1 < ins.size(); ++i)
    if (!(ins[i].x < ins[i + 1].x))
      throw ScenarioError("perturb: insertion positions must be distinct");

  // Walk left to right; inserted jumps move along exact Lax loci, the
  // reference's own jumps land on the reference right states.
  Profile out;
  State cur = ref_left;
  out.values.push_back(cur);
  std::size_t ref_jump = 0;
  std::size_t k = 0;
  auto push = [&](double x, const State& s) {
    if (!out.xs.empty() && !(x > out.xs.back()))
      throw ScenarioError("perturb: insertion collides with a reference jump");
    out.xs.push_back(x);
    out.values.push_back(s);
    cur = s;
  };
  while (ref_jump < reference.profile.xs.size() || k < ins.size()) {
    bool take_ref = ref_jump < reference.profile.xs.size() &&
                    (k >= ins.size() ||
                     reference.profile.xs[ref_jump] <= ins[k].x);
    if (take_ref) {
      push(reference.profile.xs[ref_jump],
           reference.profile.values[ref_jump + 1]);
      ++ref_jump;
    } else {
      const auto& j = ins[k].jump;
      State next;
      if (j.kind == PerturbationJump::Kind::Pressure) {
        double p = cur.p + j.value;
        if (!(p > 0.0)) throw ScenarioError("perturb: jump exhausts pressure");
        next = State{p, lax_curve_velocity(cur, p, j.family, params)};
      } else {
        next = locus_state_from_du(cur, j.family, j.value, params);
      }
      push(ins[k].x, next);
      ++k;
    }
  }

  // Domain membership: state boxes and the weighted TV budget.
  auto box_violation = [&](const State& s, const State& c) {
    return std::abs(s.p - c.p) >= delta || std::abs(s.u - c.u) >= delta;
  };
  for (std::size_t i = 0; i < out.values.size(); ++i) {
    double cell_lo = (i == 0) ? -std::numeric_limits<double>::infinity()
                              : out.xs[i - 1];
    const State& ref = (cell_lo < xif) ? ref_left : ref_right;
    if (box_violation(out.values[i], ref))
      throw BudgetExceededError(
          "perturb: a state leaves the admissible box around the reference");
  }
  double wtv = weighted_tv_profile(out, xif, params);
  if (!(wtv < delta))
    throw BudgetExceededError(
        "perturb: weighted total variation " + format_double(wtv) +
        " exceeds the budget " + format_double(delta));

  return PerturbedDatum{std::move(out), wtv};
}

}  // namespace cwft
