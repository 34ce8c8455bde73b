#ifndef CWFT_SCENARIOS_HPP
#define CWFT_SCENARIOS_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "cwft/eos.hpp"
#include "cwft/riemann.hpp"
#include "cwft/state.hpp"

namespace cwft {

struct ScenarioError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct BudgetExceededError : ScenarioError {
  using ScenarioError::ScenarioError;
};

// Reference interface datum: congested left state (p01, u01), free right
// state below kappa. Exactly one of p02 / du must be given; the other is
// solved from the jump relation (du)^2 = (p01 - p02)(T^i(p02) - 1).
struct SingleInterfaceSpec {
  double p01 = 1.5;
  double u01 = 1.0;
  std::optional<double> p02;
  std::optional<double> du;  // u02 - u01 < 0
};

// Free outer states around a congested middle: 1-shock interface at x1,
// 2-shock interface at x2. du = u1 - u3 > 0 splits symmetrically through
// the solved middle state.
struct TwoNonInteractingSpec {
  double p1 = 0.5;
  double p3 = 0.5;
  double u1 = 1.0;
  double du = 2.0;
  double x1 = -0.5;
  double x2 = 0.5;
};

// Congested outer states around a free middle: 2-shock interface at x1
// left of a 1-shock interface at x2; the interfaces collide.
struct TwoInteractingSpec {
  State left{1.5, 0.8};
  State right{1.5, -0.8};
  double x1 = -0.5;
  double x2 = 0.5;
};

// Two interacting interfaces followed by a third 2-shock interface down to
// a free right state at pressure p4. Fixed-eps simulation only.
struct ThreeInterfacesSpec {
  TwoInteractingSpec pair;
  double p4 = 0.5;
  double x3 = 1.5;
};

struct ScenarioSpec {
  std::variant<SingleInterfaceSpec, TwoNonInteractingSpec, TwoInteractingSpec,
               ThreeInterfacesSpec>
      variant;
  double delta = 0.05;  // perturbation budget
  long seed = 0;        // carried into reports; builders are deterministic
};

// A built reference datum. lambda_bar2 is the limit interface speed for the
// single-interface case (NaN otherwise).
struct ScenarioProfile {
  Profile profile;
  std::vector<double> interface_xs;
  double lambda_bar2;
};

ScenarioProfile build_single_interface_limit(const SingleInterfaceSpec& spec,
                                             const EosParams& params);

// eps-level approximation: pressures kept, congested-side velocity kept,
// free-side velocity re-solved from the eps jump relation.
ScenarioProfile build_single_interface_eps(const ScenarioProfile& limit_ref,
                                           double eps,
                                           const EosParams& params);

ScenarioProfile build_two_noninteracting(const TwoNonInteractingSpec& spec,
                                         double eps, const EosParams& params);

ScenarioProfile build_two_interacting(const TwoInteractingSpec& spec,
                                      double eps, const EosParams& params);

ScenarioProfile build_three_interfaces(const ThreeInterfacesSpec& spec,
                                       double eps, const EosParams& params);

// Builds the scenario at the given eps (eps == 0 gives the limit datum).
ScenarioProfile build_scenario(const ScenarioSpec& spec, double eps,
                               const EosParams& params);

// Redefinition of the congested-side initial datum forced by the infinite
// propagation speed in the congested region: the region left of the
// interface is replaced by the constant pair (p_in_c, u_in_c) with
//   p_in_c = p(x+) + (u_in_c - u(x+))^2 / (T(p(x+)) - 1).
// Requires the limit law (eps == 0) and a constant congested-side velocity.
Profile in_function(const Profile& datum, double interface_x,
                    const EosParams& params);

// One inserted jump on an exact Lax locus. Pressure-kind strength is
// sigma = p_right - p_left; velocity-kind is u_right - u_left, with the
// pressure jump solved on the curve.
struct PerturbationJump {
  double offset = 0.0;  // relative to the interface; sign selects the side
  WaveFamily family = WaveFamily::One;
  enum class Kind { Pressure, Velocity } kind = Kind::Pressure;
  double value = 0.0;
};

struct PerturbationSpec {
  std::vector<PerturbationJump> free_side;       // offsets > 0
  std::vector<PerturbationJump> congested_side;  // offsets < 0
  bool empty() const { return free_side.empty() && congested_side.empty(); }
};

struct PerturbedDatum {
  Profile profile;
  double consumed_budget = 0.0;  // weighted total variation of the datum
};

// Inserts the requested jumps into a single-interface reference datum and
// verifies membership in the admissible domain: state boxes of half-width
// delta around the reference states and weighted TV strictly below delta.
PerturbedDatum perturb(const ScenarioProfile& reference,
                       const PerturbationSpec& perturbation, double delta,
                       const EosParams& params);

// Weighted total variation sum_i TV(p, I_i) + eps^{-1/(2 gamma_c)} TV(u, I_1)
// + TV(u, I_2); the interface jump itself is assigned to neither side.
double weighted_tv_profile(const Profile& prof, double interface_x,
                           const EosParams& params);

}  // namespace cwft

#endif
