#ifndef CWFT_RIEMANN_HPP
#define CWFT_RIEMANN_HPP

#include <stdexcept>
#include <vector>

#include "cwft/eos.hpp"
#include "cwft/state.hpp"

namespace cwft {

enum class WaveFamily { One, Two };
enum class WaveKind { Shock, Rarefaction };

struct RiemannError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
// Thrown when the forward 1-curve and backward 2-curve do not intersect
// (vacuum-like or out-of-domain data).
struct NoIntersectionError : RiemannError {
  using RiemannError::RiemannError;
};

// Strength convention: sigma = p_right - p_left. Sign table:
//   1-shock sigma > 0, 1-rarefaction sigma < 0,
//   2-shock sigma < 0, 2-rarefaction sigma > 0.
// speed_lo == speed_hi for shocks; fan edge speeds for rarefactions.
struct Wave {
  WaveFamily family = WaveFamily::One;
  WaveKind kind = WaveKind::Shock;
  State left;
  State right;
  double strength = 0.0;
  double speed_lo = 0.0;
  double speed_hi = 0.0;
};

// Solution of a Riemann problem: at most two waves, family One first.
struct WaveFan {
  std::vector<Wave> waves;
  State middle;
};

// Velocity on the forward Lax curve of `family` through `left`, at pressure
// p. Shock branch closed-form, rarefaction branch by adaptive quadrature
// (absolute tolerance 1e-10).
double lax_curve_velocity(const State& left, double p, WaveFamily family,
                          const EosParams& params);

// d/dp of the above.
double lax_curve_velocity_deriv(const State& left, double p, WaveFamily family,
                                const EosParams& params);

// Velocity on the backward 2-curve through `right`: the u such that `right`
// lies on the forward 2-curve from (p, u).
double backward_two_curve_velocity(const State& right, double p,
                                   const EosParams& params);

// Rankine-Hugoniot residual (du)^2 + dp*dtau; zero for exact shocks.
double rh_residual(const State& left, const State& right,
                   const EosParams& params);

// Exact solver: middle pressure by monotone bracketing with Newton
// acceleration, then wave assembly per the sign table. Waves of strength
// below 1e-12 are dropped.
WaveFan solve_riemann(const State& left, const State& right,
                      const EosParams& params);

// RH speed -du/dtau of a discontinuity already satisfying the RH velocity
// relation (checked to 1e-8). Throws on |dtau| < 1e-14.
double shock_speed(const State& left, const State& right,
                   const EosParams& params);

// Lax admissibility: lambda_family(left) > speed > lambda_family(right)
// for shocks; rarefactions (and waves with |sigma| <= 1e-12) pass.
bool check_lax(const Wave& wave, const EosParams& params);

}  // namespace cwft

#endif
