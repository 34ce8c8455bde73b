#ifndef CWFT_DIAGNOSTICS_HPP
#define CWFT_DIAGNOSTICS_HPP

#include <array>
#include <string>
#include <vector>

#include "cwft/eos.hpp"
#include "cwft/scenarios.hpp"
#include "cwft/wft.hpp"

namespace cwft {

// Weights of the Glimm functional
//   Y = sigma_if + sum_{free} |s| + k_c sum_{cong} |s|
//       + k_if Q_if + k_ff Q_ff + k_cc Q_cc,
// with Q_if = |sigma_if| sum_{free} |s| and Q_ff, Q_cc the sums of
// |s_a s_b| over unordered pairs on the free / congested side.
struct GlimmWeights {
  double k_c = 2.0;
  double k_if = 10.0;
  double k_ff = 5.0;
  double k_cc = 5.0;

  void validate() const;  // k_if > k_c > 1, all positive
};

struct GlimmBreakdown {
  double interface_strength = 0.0;  // signed p_right - p_left of the interface
  double linear_free = 0.0;
  double linear_congested = 0.0;
  double q_if = 0.0;
  double q_ff = 0.0;
  double q_cc = 0.0;
  double total = 0.0;
};

// Requires exactly one flagged interface front in the configuration.
GlimmBreakdown glimm(const FrontConfiguration& config,
                     const GlimmWeights& weights);

// Fills glimm_before / glimm_after of every record from the run history.
void annotate_glimm(RunResult& result, const GlimmWeights& weights);

// Weighted total variation of a piecewise-constant profile (the interface
// jump itself belongs to neither one-sided term).
double weighted_tv(const Profile& prof, double interface_x,
                   const EosParams& params);

struct InteractionAudit {
  struct Category {
    double max_ratio = 0.0;
    std::size_t count = 0;
  };
  Category two_wave_mixed;          // 1-wave against 2-wave, no interface
  Category two_wave_same;           // same family, no interface
  Category interface_from_free;     // small wave arrives from the free side
  Category interface_from_congested;
  std::size_t skipped = 0;          // tiny denominators / unclassifiable
  double free_reflection_max = 0.0; // strength reflected into the free side
};

InteractionAudit interaction_constant_audit(
    const std::vector<InteractionRecord>& records);

struct TestGridSpec {
  int nt = 32;
  int nx = 32;
};

struct WeakResiduals {
  double mass = 0.0;
  double momentum = 0.0;
};

// Max over tensor-product hat test functions of the two weak-form pairings.
// The per-front line integrals are evaluated exactly (piecewise-quadratic
// Simpson), so single-shock runs come out at rounding level.
WeakResiduals weak_residual(const RunResult& result, const TestGridSpec& grid,
                            const EosParams& params);

// Most negative pairing of the physical energy pair (eta, q) = (u^2/2 +
// Pi(tau), p u) against nonnegative hats; >= -tol certifies admissibility.
double entropy_residual(const RunResult& result, const TestGridSpec& grid,
                        const EosParams& params);

struct LipschitzModuli {
  double u_whole = 0.0;          // ||u(t)-u(s)||_L1(R) / (t-s)
  double p_free = 0.0;           // ||p||_L1(I2) / (t-s)
  double p_congested = 0.0;      // eps^{1/(2 gc)} ||p||_L1(I1) / (t-s)
  double tau_congested = 0.0;    // eps^{-1/(2 gc)} ||tau||_L1(I1) / (t-s)
};

LipschitzModuli lipschitz_time_moduli(
    const RunResult& result, const std::vector<std::pair<double, double>>& pairs,
    const EosParams& params);

// Piecewise-constant trace along x = path(t) + offset with exact switch
// times; `state` holds from `t` to the next piece.
struct TracePiece {
  double t = 0.0;
  State state;
  double tau = 0.0;
};

std::vector<TracePiece> trace_pieces(const RunResult& result,
                                     const InterfacePath& path, double offset,
                                     const EosParams& params);

struct TraceSeries {
  double offset = 0.0;
  std::vector<std::array<double, 4>> samples;  // (t, p, u, tau)
  double tv_p = 0.0;
  double tv_u = 0.0;
  double tv_tau = 0.0;
};

// Trace along the run's own (single) interface path.
TraceSeries trace(const RunResult& result, double offset,
                  const std::vector<double>& times, const EosParams& params);

// L1-in-time distance between two trace components over [0, T].
double trace_l1_diff(const std::vector<TracePiece>& a,
                     const std::vector<TracePiece>& b, double T,
                     double (*component)(const TracePiece&));

struct DiagnosticsOptions {
  bool residuals = true;
  TestGridSpec grid;
  std::vector<double> trace_offsets;  // empty = skip traces
  int lipschitz_samples = 8;
};

struct DiagnosticsReport {
  std::vector<double> glimm_times;
  std::vector<GlimmBreakdown> glimm_series;
  bool glimm_monotone = true;
  double glimm_worst_increase = 0.0;
  InteractionAudit audit;
  WeakResiduals weak;
  double entropy_min = 0.0;
  LipschitzModuli lipschitz;
  std::vector<TraceSeries> traces;
};

DiagnosticsReport diagnose(RunResult& result, const GlimmWeights& weights,
                           const EosParams& params,
                           const DiagnosticsOptions& options);

std::string diagnostics_to_json(const DiagnosticsReport& report);

}  // namespace cwft

#endif
