#ifndef CWFT_WFT_HPP
#define CWFT_WFT_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "cwft/eos.hpp"
#include "cwft/riemann.hpp"
#include "cwft/state.hpp"

namespace cwft {

struct EngineError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A discontinuity travelling along the straight line
// x(t) = x0 + speed * (t - t0). Rarefaction fronts are the entropy-violating
// jumps produced by the splitting rule, each of strength at most rho.
struct Front {
  int id = -1;
  WaveFamily family = WaveFamily::One;
  WaveKind kind = WaveKind::Shock;
  bool is_interface = false;
  double t0 = 0.0;
  double x0 = 0.0;
  double speed = 0.0;
  State left;
  State right;
  double strength = 0.0;

  double position(double t) const { return x0 + speed * (t - t0); }
};

// Fronts in left-to-right chain order; side states chain exactly:
// fronts[k].right == fronts[k+1].left and fronts.front().left == leftmost.
struct FrontConfiguration {
  double time = 0.0;
  State leftmost;
  std::vector<Front> fronts;

  void validate_chain() const;  // throws EngineError on a broken invariant
};

struct SimConfig {
  double rho = 1e-3;            // rarefaction splitting / speed accuracy
  double t_final = 1.0;
  long max_interactions = 1000000;
  std::string tie_break = "left_to_right";
  double speed_tolerance = 1e-9;  // time tolerance grouping coincident events
};

struct InteractionWaveInfo {
  WaveFamily family = WaveFamily::One;
  WaveKind kind = WaveKind::Shock;
  double strength = 0.0;
  bool is_interface = false;
};

struct InteractionRecord {
  double time = 0.0;
  double position = 0.0;
  std::vector<InteractionWaveInfo> incoming;  // in spatial order
  std::vector<InteractionWaveInfo> outgoing;  // in spatial order
  // Filled by diagnostics::annotate_glimm; NaN until then.
  double glimm_before = 0.0;
  double glimm_after = 0.0;
};

struct Event {
  double time = 0.0;
  std::vector<std::size_t> front_indices;  // contiguous run in chain order
};

// Piecewise-linear interface trajectory; points hold the breakpoints
// (t, x), closed with the final point at the run's end time.
struct InterfacePath {
  WaveFamily family = WaveFamily::Two;
  std::vector<std::pair<double, double>> points;
  bool alive = true;

  double position(double t) const;
  // slope of the segment containing t (right-continuous at breakpoints)
  double slope(double t) const;
  std::vector<double> segment_slopes() const;
};

struct RunResult {
  // history[0] is the discretized datum; history[k] the configuration just
  // after the k-th interaction.
  std::vector<FrontConfiguration> history;
  std::vector<InteractionRecord> records;
  std::vector<InterfacePath> interface_paths;
  double end_time = 0.0;
  bool completed = true;
};

// Discretizes a piecewise-constant datum: solves the Riemann problem at
// every jump, splits rarefactions of strength above rho into equal-increment
// pieces moving at the characteristic speed of their right state, and flags
// the strongest shock born at each position in interface_xs.
FrontConfiguration discretize_initial_datum(
    const Profile& datum, const std::vector<double>& interface_xs,
    const SimConfig& config, const EosParams& params);

// Earliest pairwise crossing strictly after config.time among adjacent
// fronts, with crossings within the grouping tolerance merged into one
// multi-front event; nullopt if nothing crosses before t_final.
std::optional<Event> next_event(const FrontConfiguration& config,
                                const SimConfig& sim);

// Replaces the colliding fronts by the solution of the Riemann problem
// between the outermost states. Outgoing rarefactions are split unless an
// incoming wave is a rarefaction of the same family, in which case the
// outgoing rarefaction stays a single jump moving at the characteristic
// speed of its right state. The interface flag passes to the outgoing
// shock of the same family.
std::pair<FrontConfiguration, InteractionRecord> resolve_interaction(
    const FrontConfiguration& config, const Event& event,
    const SimConfig& sim, const EosParams& params);

// Event loop until t_final or max_interactions.
RunResult run(const Profile& datum, const std::vector<double>& interface_xs,
              const SimConfig& sim, const EosParams& params);

// Exact reconstruction of the piecewise-constant solution at time t.
Profile sample_solution(const RunResult& result, double t);

}  // namespace cwft

#endif
