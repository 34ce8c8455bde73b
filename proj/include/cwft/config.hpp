#ifndef CWFT_CONFIG_HPP
#define CWFT_CONFIG_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "cwft/diagnostics.hpp"
#include "cwft/eos.hpp"
#include "cwft/limit.hpp"
#include "cwft/scenarios.hpp"
#include "cwft/wft.hpp"

namespace cwft {

// Parse / validation failure carrying every violation, not just the first.
struct ConfigError : std::runtime_error {
  explicit ConfigError(std::vector<std::string> issues_);
  std::vector<std::string> issues;
};

struct RunConfig {
  EosParams eos;
  ClassifierThresholds thresholds;
  ScenarioSpec scenario;
  PerturbationSpec perturbation;
  SimConfig sim;
  GlimmWeights weights;
  std::optional<SweepConfig> sweep;
  double delta0 = 0.1;  // interface speed-band half-width
  std::string out_dir = "out";
  bool emit_csv = true;
  bool emit_json = true;
  bool emit_svg = false;
  long seed = 0;
};

// Reads the JSON run-configuration file, fills defaults (kappa = 1,
// gamma_i = gamma_c = 2, delta = 0.05, rho = rho_rule(eps), thresholds from
// the scenario pressures) and validates; throws ConfigError listing every
// violation.
RunConfig parse_config(const std::string& path);

}  // namespace cwft

#endif
