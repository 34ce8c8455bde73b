#include "cwft/config.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace cwft {

namespace {

std::string join_issues(const std::vector<std::string>& issues) {
  std::ostringstream os;
  os << "configuration invalid (" << issues.size() << " issue"
     << (issues.size() == 1 ? "" : "s") << "):";
  for (const auto& s : issues) os << "\n  - " << s;
  return os.str();
}

}  // namespace

ConfigError::ConfigError(std::vector<std::string> issues_)
    : std::runtime_error(join_issues(issues_)), issues(std::move(issues_)) {}

namespace {

using nlohmann::json;

class Reader {
 public:
  explicit Reader(std::vector<std::string>& issues) : issues_(issues) {}

  double number(const json& j, const std::string& key, double fallback) {
    if (!j.contains(key)) return fallback;
    if (!j.at(key).is_number()) {
      issues_.push_back(key + ": expected a number");
      return fallback;
    }
    return j.at(key).get<double>();
  }

  long integer(const json& j, const std::string& key, long fallback) {
    if (!j.contains(key)) return fallback;
    if (!j.at(key).is_number_integer()) {
      issues_.push_back(key + ": expected an integer");
      return fallback;
    }
    return j.at(key).get<long>();
  }

  std::string text(const json& j, const std::string& key,
                   const std::string& fallback) {
    if (!j.contains(key)) return fallback;
    if (!j.at(key).is_string()) {
      issues_.push_back(key + ": expected a string");
      return fallback;
    }
    return j.at(key).get<std::string>();
  }

  void add(const std::string& issue) { issues_.push_back(issue); }

 private:
  std::vector<std::string>& issues_;
};

WaveFamily parse_family(const json& j, Reader& rd, const std::string& where) {
  long f = rd.integer(j, "family", 1);
  if (f != 1 && f != 2) rd.add(where + ".family: must be 1 or 2");
  return f == 1 ? WaveFamily::One : WaveFamily::Two;
}

std::vector<PerturbationJump> parse_jumps(const json& arr, Reader& rd,
                                          const std::string& where) {
  std::vector<PerturbationJump> jumps;
  if (!arr.is_array()) {
    rd.add(where + ": expected an array");
    return jumps;
  }
  for (std::size_t i = 0; i < arr.size(); ++i) {
    const json& j = arr[i];
    std::string at = where + "[" + std::to_string(i) + "]";
    PerturbationJump jump;
    jump.offset = rd.number(j, "offset", 0.0);
    jump.family = parse_family(j, rd, at);
    std::string kind = rd.text(j, "kind", "pressure");
    if (kind == "pressure") {
      jump.kind = PerturbationJump::Kind::Pressure;
    } else if (kind == "velocity") {
      jump.kind = PerturbationJump::Kind::Velocity;
    } else {
      rd.add(at + ".kind: must be \"pressure\" or \"velocity\"");
    }
    jump.value = rd.number(j, "strength", 0.0);
    jumps.push_back(jump);
  }
  return jumps;
}

void parse_scenario(const json& j, Reader& rd, RunConfig& cfg) {
  std::string type = rd.text(j, "type", "");
  cfg.scenario.delta = rd.number(j, "delta", 0.05);
  cfg.scenario.seed = rd.integer(j, "seed", cfg.seed);
  if (type == "single_interface") {
    SingleInterfaceSpec s;
    s.p01 = rd.number(j, "p01", 1.5);
    s.u01 = rd.number(j, "u01", 1.0);
    if (j.contains("p02")) s.p02 = rd.number(j, "p02", 0.5);
    if (j.contains("du")) s.du = rd.number(j, "du", -0.5);
    if (j.contains("p02") == j.contains("du"))
      rd.add("scenario: single_interface needs exactly one of p02 / du");
    cfg.scenario.variant = s;
  } else if (type == "two_noninteracting") {
    TwoNonInteractingSpec s;
    s.p1 = rd.number(j, "p1", 0.5);
    s.p3 = rd.number(j, "p3", 0.5);
    s.u1 = rd.number(j, "u1", 1.0);
    s.du = rd.number(j, "du", 2.0);
    s.x1 = rd.number(j, "x1", -0.5);
    s.x2 = rd.number(j, "x2", 0.5);
    cfg.scenario.variant = s;
  } else if (type == "two_interacting") {
    TwoInteractingSpec s;
    s.left = State{rd.number(j, "p_left", 1.5), rd.number(j, "u_left", 0.8)};
    s.right =
        State{rd.number(j, "p_right", 1.5), rd.number(j, "u_right", -0.8)};
    s.x1 = rd.number(j, "x1", -0.5);
    s.x2 = rd.number(j, "x2", 0.5);
    cfg.scenario.variant = s;
  } else if (type == "three_interfaces") {
    ThreeInterfacesSpec s;
    s.pair.left =
        State{rd.number(j, "p_left", 1.5), rd.number(j, "u_left", 0.8)};
    s.pair.right =
        State{rd.number(j, "p_right", 1.5), rd.number(j, "u_right", -0.8)};
    s.pair.x1 = rd.number(j, "x1", -0.5);
    s.pair.x2 = rd.number(j, "x2", 0.5);
    s.p4 = rd.number(j, "p4", 0.5);
    s.x3 = rd.number(j, "x3", 1.5);
    cfg.scenario.variant = s;
  } else {
    rd.add("scenario.type: must be one of single_interface, "
           "two_noninteracting, two_interacting, three_interfaces");
  }
}

// Default classification bands around the scenario reference pressures,
// clipped to stay strictly inside (0, kappa) and (kappa, inf).
ClassifierThresholds default_thresholds(const RunConfig& cfg) {
  double kappa = cfg.eos.kappa;
  double d0 = cfg.delta0;
  double p_free = 0.5 * kappa;
  double p_cong = 1.5 * kappa;
  if (const auto* s = std::get_if<SingleInterfaceSpec>(&cfg.scenario.variant)) {
    if (s->p02) p_free = *s->p02;
    p_cong = s->p01;
  } else if (const auto* s =
                 std::get_if<TwoNonInteractingSpec>(&cfg.scenario.variant)) {
    p_free = 0.5 * (s->p1 + s->p3);
  } else if (const auto* s =
                 std::get_if<TwoInteractingSpec>(&cfg.scenario.variant)) {
    p_cong = 0.5 * (s->left.p + s->right.p);
  } else if (const auto* s =
                 std::get_if<ThreeInterfacesSpec>(&cfg.scenario.variant)) {
    p_cong = 0.5 * (s->pair.left.p + s->pair.right.p);
  }
  ClassifierThresholds th;
  th.pf_lo = std::max(0.25 * p_free, p_free - 2.0 * d0);
  th.pf_hi = std::min(0.5 * (p_free + kappa), p_free + 2.0 * d0);
  th.pc_lo = std::max(0.5 * (kappa + p_cong), p_cong - 2.0 * d0);
  th.pc_hi = p_cong + 2.0 * d0;
  return th;
}

}  // namespace

RunConfig parse_config(const std::string& path) {
  std::ifstream in(path);
  std::vector<std::string> issues;
  if (!in) throw ConfigError({"cannot open " + path});

  json root;
  try {
    root = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ConfigError({std::string("parse error: ") + e.what()});
  }

  Reader rd(issues);
  RunConfig cfg;
  cfg.seed = rd.integer(root, "seed", 0);
  cfg.delta0 = rd.number(root, "delta0", 0.1);

  if (root.contains("eos")) {
    const json& j = root.at("eos");
    cfg.eos.kappa = rd.number(j, "kappa", 1.0);
    cfg.eos.eps = rd.number(j, "eps", 0.1);
    cfg.eos.gamma_i = rd.number(j, "gamma_i", 2.0);
    cfg.eos.gamma_c = rd.number(j, "gamma_c", 2.0);
  }
  try {
    cfg.eos.validate();
  } catch (const std::exception& e) {
    rd.add(e.what());
  }

  if (root.contains("scenario")) {
    parse_scenario(root.at("scenario"), rd, cfg);
  } else {
    rd.add("scenario: required");
  }

  if (root.contains("thresholds")) {
    const json& j = root.at("thresholds");
    cfg.thresholds.pf_lo = rd.number(j, "pf_lo", cfg.thresholds.pf_lo);
    cfg.thresholds.pf_hi = rd.number(j, "pf_hi", cfg.thresholds.pf_hi);
    cfg.thresholds.pc_lo = rd.number(j, "pc_lo", cfg.thresholds.pc_lo);
    cfg.thresholds.pc_hi = rd.number(j, "pc_hi", cfg.thresholds.pc_hi);
  } else {
    cfg.thresholds = default_thresholds(cfg);
  }
  try {
    cfg.thresholds.validate(cfg.eos.kappa);
  } catch (const std::exception& e) {
    rd.add(e.what());
  }

  if (root.contains("perturbation")) {
    const json& j = root.at("perturbation");
    if (j.contains("free_side"))
      cfg.perturbation.free_side =
          parse_jumps(j.at("free_side"), rd, "perturbation.free_side");
    if (j.contains("congested_side"))
      cfg.perturbation.congested_side = parse_jumps(
          j.at("congested_side"), rd, "perturbation.congested_side");
  }

  double default_rho_scale = cfg.scenario.delta / 10.0;
  if (root.contains("sim")) {
    const json& j = root.at("sim");
    cfg.sim.rho = rd.number(j, "rho", default_rho_scale * cfg.eos.eps);
    cfg.sim.t_final = rd.number(j, "t_final", 1.0);
    cfg.sim.max_interactions =
        rd.integer(j, "max_interactions", cfg.sim.max_interactions);
    cfg.sim.tie_break = rd.text(j, "tie_break", "left_to_right");
    cfg.sim.speed_tolerance =
        rd.number(j, "speed_tolerance", cfg.sim.speed_tolerance);
  } else {
    cfg.sim.rho = default_rho_scale * cfg.eos.eps;
  }
  if (!(cfg.sim.rho > 0.0)) rd.add("sim.rho: must be > 0");
  if (!(cfg.sim.t_final > 0.0)) rd.add("sim.t_final: must be > 0");
  if (cfg.sim.max_interactions <= 0) rd.add("sim.max_interactions: must be > 0");
  if (cfg.sim.tie_break != "left_to_right")
    rd.add("sim.tie_break: only \"left_to_right\" is implemented");

  if (root.contains("weights")) {
    const json& j = root.at("weights");
    cfg.weights.k_c = rd.number(j, "k_c", 2.0);
    cfg.weights.k_if = rd.number(j, "k_if", 10.0);
    cfg.weights.k_ff = rd.number(j, "k_ff", 5.0);
    cfg.weights.k_cc = rd.number(j, "k_cc", 5.0);
  }
  try {
    cfg.weights.validate();
  } catch (const std::exception& e) {
    rd.add(e.what());
  }

  if (root.contains("sweep")) {
    const json& j = root.at("sweep");
    SweepConfig sw;
    if (j.contains("eps_values") && j.at("eps_values").is_array()) {
      for (const auto& v : j.at("eps_values")) {
        if (v.is_number()) {
          sw.eps_values.push_back(v.get<double>());
        } else {
          rd.add("sweep.eps_values: entries must be numbers");
        }
      }
    } else {
      rd.add("sweep.eps_values: required array");
    }
    sw.rho_rule.scale = default_rho_scale;
    sw.rho_rule.exponent = 1.0;
    if (j.contains("rho_rule")) {
      const json& r = j.at("rho_rule");
      sw.rho_rule.scale = rd.number(r, "scale", sw.rho_rule.scale);
      sw.rho_rule.exponent = rd.number(r, "exponent", 1.0);
    }
    sw.t_final = rd.number(j, "t_final", cfg.sim.t_final);
    try {
      sw.validate();
    } catch (const std::exception& e) {
      rd.add(e.what());
    }
    cfg.sweep = std::move(sw);
  }

  if (root.contains("output")) {
    const json& j = root.at("output");
    cfg.out_dir = rd.text(j, "dir", cfg.out_dir);
    if (j.contains("emit") && j.at("emit").is_array()) {
      cfg.emit_csv = cfg.emit_json = cfg.emit_svg = false;
      for (const auto& v : j.at("emit")) {
        std::string s = v.is_string() ? v.get<std::string>() : "";
        if (s == "csv") {
          cfg.emit_csv = true;
        } else if (s == "json") {
          cfg.emit_json = true;
        } else if (s == "svg") {
          cfg.emit_svg = true;
        } else {
          rd.add("output.emit: unknown format \"" + s + "\"");
        }
      }
    }
  }

  if (!issues.empty()) throw ConfigError(std::move(issues));
  return cfg;
}

}  // namespace cwft
