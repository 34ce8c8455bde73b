#include "cwft/artifacts.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <limits>

#include "cwft/numerics.hpp"
#include "json.hpp"

namespace cwft {

namespace {

namespace fs = std::filesystem;
using nlohmann::ordered_json;

int log_level() {
  const char* env = std::getenv("CWFT_LOG");
  if (!env) return 1;
  std::string v(env);
  if (v == "quiet") return 0;
  if (v == "debug") return 2;
  return 1;
}

void log_info(const std::string& msg) {
  if (log_level() >= 1) std::cerr << "[cwft] " << msg << "\n";
}

struct SegmentRow {
  const Front* front;
  double t0, x0, t1, x1;
};

std::vector<SegmentRow> segment_rows(const RunResult& result) {
  std::vector<SegmentRow> rows;
  for (std::size_t k = 0; k < result.history.size(); ++k) {
    const FrontConfiguration& cfg = result.history[k];
    double ta = cfg.time;
    double tb = (k + 1 < result.history.size()) ? result.history[k + 1].time
                                                : result.end_time;
    if (!(tb > ta)) continue;
    for (const Front& f : cfg.fronts) {
      // report each front once per slab only if it was born in this slab or
      // the slab follows an event (front sets can change only at events)
      rows.push_back({&f, ta, f.position(ta), tb, f.position(tb)});
    }
  }
  // merge rows of the same front id across consecutive slabs
  std::vector<SegmentRow> merged;
  for (const auto& r : rows) {
    if (!merged.empty() && merged.back().front->id == r.front->id &&
        merged.back().front->speed == r.front->speed &&
        merged.back().t1 == r.t0) {
      merged.back().t1 = r.t1;
      merged.back().x1 = r.x1;
    } else {
      merged.push_back(r);
    }
  }
  return merged;
}

}  // namespace

void write_fronts_csv(const RunResult& result, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  out << "id,family,kind,t0,x0,t1,x1,p_left,u_left,p_right,u_right,strength,"
         "is_interface\n";
  for (const auto& r : segment_rows(result)) {
    const Front& f = *r.front;
    out << f.id << ',' << (f.family == WaveFamily::One ? 1 : 2) << ','
        << (f.kind == WaveKind::Shock ? "shock" : "rarefaction") << ','
        << format_double(r.t0) << ',' << format_double(r.x0) << ','
        << format_double(r.t1) << ',' << format_double(r.x1) << ','
        << format_double(f.left.p) << ',' << format_double(f.left.u) << ','
        << format_double(f.right.p) << ',' << format_double(f.right.u) << ','
        << format_double(f.strength) << ',' << (f.is_interface ? 1 : 0)
        << '\n';
  }
}

void write_xt_svg(const RunResult& result, const std::string& path) {
  auto rows = segment_rows(result);
  double x_lo = -1.0, x_hi = 1.0;
  if (!rows.empty()) {
    x_lo = std::numeric_limits<double>::infinity();
    x_hi = -x_lo;
    for (const auto& r : rows) {
      x_lo = std::min({x_lo, r.x0, r.x1});
      x_hi = std::max({x_hi, r.x0, r.x1});
    }
  }
  double pad = 0.05 * std::max(x_hi - x_lo, 1e-9);
  x_lo -= pad;
  x_hi += pad;
  double T = std::max(result.end_time, 1e-12);

  const double W = 720.0, H = 540.0, m = 50.0;
  auto X = [&](double x) { return m + (x - x_lo) / (x_hi - x_lo) * (W - 2 * m); };
  auto Y = [&](double t) { return H - m - t / T * (H - 2 * m); };

  std::ofstream out(path, std::ios::binary);
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << W
      << "\" height=\"" << H << "\" viewBox=\"0 0 " << W << " " << H
      << "\">\n";
  out << "<rect width=\"" << W << "\" height=\"" << H
      << "\" fill=\"white\"/>\n";
  // axes with a few ticks
  out << "<line x1=\"" << m << "\" y1=\"" << H - m << "\" x2=\"" << W - m
      << "\" y2=\"" << H - m << "\" stroke=\"black\"/>\n";
  out << "<line x1=\"" << m << "\" y1=\"" << H - m << "\" x2=\"" << m
      << "\" y2=\"" << m << "\" stroke=\"black\"/>\n";
  for (int i = 0; i <= 4; ++i) {
    double x = x_lo + (x_hi - x_lo) * i / 4.0;
    double t = T * i / 4.0;
    out << "<line x1=\"" << X(x) << "\" y1=\"" << H - m << "\" x2=\"" << X(x)
        << "\" y2=\"" << H - m + 5 << "\" stroke=\"black\"/>\n";
    out << "<text x=\"" << X(x) << "\" y=\"" << H - m + 18
        << "\" font-size=\"10\" text-anchor=\"middle\">" << format_double(x)
        << "</text>\n";
    out << "<line x1=\"" << m - 5 << "\" y1=\"" << Y(t) << "\" x2=\"" << m
        << "\" y2=\"" << Y(t) << "\" stroke=\"black\"/>\n";
    out << "<text x=\"" << m - 8 << "\" y=\"" << Y(t) + 3
        << "\" font-size=\"10\" text-anchor=\"end\">" << format_double(t)
        << "</text>\n";
  }
  for (const auto& r : rows) {
    const Front& f = *r.front;
    const char* color = f.family == WaveFamily::One ? "#1f77b4" : "#d62728";
    double width = f.is_interface ? 3.0 : (f.kind == WaveKind::Shock ? 1.2 : 0.6);
    if (f.is_interface) color = "#000000";
    out << "<line x1=\"" << X(r.x0) << "\" y1=\"" << Y(r.t0) << "\" x2=\""
        << X(r.x1) << "\" y2=\"" << Y(r.t1) << "\" stroke=\"" << color
        << "\" stroke-width=\"" << width << "\"/>\n";
  }
  out << "</svg>\n";
}

namespace {

ordered_json scenario_json(const ScenarioSpec& spec) {
  ordered_json j;
  std::visit(
      [&](const auto& s) {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, SingleInterfaceSpec>) {
          j["type"] = "single_interface";
          j["p01"] = s.p01;
          j["u01"] = s.u01;
          if (s.p02) j["p02"] = *s.p02;
          if (s.du) j["du"] = *s.du;
        } else if constexpr (std::is_same_v<T, TwoNonInteractingSpec>) {
          j["type"] = "two_noninteracting";
          j["p1"] = s.p1;
          j["p3"] = s.p3;
          j["u1"] = s.u1;
          j["du"] = s.du;
          j["x1"] = s.x1;
          j["x2"] = s.x2;
        } else if constexpr (std::is_same_v<T, TwoInteractingSpec>) {
          j["type"] = "two_interacting";
          j["p_left"] = s.left.p;
          j["u_left"] = s.left.u;
          j["p_right"] = s.right.p;
          j["u_right"] = s.right.u;
          j["x1"] = s.x1;
          j["x2"] = s.x2;
        } else {
          j["type"] = "three_interfaces";
          j["p_left"] = s.pair.left.p;
          j["u_left"] = s.pair.left.u;
          j["p_right"] = s.pair.right.p;
          j["u_right"] = s.pair.right.u;
          j["x1"] = s.pair.x1;
          j["x2"] = s.pair.x2;
          j["p4"] = s.p4;
          j["x3"] = s.x3;
        }
      },
      spec.variant);
  j["delta"] = spec.delta;
  j["seed"] = spec.seed;
  return j;
}

struct SingleRunOutput {
  RunResult result;
  double lambda_bar2 = 0.0;
  double consumed_budget = 0.0;
  bool glimm_ok = true;
  bool band_ok = true;
};

SingleRunOutput run_one(const RunConfig& cfg, double eps, double rho,
                        double t_final, const std::string& dir) {
  EosParams params = cfg.eos;
  params.eps = eps;
  ScenarioProfile ref = build_scenario(cfg.scenario, eps, params);
  Profile datum = ref.profile;
  double consumed = 0.0;
  if (!cfg.perturbation.empty()) {
    PerturbedDatum pd = perturb(ref, cfg.perturbation, cfg.scenario.delta, params);
    datum = std::move(pd.profile);
    consumed = pd.consumed_budget;
  }
  SimConfig sim = cfg.sim;
  sim.rho = rho;
  sim.t_final = t_final;

  SingleRunOutput out;
  out.lambda_bar2 = ref.lambda_bar2;
  out.consumed_budget = consumed;
  out.result = run(datum, ref.interface_xs, sim, params);

  bool single_if = out.result.interface_paths.size() == 1;
  DiagnosticsOptions opts;
  opts.residuals = out.result.records.size() < 4000;
  double domain_width = 1.0;
  if (datum.xs.size() >= 1)
    domain_width =
        std::max(1.0, datum.xs.back() - datum.xs.front() + 1.0);
  opts.trace_offsets = {0.05 * domain_width, -0.05 * domain_width};
  DiagnosticsReport rep = diagnose(out.result, cfg.weights, params, opts);
  out.glimm_ok = rep.glimm_monotone;

  ordered_json report;
  report["schema_version"] = 1;
  report["eps"] = eps;
  report["rho"] = rho;
  report["t_final"] = t_final;
  report["seed"] = cfg.seed;
  report["scenario"] = scenario_json(cfg.scenario);
  report["consumed_budget"] = consumed;
  report["completed"] = out.result.completed;
  report["interactions"] = out.result.records.size();

  ordered_json interfaces = ordered_json::array();
  for (const auto& path : out.result.interface_paths) {
    ordered_json pj;
    pj["family"] = path.family == WaveFamily::One ? 1 : 2;
    pj["alive"] = path.alive;
    ordered_json pts = ordered_json::array();
    for (auto [t, x] : path.points) pts.push_back({t, x});
    pj["points"] = std::move(pts);
    auto slopes = path.segment_slopes();
    pj["slopes"] = slopes;
    if (single_if && std::isfinite(out.lambda_bar2)) {
      double lo = out.lambda_bar2 - cfg.delta0;
      double hi = out.lambda_bar2 + cfg.delta0;
      bool in_band = true;
      for (double s : slopes) in_band = in_band && s >= lo && s <= hi;
      pj["band_lo"] = lo;
      pj["band_hi"] = hi;
      pj["in_band"] = in_band;
      out.band_ok = out.band_ok && in_band;
    }
    interfaces.push_back(std::move(pj));
  }
  report["lambda_bar2"] = out.lambda_bar2;
  report["interfaces"] = std::move(interfaces);
  report["glimm_monotone"] = rep.glimm_monotone;
  report["glimm_worst_increase"] = rep.glimm_worst_increase;
  report["interface_speed_band_ok"] = out.band_ok;

  fs::create_directories(dir);
  if (cfg.emit_csv) write_fronts_csv(out.result, dir + "/fronts.csv");
  if (cfg.emit_json) {
    std::ofstream d(dir + "/diagnostics.json", std::ios::binary);
    d << diagnostics_to_json(rep) << "\n";
    std::ofstream r(dir + "/report.json", std::ios::binary);
    r << report.dump(2) << "\n";
  }
  if (cfg.emit_svg) write_xt_svg(out.result, dir + "/xt.svg");
  return out;
}

}  // namespace

int execute_run(const RunConfig& cfg, const std::string& out_dir) {
  log_info("run: eps = " + format_double(cfg.eos.eps));
  SingleRunOutput out =
      run_one(cfg, cfg.eos.eps, cfg.sim.rho, cfg.sim.t_final, out_dir);
  log_info("run: " + std::to_string(out.result.records.size()) +
           " interactions, completed = " +
           (out.result.completed ? "true" : "false"));
  return out.result.completed ? 0 : 1;
}

int execute_sweep(const RunConfig& cfg, const std::string& out_dir) {
  if (!cfg.sweep) {
    std::cerr << "sweep requested but the configuration has no sweep table\n";
    return 2;
  }
  const SweepConfig& sw = *cfg.sweep;
  fs::create_directories(out_dir);

  std::vector<InterfacePath> paths;
  std::vector<double> eps_ok, tv_u_congested;
  ordered_json per_eps = ordered_json::array();
  bool all_ok = true;

  for (std::size_t i = 0; i < sw.eps_values.size(); ++i) {
    double eps = sw.eps_values[i];
    double rho = sw.rho_rule.rho(eps);
    char sub[32];
    std::snprintf(sub, sizeof(sub), "eps_%02zu", i);
    std::string dir = out_dir + "/" + sub;
    ordered_json entry;
    entry["eps"] = eps;
    entry["rho"] = rho;
    entry["dir"] = sub;
    try {
      SingleRunOutput out = run_one(cfg, eps, rho, sw.t_final, dir);
      entry["completed"] = out.result.completed;
      entry["glimm_monotone"] = out.glimm_ok;
      entry["interface_speed_band_ok"] = out.band_ok;
      entry["interactions"] = out.result.records.size();
      if (out.result.interface_paths.size() == 1) {
        paths.push_back(out.result.interface_paths[0]);
        Profile prof = sample_solution(out.result, sw.t_final);
        double xbar = out.result.interface_paths[0].position(sw.t_final);
        double tv =
            tv_u(prof, -std::numeric_limits<double>::infinity(), xbar);
        eps_ok.push_back(eps);
        tv_u_congested.push_back(tv);
      }
      all_ok = all_ok && out.result.completed && out.glimm_ok && out.band_ok;
    } catch (const std::exception& e) {
      entry["error"] = e.what();
      all_ok = false;
      log_info(std::string("sweep entry failed: ") + e.what());
    }
    per_eps.push_back(std::move(entry));
  }

  ordered_json conv;
  conv["schema_version"] = 1;
  conv["scenario"] = scenario_json(cfg.scenario);
  conv["eps_values"] = sw.eps_values;
  conv["per_eps"] = std::move(per_eps);
  conv["tv_u_congested"] = tv_u_congested;
  if (tv_u_congested.size() >= 4) {
    try {
      TvScalingFit fit = fit_tv_scaling(eps_ok, tv_u_congested);
      conv["tv_scaling"] = {{"all_zero", fit.all_zero},
                            {"exponent", fit.exponent},
                            {"residual", fit.residual}};
    } catch (const std::exception& e) {
      conv["tv_scaling"] = {{"error", e.what()}};
    }
  }
  if (paths.size() >= 2) {
    InterfaceConvergence ic = interface_convergence(paths, sw.t_final);
    conv["interface_sup_distance"] = ic.sup_distance;
    conv["interface_slope_l1"] = ic.slope_l1;
  }
  std::ofstream out(out_dir + "/convergence_report.json", std::ios::binary);
  out << conv.dump(2) << "\n";
  return all_ok ? 0 : 1;
}

int execute(const RunConfig& cfg) {
  if (cfg.sweep) return execute_sweep(cfg, cfg.out_dir);
  return execute_run(cfg, cfg.out_dir);
}

}  // namespace cwft
