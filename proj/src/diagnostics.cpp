#include "cwft/diagnostics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "cwft/numerics.hpp"
#include "json.hpp"

namespace cwft {

void GlimmWeights::validate() const {
  if (!(k_if > k_c && k_c > 1.0 && k_ff > 0.0 && k_cc > 0.0))
    throw std::invalid_argument(
        "GlimmWeights: need k_if > k_c > 1 and positive k_ff, k_cc");
}

GlimmBreakdown glimm(const FrontConfiguration& config,
                     const GlimmWeights& weights) {
  std::size_t if_idx = config.fronts.size();
  for (std::size_t i = 0; i < config.fronts.size(); ++i) {
    if (config.fronts[i].is_interface) {
      if (if_idx != config.fronts.size())
        throw std::invalid_argument("glimm: more than one flagged interface");
      if_idx = i;
    }
  }
  if (if_idx == config.fronts.size())
    throw std::invalid_argument("glimm: no flagged interface front");

  KahanSum lin_c, lin_f, sum_sq_c, sum_sq_f;
  for (std::size_t i = 0; i < config.fronts.size(); ++i) {
    if (i == if_idx) continue;
    double s = std::abs(config.fronts[i].strength);
    if (i < if_idx) {
      lin_c.add(s);
      sum_sq_c.add(s * s);
    } else {
      lin_f.add(s);
      sum_sq_f.add(s * s);
    }
  }

  GlimmBreakdown b;
  b.interface_strength = config.fronts[if_idx].strength;
  b.linear_free = lin_f.value();
  b.linear_congested = lin_c.value();
  b.q_if = std::abs(b.interface_strength) * b.linear_free;
  b.q_ff = 0.5 * (b.linear_free * b.linear_free - sum_sq_f.value());
  b.q_cc = 0.5 * (b.linear_congested * b.linear_congested - sum_sq_c.value());
  KahanSum total;
  total.add(b.interface_strength);
  total.add(b.linear_free);
  total.add(weights.k_c * b.linear_congested);
  total.add(weights.k_if * b.q_if);
  total.add(weights.k_ff * b.q_ff);
  total.add(weights.k_cc * b.q_cc);
  b.total = total.value();
  return b;
}

void annotate_glimm(RunResult& result, const GlimmWeights& weights) {
  for (std::size_t k = 0; k < result.records.size(); ++k) {
    result.records[k].glimm_before = glimm(result.history[k], weights).total;
    result.records[k].glimm_after =
        glimm(result.history[k + 1], weights).total;
  }
}

double weighted_tv(const Profile& prof, double interface_x,
                   const EosParams& params) {
  return weighted_tv_profile(prof, interface_x, params);
}

InteractionAudit interaction_constant_audit(
    const std::vector<InteractionRecord>& records) {
  InteractionAudit audit;
  auto signed_total = [](const std::vector<InteractionWaveInfo>& ws,
                         WaveFamily fam, bool exclude_interface) {
    double s = 0.0;
    for (const auto& w : ws)
      if (w.family == fam && !(exclude_interface && w.is_interface))
        s += w.strength;
    return s;
  };

  for (const auto& rec : records) {
    std::size_t n_if_in = 0, if_in_idx = 0;
    for (std::size_t i = 0; i < rec.incoming.size(); ++i)
      if (rec.incoming[i].is_interface) {
        ++n_if_in;
        if_in_idx = i;
      }

    if (n_if_in == 0) {
      if (rec.incoming.size() != 2) {
        ++audit.skipped;
        continue;
      }
      const auto& a = rec.incoming[0];
      const auto& b = rec.incoming[1];
      double denom = std::abs(a.strength * b.strength);
      if (denom < 1e-20) {
        ++audit.skipped;
        continue;
      }
      if (a.family != b.family) {
        double s1_in = (a.family == WaveFamily::One) ? a.strength : b.strength;
        double s2_in = (a.family == WaveFamily::One) ? b.strength : a.strength;
        double s1_out = signed_total(rec.outgoing, WaveFamily::One, false);
        double s2_out = signed_total(rec.outgoing, WaveFamily::Two, false);
        double ratio =
            (std::abs(s1_out - s1_in) + std::abs(s2_out - s2_in)) / denom;
        audit.two_wave_mixed.max_ratio =
            std::max(audit.two_wave_mixed.max_ratio, ratio);
        ++audit.two_wave_mixed.count;
      } else {
        WaveFamily fam = a.family;
        WaveFamily other =
            fam == WaveFamily::One ? WaveFamily::Two : WaveFamily::One;
        double same_out = signed_total(rec.outgoing, fam, false);
        double other_out = signed_total(rec.outgoing, other, false);
        double ratio = (std::abs(same_out - (a.strength + b.strength)) +
                        std::abs(other_out)) /
                       denom;
        audit.two_wave_same.max_ratio =
            std::max(audit.two_wave_same.max_ratio, ratio);
        ++audit.two_wave_same.count;
      }
      continue;
    }

    if (n_if_in == 1 && rec.incoming.size() >= 2) {
      bool small_left = false, small_right = false;
      double denom = 0.0;
      for (std::size_t i = 0; i < rec.incoming.size(); ++i) {
        if (i == if_in_idx) continue;
        denom += std::abs(rec.incoming[i].strength);
        (i < if_in_idx ? small_left : small_right) = true;
      }
      if (denom < 1e-20 || (small_left && small_right)) {
        ++audit.skipped;
        continue;
      }
      WaveFamily if_fam = rec.incoming[if_in_idx].family;
      double sigma_bar_in = rec.incoming[if_in_idx].strength;
      std::size_t if_out_idx = rec.outgoing.size();
      for (std::size_t i = 0; i < rec.outgoing.size(); ++i)
        if (rec.outgoing[i].is_interface) if_out_idx = i;
      if (if_out_idx == rec.outgoing.size()) {
        ++audit.skipped;  // interface dissolved; outside the lemma's scope
        continue;
      }
      double num = std::abs(rec.outgoing[if_out_idx].strength - sigma_bar_in);
      double reflected_free = 0.0;
      for (std::size_t i = 0; i < rec.outgoing.size(); ++i) {
        if (i == if_out_idx) continue;
        num += std::abs(rec.outgoing[i].strength);
        if (i > if_out_idx)
          reflected_free += std::abs(rec.outgoing[i].strength);
      }
      double ratio = num / denom;
      auto& cat = small_right ? audit.interface_from_free
                              : audit.interface_from_congested;
      cat.max_ratio = std::max(cat.max_ratio, ratio);
      ++cat.count;
      if (small_right)
        audit.free_reflection_max =
            std::max(audit.free_reflection_max, reflected_free);
      (void)if_fam;
      continue;
    }

    ++audit.skipped;  // interface-interface collisions and other shapes
  }
  return audit;
}

namespace {

struct Segment {
  double ta, tb;      // life span within one history slab
  double x_at_ta;
  double speed;
  double c_mass;      // s [tau] + [u]
  double c_mom;       // s [u] - [p]
  double c_ent;       // s [eta] - [q]
};

std::vector<Segment> collect_segments(const RunResult& result,
                                      const EosParams& params) {
  std::vector<Segment> segs;
  for (std::size_t k = 0; k < result.history.size(); ++k) {
    const FrontConfiguration& cfg = result.history[k];
    double ta = cfg.time;
    double tb = (k + 1 < result.history.size()) ? result.history[k + 1].time
                                                : result.end_time;
    if (!(tb > ta)) continue;
    for (const Front& f : cfg.fronts) {
      double tau_l = specific_volume(f.left.p, params);
      double tau_r = specific_volume(f.right.p, params);
      double eta_l = 0.5 * f.left.u * f.left.u + energy_potential(tau_l, params);
      double eta_r =
          0.5 * f.right.u * f.right.u + energy_potential(tau_r, params);
      Segment s;
      s.ta = ta;
      s.tb = tb;
      s.x_at_ta = f.position(ta);
      s.speed = f.speed;
      s.c_mass = f.speed * (tau_r - tau_l) + (f.right.u - f.left.u);
      s.c_mom = f.speed * (f.right.u - f.left.u) - (f.right.p - f.left.p);
      s.c_ent = f.speed * (eta_r - eta_l) -
                (f.right.p * f.right.u - f.left.p * f.left.u);
      segs.push_back(s);
    }
  }
  return segs;
}

struct HatMatrices {
  int nt, nx;
  double T, x_lo, dx, dt;
  std::vector<double> mass, mom, ent;  // (nt-1) x (nx-1), row-major

  double& at(std::vector<double>& m, int i, int j) {
    return m[static_cast<std::size_t>(i - 1) * static_cast<std::size_t>(nx - 1) +
             static_cast<std::size_t>(j - 1)];
  }
};

// One hat-line integral: int_{t0}^{t1} h_i(t) g_j(x(t)) dt with both factors
// piecewise linear along the segment; Simpson on kink-free subintervals is
// exact for the quadratic integrand.
double hat_line_integral(double t0, double t1, double ti, double dt, double xj,
                         double dx, double x_at, double ta, double speed,
                         std::vector<double>& kinks) {
  auto hat = [](double v, double c, double h) {
    double w = 1.0 - std::abs(v - c) / h;
    return w > 0.0 ? w : 0.0;
  };
  auto phi = [&](double t) {
    double x = x_at + speed * (t - ta);
    return hat(t, ti, dt) * hat(x, xj, dx);
  };
  kinks.clear();
  kinks.push_back(t0);
  kinks.push_back(t1);
  kinks.push_back(ti);
  if (speed != 0.0) {
    for (double xg : {xj - dx, xj, xj + dx})
      kinks.push_back(ta + (xg - x_at) / speed);
  }
  std::sort(kinks.begin(), kinks.end());
  double total = 0.0;
  double prev = t0;
  for (double t : kinks) {
    if (t <= prev || t < t0) continue;
    double cur = std::min(t, t1);
    if (cur > prev) {
      double m = 0.5 * (prev + cur);
      total += (cur - prev) / 6.0 * (phi(prev) + 4.0 * phi(m) + phi(cur));
      prev = cur;
    }
    if (prev >= t1) break;
  }
  return total;
}

HatMatrices hat_integrals(const RunResult& result, const TestGridSpec& grid,
                          const EosParams& params) {
  HatMatrices M;
  M.nt = grid.nt;
  M.nx = grid.nx;
  M.T = result.end_time;
  auto segs = collect_segments(result, params);

  double x_lo = std::numeric_limits<double>::infinity();
  double x_hi = -x_lo;
  for (const Segment& s : segs) {
    double xa = s.x_at_ta;
    double xb = s.x_at_ta + s.speed * (s.tb - s.ta);
    x_lo = std::min(x_lo, std::min(xa, xb));
    x_hi = std::max(x_hi, std::max(xa, xb));
  }
  if (segs.empty()) {
    x_lo = -1.0;
    x_hi = 1.0;
  }
  double width = std::max(x_hi - x_lo, 1e-12);
  x_lo -= 0.05 * width;
  x_hi += 0.05 * width;
  M.x_lo = x_lo;
  M.dx = (x_hi - x_lo) / grid.nx;
  M.dt = M.T / grid.nt;
  std::size_t cells = static_cast<std::size_t>(grid.nt - 1) *
                      static_cast<std::size_t>(grid.nx - 1);
  M.mass.assign(cells, 0.0);
  M.mom.assign(cells, 0.0);
  M.ent.assign(cells, 0.0);

  std::vector<double> kinks;
  for (const Segment& s : segs) {
    int i_lo = std::max(1, static_cast<int>(std::floor(s.ta / M.dt)));
    int i_hi =
        std::min(grid.nt - 1, static_cast<int>(std::ceil(s.tb / M.dt)) + 1);
    for (int i = i_lo; i <= i_hi; ++i) {
      double ti = i * M.dt;
      double t0 = std::max(s.ta, ti - M.dt);
      double t1 = std::min(s.tb, ti + M.dt);
      if (!(t1 > t0)) continue;
      double xs0 = s.x_at_ta + s.speed * (t0 - s.ta);
      double xs1 = s.x_at_ta + s.speed * (t1 - s.ta);
      double seg_xlo = std::min(xs0, xs1);
      double seg_xhi = std::max(xs0, xs1);
      int j_lo = std::max(
          1, static_cast<int>(std::floor((seg_xlo - x_lo) / M.dx)) - 1);
      int j_hi = std::min(
          grid.nx - 1, static_cast<int>(std::ceil((seg_xhi - x_lo) / M.dx)) + 1);
      for (int j = j_lo; j <= j_hi; ++j) {
        double xj = x_lo + j * M.dx;
        double w = hat_line_integral(t0, t1, ti, M.dt, xj, M.dx, s.x_at_ta,
                                     s.ta, s.speed, kinks);
        if (w == 0.0) continue;
        M.at(M.mass, i, j) += w * s.c_mass;
        M.at(M.mom, i, j) += w * s.c_mom;
        M.at(M.ent, i, j) += w * s.c_ent;
      }
    }
  }
  return M;
}

}  // namespace

WeakResiduals weak_residual(const RunResult& result, const TestGridSpec& grid,
                            const EosParams& params) {
  HatMatrices M = hat_integrals(result, grid, params);
  WeakResiduals r;
  for (double v : M.mass) r.mass = std::max(r.mass, std::abs(v));
  for (double v : M.mom) r.momentum = std::max(r.momentum, std::abs(v));
  return r;
}

double entropy_residual(const RunResult& result, const TestGridSpec& grid,
                        const EosParams& params) {
  HatMatrices M = hat_integrals(result, grid, params);
  double mn = 0.0;
  for (double v : M.ent) mn = std::min(mn, v);
  return mn;
}

namespace {

// L1 distance of a component over the interval (a, b); profiles must agree
// outside a bounded set.
double l1_component_on(const Profile& pa, const Profile& pb, double a,
                       double b, double (*comp)(const State&, const EosParams&),
                       const EosParams& params) {
  std::vector<double> knots;
  for (double x : pa.xs)
    if (x > a && x < b) knots.push_back(x);
  for (double x : pb.xs)
    if (x > a && x < b) knots.push_back(x);
  if (std::isfinite(a)) knots.push_back(a);
  if (std::isfinite(b)) knots.push_back(b);
  std::sort(knots.begin(), knots.end());
  knots.erase(std::unique(knots.begin(), knots.end()), knots.end());
  double total = 0.0;
  for (std::size_t i = 0; i + 1 < knots.size(); ++i) {
    double mid = 0.5 * (knots[i] + knots[i + 1]);
    double va = comp(pa.value_at(mid), params);
    double vb = comp(pb.value_at(mid), params);
    total += std::abs(va - vb) * (knots[i + 1] - knots[i]);
  }
  // tails: states agree there (finite propagation), contribution zero
  return total;
}

double comp_u(const State& s, const EosParams&) { return s.u; }
double comp_p(const State& s, const EosParams&) { return s.p; }
double comp_tau(const State& s, const EosParams& prm) {
  return specific_volume(s.p, prm);
}

const InterfacePath& single_interface_path(const RunResult& result) {
  if (result.interface_paths.size() != 1)
    throw std::invalid_argument(
        "diagnostics: run does not have exactly one interface path");
  return result.interface_paths[0];
}

}  // namespace

LipschitzModuli lipschitz_time_moduli(
    const RunResult& result,
    const std::vector<std::pair<double, double>>& pairs,
    const EosParams& params) {
  const InterfacePath& path = single_interface_path(result);
  double inf = std::numeric_limits<double>::infinity();
  double w = std::pow(params.eps, 1.0 / (2.0 * params.gamma_c));
  LipschitzModuli m;
  for (auto [s, t] : pairs) {
    if (!(t > s)) throw std::invalid_argument("lipschitz: need t > s");
    Profile ps = sample_solution(result, s);
    Profile pt = sample_solution(result, t);
    double xbar = path.position(t);
    double dt = t - s;
    m.u_whole = std::max(
        m.u_whole, l1_component_on(ps, pt, -inf, inf, comp_u, params) / dt);
    m.p_free = std::max(
        m.p_free, l1_component_on(ps, pt, xbar, inf, comp_p, params) / dt);
    m.p_congested =
        std::max(m.p_congested,
                 w * l1_component_on(ps, pt, -inf, xbar, comp_p, params) / dt);
    m.tau_congested = std::max(
        m.tau_congested,
        l1_component_on(ps, pt, -inf, xbar, comp_tau, params) / (w * dt));
  }
  return m;
}

std::vector<TracePiece> trace_pieces(const RunResult& result,
                                     const InterfacePath& path, double offset,
                                     const EosParams& params) {
  std::vector<TracePiece> pieces;
  auto state_at = [&](const FrontConfiguration& cfg, double t,
                      double x) -> const State& {
    const State* s = &cfg.leftmost;
    for (const Front& f : cfg.fronts) {
      if (f.position(t) > x) break;
      s = &f.right;
    }
    return *s;
  };
  auto push_piece = [&](double t, const State& s) {
    if (!pieces.empty() && pieces.back().state.p == s.p &&
        pieces.back().state.u == s.u)
      return;
    pieces.push_back({t, s, specific_volume(s.p, params)});
  };

  for (std::size_t k = 0; k < result.history.size(); ++k) {
    const FrontConfiguration& cfg = result.history[k];
    double ta = cfg.time;
    double tb = (k + 1 < result.history.size()) ? result.history[k + 1].time
                                                : result.end_time;
    if (!(tb > ta)) continue;
    // interface path is linear inside a slab
    double xa = path.position(ta) + offset;
    double xb = path.position(tb) + offset;
    double v = (xb - xa) / (tb - ta);
    std::vector<double> switches;
    for (const Front& f : cfg.fronts) {
      double dv = f.speed - v;
      if (dv == 0.0) continue;
      double tc = ta + (xa - f.position(ta)) / dv;
      if (tc > ta && tc < tb) switches.push_back(tc);
    }
    std::sort(switches.begin(), switches.end());
    switches.push_back(tb);
    double prev = ta;
    for (double tc : switches) {
      if (tc <= prev) continue;
      double tm = 0.5 * (prev + tc);
      push_piece(prev, state_at(cfg, tm, path.position(tm) + offset));
      prev = tc;
    }
  }
  if (pieces.empty()) {
    const FrontConfiguration& cfg = result.history.front();
    push_piece(0.0, state_at(cfg, 0.0, path.position(0.0) + offset));
  }
  return pieces;
}

namespace {

double piece_value_at(const std::vector<TracePiece>& pieces, double t,
                      double (*component)(const TracePiece&)) {
  std::size_t i = 0;
  while (i + 1 < pieces.size() && pieces[i + 1].t <= t) ++i;
  return component(pieces[i]);
}

}  // namespace

TraceSeries trace(const RunResult& result, double offset,
                  const std::vector<double>& times, const EosParams& params) {
  if (offset == 0.0)
    throw std::invalid_argument("trace: offset must be nonzero");
  const InterfacePath& path = single_interface_path(result);
  auto pieces = trace_pieces(result, path, offset, params);

  TraceSeries series;
  series.offset = offset;
  for (double t : times) {
    std::size_t i = 0;
    while (i + 1 < pieces.size() && pieces[i + 1].t <= t) ++i;
    series.samples.push_back(
        {t, pieces[i].state.p, pieces[i].state.u, pieces[i].tau});
  }
  for (std::size_t i = 0; i + 1 < pieces.size(); ++i) {
    series.tv_p += std::abs(pieces[i + 1].state.p - pieces[i].state.p);
    series.tv_u += std::abs(pieces[i + 1].state.u - pieces[i].state.u);
    series.tv_tau += std::abs(pieces[i + 1].tau - pieces[i].tau);
  }
  return series;
}

double trace_l1_diff(const std::vector<TracePiece>& a,
                     const std::vector<TracePiece>& b, double T,
                     double (*component)(const TracePiece&)) {
  std::vector<double> knots{0.0, T};
  for (const auto& p : a)
    if (p.t > 0.0 && p.t < T) knots.push_back(p.t);
  for (const auto& p : b)
    if (p.t > 0.0 && p.t < T) knots.push_back(p.t);
  std::sort(knots.begin(), knots.end());
  knots.erase(std::unique(knots.begin(), knots.end()), knots.end());
  double total = 0.0;
  for (std::size_t i = 0; i + 1 < knots.size(); ++i) {
    double tm = 0.5 * (knots[i] + knots[i + 1]);
    total += std::abs(piece_value_at(a, tm, component) -
                      piece_value_at(b, tm, component)) *
             (knots[i + 1] - knots[i]);
  }
  return total;
}

DiagnosticsReport diagnose(RunResult& result, const GlimmWeights& weights,
                           const EosParams& params,
                           const DiagnosticsOptions& options) {
  DiagnosticsReport rep;
  bool single_if = result.interface_paths.size() == 1;

  if (single_if) {
    annotate_glimm(result, weights);
    for (std::size_t k = 0; k < result.history.size(); ++k) {
      rep.glimm_times.push_back(result.history[k].time);
      rep.glimm_series.push_back(glimm(result.history[k], weights));
    }
    double scale = std::abs(rep.glimm_series.front().total);
    for (const auto& rec : result.records) {
      double inc = rec.glimm_after - rec.glimm_before;
      rep.glimm_worst_increase = std::max(rep.glimm_worst_increase, inc);
      if (inc > 1e-12 * std::max(scale, 1.0)) rep.glimm_monotone = false;
    }
  }

  rep.audit = interaction_constant_audit(result.records);

  if (options.residuals) {
    HatMatrices M = hat_integrals(result, options.grid, params);
    for (double v : M.mass) rep.weak.mass = std::max(rep.weak.mass, std::abs(v));
    for (double v : M.mom)
      rep.weak.momentum = std::max(rep.weak.momentum, std::abs(v));
    rep.entropy_min = 0.0;
    for (double v : M.ent) rep.entropy_min = std::min(rep.entropy_min, v);
  }

  if (single_if && options.lipschitz_samples > 1) {
    std::vector<std::pair<double, double>> pairs;
    int n = options.lipschitz_samples;
    for (int i = 0; i + 1 < n; ++i) {
      double s = result.end_time * i / n;
      double t = result.end_time * (i + 1) / n;
      if (t > s) pairs.emplace_back(s, t);
    }
    if (!pairs.empty())
      rep.lipschitz = lipschitz_time_moduli(result, pairs, params);
  }

  if (single_if) {
    std::vector<double> times;
    for (int i = 0; i <= 64; ++i)
      times.push_back(result.end_time * i / 64.0);
    for (double off : options.trace_offsets)
      rep.traces.push_back(trace(result, off, times, params));
  }
  return rep;
}

std::string diagnostics_to_json(const DiagnosticsReport& report) {
  nlohmann::ordered_json j;
  j["schema_version"] = 1;
  nlohmann::ordered_json gs = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < report.glimm_series.size(); ++i) {
    const auto& b = report.glimm_series[i];
    gs.push_back({{"time", report.glimm_times[i]},
                  {"interface_strength", b.interface_strength},
                  {"linear_free", b.linear_free},
                  {"linear_congested", b.linear_congested},
                  {"q_if", b.q_if},
                  {"q_ff", b.q_ff},
                  {"q_cc", b.q_cc},
                  {"total", b.total}});
  }
  j["glimm_series"] = std::move(gs);
  j["glimm_monotone"] = report.glimm_monotone;
  j["glimm_worst_increase"] = report.glimm_worst_increase;

  auto cat = [](const InteractionAudit::Category& c) {
    return nlohmann::ordered_json{{"max_ratio", c.max_ratio},
                                  {"count", c.count}};
  };
  j["interaction_audit"] = {
      {"two_wave_mixed", cat(report.audit.two_wave_mixed)},
      {"two_wave_same", cat(report.audit.two_wave_same)},
      {"interface_from_free", cat(report.audit.interface_from_free)},
      {"interface_from_congested", cat(report.audit.interface_from_congested)},
      {"skipped", report.audit.skipped},
      {"free_reflection_max", report.audit.free_reflection_max}};

  j["residuals"] = {{"weak_mass", report.weak.mass},
                    {"weak_momentum", report.weak.momentum},
                    {"entropy_min", report.entropy_min}};

  j["lipschitz"] = {{"u_whole", report.lipschitz.u_whole},
                    {"p_free", report.lipschitz.p_free},
                    {"p_congested", report.lipschitz.p_congested},
                    {"tau_congested", report.lipschitz.tau_congested}};

  nlohmann::ordered_json traces = nlohmann::ordered_json::array();
  for (const auto& tr : report.traces) {
    nlohmann::ordered_json samples = nlohmann::ordered_json::array();
    for (const auto& s : tr.samples)
      samples.push_back({s[0], s[1], s[2], s[3]});
    traces.push_back({{"offset", tr.offset},
                      {"tv_p", tr.tv_p},
                      {"tv_u", tr.tv_u},
                      {"tv_tau", tr.tv_tau},
                      {"samples", std::move(samples)}});
  }
  j["traces"] = std::move(traces);
  return j.dump(2);
}

}  // namespace cwft
