#include "cwft/wft.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "cwft/numerics.hpp"

namespace cwft {

void FrontConfiguration::validate_chain() const {
  const State* prev = &leftmost;
  double prev_pos = -std::numeric_limits<double>::infinity();
  for (const Front& f : fronts) {
    if (f.left.p != prev->p || f.left.u != prev->u)
      throw EngineError("FrontConfiguration: side states do not chain");
    double pos = f.position(time);
    if (pos < prev_pos - 1e-9 * (1.0 + std::abs(pos)))
      throw EngineError("FrontConfiguration: positions out of order");
    prev_pos = pos;
    prev = &f.right;
  }
}

double InterfacePath::position(double t) const {
  if (points.empty()) return std::numeric_limits<double>::quiet_NaN();
  if (t <= points.front().first) return points.front().second;
  for (std::size_t i = 0; i + 1 < points.size(); ++i) {
    if (t <= points[i + 1].first) {
      double dt = points[i + 1].first - points[i].first;
      if (dt <= 0.0) continue;
      double w = (t - points[i].first) / dt;
      return points[i].second +
             w * (points[i + 1].second - points[i].second);
    }
  }
  return points.back().second;
}

double InterfacePath::slope(double t) const {
  for (std::size_t i = 0; i + 1 < points.size(); ++i) {
    if (t < points[i + 1].first || i + 2 == points.size()) {
      double dt = points[i + 1].first - points[i].first;
      if (dt > 0.0)
        return (points[i + 1].second - points[i].second) / dt;
    }
  }
  return std::numeric_limits<double>::quiet_NaN();
}

std::vector<double> InterfacePath::segment_slopes() const {
  std::vector<double> slopes;
  for (std::size_t i = 0; i + 1 < points.size(); ++i) {
    double dt = points[i + 1].first - points[i].first;
    if (dt > 0.0)
      slopes.push_back((points[i + 1].second - points[i].second) / dt);
  }
  return slopes;
}

namespace {

struct FrontFactory {
  int next_id = 0;
  const SimConfig& sim;
  const EosParams& params;

  double char_speed(WaveFamily family, double p) const {
    auto [l1, l2] = eigenvalues(p, params);
    return family == WaveFamily::One ? l1 : l2;
  }

  Front shock_front(const Wave& w, double t, double x) {
    Front f;
    f.id = next_id++;
    f.family = w.family;
    f.kind = WaveKind::Shock;
    f.t0 = t;
    f.x0 = x;
    f.left = w.left;
    f.right = w.right;
    f.strength = w.strength;
    f.speed = shock_speed(w.left, w.right, params);
    return f;
  }

  Front single_rarefaction_front(const Wave& w, double t, double x) {
    Front f;
    f.id = next_id++;
    f.family = w.family;
    f.kind = WaveKind::Rarefaction;
    f.t0 = t;
    f.x0 = x;
    f.left = w.left;
    f.right = w.right;
    f.strength = w.strength;
    f.speed = char_speed(w.family, w.right.p);
    return f;
  }

  // Equal pressure increments of size at most rho, each piece moving at the
  // characteristic speed of its right state.
  std::vector<Front> split_rarefaction(const Wave& w, double t, double x) {
    std::vector<Front> pieces;
    double sigma = w.strength;
    int n = static_cast<int>(std::ceil(std::abs(sigma) / sim.rho));
    n = std::max(n, 1);
    State prev = w.left;
    for (int k = 1; k <= n; ++k) {
      double p = (k == n) ? w.right.p
                          : w.left.p + sigma * static_cast<double>(k) /
                                           static_cast<double>(n);
      State next = (k == n)
                       ? w.right
                       : State{p, lax_curve_velocity(w.left, p, w.family,
                                                     params)};
      Front f;
      f.id = next_id++;
      f.family = w.family;
      f.kind = WaveKind::Rarefaction;
      f.t0 = t;
      f.x0 = x;
      f.left = prev;
      f.right = next;
      f.strength = next.p - prev.p;
      f.speed = char_speed(w.family, next.p);
      pieces.push_back(f);
      prev = next;
    }
    return pieces;
  }
};

}  // namespace

FrontConfiguration discretize_initial_datum(
    const Profile& datum, const std::vector<double>& interface_xs,
    const SimConfig& config, const EosParams& params) {
  datum.validate();
  if (!(config.rho > 0.0))
    throw EngineError("discretize_initial_datum: rho must be > 0");

  FrontConfiguration out;
  out.time = 0.0;
  out.leftmost = datum.values.front();
  FrontFactory factory{0, config, params};

  auto is_interface_pos = [&](double x) {
    for (double xi : interface_xs)
      if (std::abs(x - xi) <= 1e-12 * (1.0 + std::abs(xi))) return true;
    return false;
  };

  for (std::size_t j = 0; j < datum.xs.size(); ++j) {
    const State& l = datum.values[j];
    const State& r = datum.values[j + 1];
    WaveFan fan;
    try {
      fan = solve_riemann(l, r, params);
    } catch (const RiemannError& e) {
      throw EngineError("discretize_initial_datum: jump at x = " +
                        format_double(datum.xs[j]) + ": " + e.what());
    }
    std::size_t first = out.fronts.size();
    for (const Wave& w : fan.waves) {
      if (w.kind == WaveKind::Shock) {
        out.fronts.push_back(factory.shock_front(w, 0.0, datum.xs[j]));
      } else if (std::abs(w.strength) > config.rho) {
        auto pieces = factory.split_rarefaction(w, 0.0, datum.xs[j]);
        out.fronts.insert(out.fronts.end(), pieces.begin(), pieces.end());
      } else {
        out.fronts.push_back(
            factory.single_rarefaction_front(w, 0.0, datum.xs[j]));
      }
    }
    if (is_interface_pos(datum.xs[j])) {
      // flag the strongest shock born at this jump
      std::size_t best = out.fronts.size();
      double best_strength = 0.0;
      for (std::size_t k = first; k < out.fronts.size(); ++k) {
        const Front& f = out.fronts[k];
        if (f.kind == WaveKind::Shock &&
            std::abs(f.strength) > best_strength) {
          best_strength = std::abs(f.strength);
          best = k;
        }
      }
      if (best == out.fronts.size())
        throw EngineError(
            "discretize_initial_datum: no shock at a declared interface");
      out.fronts[best].is_interface = true;
    }
  }
  out.validate_chain();
  return out;
}

std::optional<Event> next_event(const FrontConfiguration& config,
                                const SimConfig& sim) {
  const auto& fronts = config.fronts;
  if (fronts.size() < 2) return std::nullopt;

  std::vector<double> cross(fronts.size() - 1,
                            std::numeric_limits<double>::infinity());
  double t_min = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i + 1 < fronts.size(); ++i) {
    double dv = fronts[i].speed - fronts[i + 1].speed;
    if (dv <= 0.0) continue;
    double gap =
        fronts[i + 1].position(config.time) - fronts[i].position(config.time);
    double tc = config.time + std::max(gap, 0.0) / dv;
    if (tc <= sim.t_final) {
      cross[i] = tc;
      t_min = std::min(t_min, tc);
    }
  }
  if (!std::isfinite(t_min)) return std::nullopt;

  // Pairs crossing within the grouping tolerance form clusters of
  // contiguous indices; take the leftmost cluster attaining the minimum.
  double tol = sim.speed_tolerance;
  std::vector<std::pair<std::size_t, std::size_t>> clusters;
  std::size_t i = 0;
  while (i < cross.size()) {
    if (cross[i] > t_min + tol) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j + 1 < cross.size() && cross[j + 1] <= t_min + tol) ++j;
    clusters.emplace_back(i, j);
    i = j + 1;
  }
  for (const auto& [a, b] : clusters) {
    bool attains = false;
    for (std::size_t k = a; k <= b; ++k)
      if (cross[k] <= t_min + 0.0) attains = true;
    if (!attains) continue;
    Event ev;
    ev.time = t_min;
    for (std::size_t k = a; k <= b + 1; ++k) ev.front_indices.push_back(k);
    return ev;
  }
  // Fallback: first cluster (cannot be reached; every cluster contains a
  // crossing equal to t_min or within tol of it).
  Event ev;
  ev.time = t_min;
  for (std::size_t k = clusters.front().first; k <= clusters.front().second + 1;
       ++k)
    ev.front_indices.push_back(k);
  return ev;
}

std::pair<FrontConfiguration, InteractionRecord> resolve_interaction(
    const FrontConfiguration& config, const Event& event, const SimConfig& sim,
    const EosParams& params) {
  if (event.front_indices.size() < 2)
    throw EngineError("resolve_interaction: event needs >= 2 fronts");
  std::size_t a = event.front_indices.front();
  std::size_t b = event.front_indices.back();
  double t = event.time;
  const State outer_l = config.fronts[a].left;
  const State outer_r = config.fronts[b].right;
  double x = 0.5 * (config.fronts[a].position(t) + config.fronts[b].position(t));

  InteractionRecord rec;
  rec.time = t;
  rec.position = x;
  rec.glimm_before = std::numeric_limits<double>::quiet_NaN();
  rec.glimm_after = rec.glimm_before;

  bool incoming_raref[2] = {false, false};
  bool incoming_interface[2] = {false, false};
  for (std::size_t k = a; k <= b; ++k) {
    const Front& f = config.fronts[k];
    rec.incoming.push_back(
        {f.family, f.kind, f.strength, f.is_interface});
    std::size_t fam = f.family == WaveFamily::One ? 0 : 1;
    if (f.kind == WaveKind::Rarefaction) incoming_raref[fam] = true;
    if (f.is_interface) incoming_interface[fam] = true;
  }

  WaveFan fan;
  try {
    fan = solve_riemann(outer_l, outer_r, params);
  } catch (const RiemannError& e) {
    throw EngineError("resolve_interaction at t = " + format_double(t) +
                      ", x = " + format_double(x) + ": " + e.what());
  }

  FrontFactory factory{0, sim, params};
  std::vector<Front> outgoing;
  for (const Wave& w : fan.waves) {
    std::size_t fam = w.family == WaveFamily::One ? 0 : 1;
    if (w.kind == WaveKind::Shock) {
      Front f = factory.shock_front(w, t, x);
      if (incoming_interface[fam]) f.is_interface = true;
      outgoing.push_back(f);
    } else if (incoming_raref[fam]) {
      // merge rule: a same-family incoming rarefaction suppresses splitting
      outgoing.push_back(factory.single_rarefaction_front(w, t, x));
    } else if (std::abs(w.strength) > sim.rho) {
      auto pieces = factory.split_rarefaction(w, t, x);
      outgoing.insert(outgoing.end(), pieces.begin(), pieces.end());
    } else {
      outgoing.push_back(factory.single_rarefaction_front(w, t, x));
    }
  }

  FrontConfiguration next;
  next.time = t;
  next.leftmost = config.leftmost;
  next.fronts.reserve(config.fronts.size() - (b - a + 1) + outgoing.size());
  next.fronts.insert(next.fronts.end(), config.fronts.begin(),
                     config.fronts.begin() + static_cast<long>(a));
  int id_base = 0;
  for (const Front& f : config.fronts) id_base = std::max(id_base, f.id + 1);
  for (Front f : outgoing) {
    f.id += id_base;
    rec.outgoing.push_back({f.family, f.kind, f.strength, f.is_interface});
    next.fronts.push_back(f);
  }
  next.fronts.insert(next.fronts.end(),
                     config.fronts.begin() + static_cast<long>(b) + 1,
                     config.fronts.end());
  return {std::move(next), std::move(rec)};
}

namespace {

// Continues interface trajectories across an event: a path whose front was
// consumed is prolonged by the outgoing flagged front of the same family,
// or closed if that front does not exist (dissolved or merged away).
struct PathTracker {
  std::vector<InterfacePath> paths;
  std::vector<int> front_of_path;  // current front id, -1 when closed

  void start(const FrontConfiguration& config) {
    for (const Front& f : config.fronts) {
      if (!f.is_interface) continue;
      InterfacePath p;
      p.family = f.family;
      p.points.emplace_back(f.t0, f.x0);
      paths.push_back(p);
      front_of_path.push_back(f.id);
    }
  }

  void on_event(const FrontConfiguration& before, const Event& ev,
                const FrontConfiguration& after, double t, double x) {
    std::vector<const Front*> consumed;
    for (std::size_t k : ev.front_indices) {
      const Front& f = before.fronts[k];
      if (f.is_interface) consumed.push_back(&f);
    }
    if (consumed.empty()) return;
    // flagged outgoing fronts are the just-born ones at (t, x)
    std::vector<const Front*> born;
    for (const Front& f : after.fronts)
      if (f.is_interface && f.t0 == t && f.x0 == x) born.push_back(&f);
    std::vector<bool> born_taken(born.size(), false);
    for (const Front* c : consumed) {
      std::size_t pi = 0;
      for (; pi < front_of_path.size(); ++pi)
        if (front_of_path[pi] == c->id) break;
      if (pi == front_of_path.size()) continue;
      paths[pi].points.emplace_back(t, x);
      const Front* successor = nullptr;
      for (std::size_t bi = 0; bi < born.size(); ++bi) {
        if (!born_taken[bi] && born[bi]->family == c->family) {
          successor = born[bi];
          born_taken[bi] = true;
          break;
        }
      }
      if (successor) {
        front_of_path[pi] = successor->id;
      } else {
        front_of_path[pi] = -1;
        paths[pi].alive = false;
      }
    }
  }

  void finish(const FrontConfiguration& last, double end_time) {
    for (std::size_t pi = 0; pi < paths.size(); ++pi) {
      if (front_of_path[pi] < 0) continue;
      for (const Front& f : last.fronts) {
        if (f.id == front_of_path[pi]) {
          paths[pi].points.emplace_back(end_time, f.position(end_time));
          break;
        }
      }
    }
  }
};

}  // namespace

RunResult run(const Profile& datum, const std::vector<double>& interface_xs,
              const SimConfig& sim, const EosParams& params) {
  RunResult result;
  result.history.push_back(
      discretize_initial_datum(datum, interface_xs, sim, params));

  PathTracker tracker;
  tracker.start(result.history.back());

  while (true) {
    const FrontConfiguration& cur = result.history.back();
    auto ev = next_event(cur, sim);
    if (!ev) break;
    if (static_cast<long>(result.records.size()) >= sim.max_interactions) {
      result.completed = false;
      break;
    }
    auto [next, rec] = resolve_interaction(cur, *ev, sim, params);
    tracker.on_event(cur, *ev, next, rec.time, rec.position);
    result.history.push_back(std::move(next));
    result.records.push_back(std::move(rec));
  }

  result.end_time = result.completed
                        ? sim.t_final
                        : result.history.back().time;
  tracker.finish(result.history.back(), result.end_time);
  result.interface_paths = std::move(tracker.paths);
  return result;
}

Profile sample_solution(const RunResult& result, double t) {
  if (result.history.empty())
    throw EngineError("sample_solution: empty history");
  if (t < 0.0 || t > result.end_time + 1e-12)
    throw std::out_of_range("sample_solution: time outside [0, end_time]");
  t = std::min(t, result.end_time);

  // last configuration with time <= t (right-continuous at event times)
  auto it = std::upper_bound(
      result.history.begin(), result.history.end(), t,
      [](double v, const FrontConfiguration& c) { return v < c.time; });
  const FrontConfiguration& cfg = *(it - 1);

  Profile prof;
  prof.values.push_back(cfg.leftmost);
  double prev = -std::numeric_limits<double>::infinity();
  for (const Front& f : cfg.fronts) {
    double x = f.position(t);
    if (x <= prev) {
      // coincident fronts (just-born fans): collapse the zero-width cell
      prof.values.back() = f.right;
      continue;
    }
    prof.xs.push_back(x);
    prof.values.push_back(f.right);
    prev = x;
  }
  return prof;
}

}  // namespace cwft
