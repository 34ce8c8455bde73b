#include "cwft/state.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace cwft {

const State& Profile::value_at(double x) const {
  auto it = std::upper_bound(xs.begin(), xs.end(), x);
  return values[static_cast<std::size_t>(it - xs.begin())];
}

void Profile::validate() const {
  if (values.size() != xs.size() + 1)
    throw std::invalid_argument("Profile: values.size() != xs.size() + 1");
  for (std::size_t i = 0; i + 1 < xs.size(); ++i)
    if (!(xs[i] < xs[i + 1]))
      throw std::invalid_argument("Profile: breakpoints not increasing");
}

namespace {

template <typename Get>
double tv_component(const Profile& prof, double a, double b, Get get) {
  double tv = 0.0;
  for (std::size_t i = 0; i < prof.xs.size(); ++i) {
    if (prof.xs[i] > a && prof.xs[i] < b)
      tv += std::abs(get(prof.values[i + 1]) - get(prof.values[i]));
  }
  return tv;
}

}  // namespace

double tv_p(const Profile& prof, double a, double b) {
  return tv_component(prof, a, b, [](const State& s) { return s.p; });
}

double tv_u(const Profile& prof, double a, double b) {
  return tv_component(prof, a, b, [](const State& s) { return s.u; });
}

double l1_distance(const Profile& a, const Profile& b) {
  const State& la = a.values.front();
  const State& lb = b.values.front();
  const State& ra = a.values.back();
  const State& rb = b.values.back();
  if (la.p != lb.p || la.u != lb.u || ra.p != rb.p || ra.u != rb.u)
    throw std::invalid_argument("l1_distance: profiles differ at infinity");

  std::vector<double> knots;
  knots.reserve(a.xs.size() + b.xs.size());
  knots.insert(knots.end(), a.xs.begin(), a.xs.end());
  knots.insert(knots.end(), b.xs.begin(), b.xs.end());
  std::sort(knots.begin(), knots.end());
  knots.erase(std::unique(knots.begin(), knots.end()), knots.end());
  if (knots.empty()) return 0.0;

  double dist = 0.0;
  for (std::size_t i = 0; i + 1 < knots.size(); ++i) {
    double mid = 0.5 * (knots[i] + knots[i + 1]);
    const State& sa = a.value_at(mid);
    const State& sb = b.value_at(mid);
    dist += (std::abs(sa.p - sb.p) + std::abs(sa.u - sb.u)) *
            (knots[i + 1] - knots[i]);
  }
  return dist;
}

}  // namespace cwft
