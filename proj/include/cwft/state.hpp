#ifndef CWFT_STATE_HPP
#define CWFT_STATE_HPP

#include <cstddef>
#include <vector>

namespace cwft {

// Pressure-velocity pair, the fundamental unknown.
struct State {
  double p = 0.0;
  double u = 0.0;
};

// Piecewise-constant profile: values[i] holds on (xs[i-1], xs[i]),
// values.front() on (-inf, xs[0]), values.back() on (xs.back(), +inf).
// xs strictly increasing; values.size() == xs.size() + 1.
struct Profile {
  std::vector<double> xs;
  std::vector<State> values;

  std::size_t jump_count() const { return xs.size(); }
  const State& value_at(double x) const;  // right-continuous at jumps
  void validate() const;
};

// Total variation of the pressure (resp. velocity) component over the open
// interval (a, b): jumps strictly inside count, jumps at the endpoints do
// not (the profile is extended by its one-sided limits).
double tv_p(const Profile& prof, double a, double b);
double tv_u(const Profile& prof, double a, double b);

// Exact L1 distance between two profiles. Their states at -inf and +inf
// must agree component-wise, otherwise the distance is infinite and an
// exception is thrown.
double l1_distance(const Profile& a, const Profile& b);

}  // namespace cwft

#endif
