#ifndef CWFT_NUMERICS_HPP
#define CWFT_NUMERICS_HPP

#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace cwft {

struct ConvergenceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Safeguarded Newton on a bracket [lo, hi] with f(lo) and f(hi) of opposite
// sign. Falls back to bisection whenever the Newton step leaves the bracket.
// Converges on |step| <= rtol*|x| + atol or |f| <= ftol.
double bracketed_newton(const std::function<double(double)>& f,
                        const std::function<double(double)>& df, double lo,
                        double hi, double rtol, double ftol, int max_iter,
                        const char* what);

// Plain bisection to an interval of relative width rtol.
double bisect(const std::function<double(double)>& f, double lo, double hi,
              double rtol, int max_iter, const char* what);

// Recursive adaptive Simpson quadrature to absolute tolerance tol.
// `split_points` inside (a, b) force subdivision boundaries first.
double adaptive_simpson(const std::function<double(double)>& f, double a,
                        double b, double tol,
                        const std::vector<double>& split_points = {});

struct LinearFit {
  double slope = 0.0;
  double intercept = 0.0;
  double residual = 0.0;  // rms of fit residuals
};

LinearFit fit_line(const std::vector<double>& x, const std::vector<double>& y);

// Compensated (Kahan) accumulator; the Glimm sums need it at 1e-12 tolerance.
class KahanSum {
 public:
  void add(double v) {
    double y = v - c_;
    double t = s_ + y;
    c_ = (t - s_) - y;
    s_ = t;
  }
  double value() const { return s_; }

 private:
  double s_ = 0.0;
  double c_ = 0.0;
};

// Shortest round-trip decimal representation (std::to_chars).
std::string format_double(double v);

}  // namespace cwft

#endif
