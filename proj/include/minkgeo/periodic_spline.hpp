#pragma once

#include <cstddef>
#include <vector>

namespace minkgeo {

/// Periodic natural cubic spline through (x_i, y_i) with x_{i+N} = x_i + period.
/// Knots may be non-uniform.  Evaluation wraps the query into one period.
class PeriodicSpline {
 public:
  PeriodicSpline() = default;

  /// Knots must be strictly increasing and span less than one period.
  PeriodicSpline(std::vector<double> knots, std::vector<double> values,
                 double period);

  double operator()(double x) const { return eval(x); }
  double eval(double x) const;
  double deriv(double x) const;
  double deriv2(double x) const;

  double period() const { return period_; }
  std::size_t size() const { return x_.size(); }
  const std::vector<double>& knots() const { return x_; }
  const std::vector<double>& values() const { return y_; }

 private:
  // Locates the interval [x_i, x_i + h_i) containing the wrapped query and
  // writes the local offsets used by the cubic formula.
  void locate(double x, std::size_t& i, double& a, double& b) const;

  std::vector<double> x_;   // knots, size N
  std::vector<double> y_;   // values, size N
  std::vector<double> m_;   // second derivatives at knots, size N
  std::vector<double> h_;   // interval widths, size N (h_i = x_{i+1} - x_i)
  double period_ = 0.0;
};

/// Solves a cyclic tridiagonal system where row i couples unknowns
/// i-1, i, i+1 (mod n):  a_i x_{i-1} + b_i x_i + c_i x_{i+1} = r_i.
std::vector<double> solve_cyclic_tridiagonal(const std::vector<double>& a,
                                             const std::vector<double>& b,
                                             const std::vector<double>& c,
                                             const std::vector<double>& r);

}  // namespace minkgeo
