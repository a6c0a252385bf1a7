#pragma once

#include <cmath>
#include <utility>

namespace minkgeo {

/// Golden-section minimization of a unimodal (or convex, possibly flat)
/// function on [a, b].  Ties shrink the left side, which keeps the bracket
/// valid for convex functions with flat valleys.  Returns (x_min, f_min).
template <class F>
std::pair<double, double> golden_min(F f, double a, double b, double xtol) {
  static const double gr = (std::sqrt(5.0) - 1.0) / 2.0;  // 0.618...
  double c = b - gr * (b - a);
  double d = a + gr * (b - a);
  double fc = f(c), fd = f(d);
  while (b - a > xtol) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - gr * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + gr * (b - a);
      fd = f(d);
    }
  }
  double xm = 0.5 * (a + b);
  return {xm, f(xm)};
}

/// Bisection for a continuous function with f(a) and f(b) of opposite sign.
/// Returns the midpoint of the final bracket.
template <class F>
double bisect_root(F f, double a, double b, double xtol) {
  double fa = f(a);
  for (int it = 0; it < 200 && b - a > xtol; ++it) {
    double m = 0.5 * (a + b);
    double fm = f(m);
    if ((fa <= 0.0) == (fm <= 0.0)) {
      a = m;
      fa = fm;
    } else {
      b = m;
    }
  }
  return 0.5 * (a + b);
}

}  // namespace minkgeo
