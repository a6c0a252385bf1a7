#include "minkgeo/periodic_spline.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace minkgeo {

std::vector<double> solve_cyclic_tridiagonal(const std::vector<double>& a,
                                             const std::vector<double>& b,
                                             const std::vector<double>& c,
                                             const std::vector<double>& r) {
  const std::size_t n = b.size();
  if (n < 3) throw std::invalid_argument("cyclic tridiagonal: need n >= 3");

  // Sherman-Morrison: split off the two corner entries a_0 and c_{n-1},
  // solve the plain tridiagonal system twice, then correct.
  const double gamma = -b[0];
  std::vector<double> bb(b);
  bb[0] = b[0] - gamma;
  bb[n - 1] = b[n - 1] - a[0] * c[n - 1] / gamma;

  auto thomas = [&](const std::vector<double>& rhs) {
    std::vector<double> cp(n), x(n);
    double beta = bb[0];
    x[0] = rhs[0] / beta;
    for (std::size_t i = 1; i < n; ++i) {
      cp[i] = c[i - 1] / beta;
      beta = bb[i] - a[i] * cp[i];
      x[i] = (rhs[i] - a[i] * x[i - 1]) / beta;
    }
    for (std::size_t i = n - 1; i-- > 0;) x[i] -= cp[i + 1] * x[i + 1];
    return x;
  };

  std::vector<double> u(n, 0.0);
  u[0] = gamma;
  u[n - 1] = c[n - 1];
  std::vector<double> xs = thomas(r);
  std::vector<double> zs = thomas(u);

  // v = (1, 0, ..., 0, a_0 / gamma)
  const double vx = xs[0] + a[0] / gamma * xs[n - 1];
  const double vz = zs[0] + a[0] / gamma * zs[n - 1];
  const double factor = vx / (1.0 + vz);
  for (std::size_t i = 0; i < n; ++i) xs[i] -= factor * zs[i];
  return xs;
}

PeriodicSpline::PeriodicSpline(std::vector<double> knots,
                               std::vector<double> values, double period)
    : x_(std::move(knots)), y_(std::move(values)), period_(period) {
  const std::size_t n = x_.size();
  if (n < 3) throw std::invalid_argument("periodic spline: need >= 3 knots");
  if (y_.size() != n)
    throw std::invalid_argument("periodic spline: knot/value size mismatch");
  if (!(period_ > 0.0))
    throw std::invalid_argument("periodic spline: period must be positive");
  for (std::size_t i = 0; i + 1 < n; ++i)
    if (!(x_[i] < x_[i + 1]))
      throw std::invalid_argument("periodic spline: knots not increasing");
  if (!(x_.back() - x_.front() < period_))
    throw std::invalid_argument("periodic spline: knots span a full period");

  h_.resize(n);
  for (std::size_t i = 0; i + 1 < n; ++i) h_[i] = x_[i + 1] - x_[i];
  h_[n - 1] = x_[0] + period_ - x_[n - 1];

  std::vector<double> a(n), b(n), c(n), r(n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t p = (i + n - 1) % n;  // previous interval
    const double hp = h_[p], hi = h_[i];
    const double yp = y_[p], yi = y_[i], yn = y_[(i + 1) % n];
    a[i] = hp / 6.0;
    b[i] = (hp + hi) / 3.0;
    c[i] = hi / 6.0;
    r[i] = (yn - yi) / hi - (yi - yp) / hp;
  }
  m_ = solve_cyclic_tridiagonal(a, b, c, r);
}

void PeriodicSpline::locate(double x, std::size_t& i, double& a,
                            double& b) const {
  // wrap into [x_0, x_0 + period)
  double t = std::fmod(x - x_[0], period_);
  if (t < 0.0) t += period_;
  t += x_[0];
  auto it = std::upper_bound(x_.begin(), x_.end(), t);
  i = (it == x_.begin()) ? x_.size() - 1 : std::size_t(it - x_.begin()) - 1;
  const double hi = h_[i];
  b = (t - x_[i]) / hi;
  a = 1.0 - b;
}

double PeriodicSpline::eval(double x) const {
  std::size_t i;
  double a, b;
  locate(x, i, a, b);
  const std::size_t j = (i + 1) % x_.size();
  const double hi = h_[i];
  return a * y_[i] + b * y_[j] +
         ((a * a * a - a) * m_[i] + (b * b * b - b) * m_[j]) * hi * hi / 6.0;
}

double PeriodicSpline::deriv(double x) const {
  std::size_t i;
  double a, b;
  locate(x, i, a, b);
  const std::size_t j = (i + 1) % x_.size();
  const double hi = h_[i];
  return (y_[j] - y_[i]) / hi - (3.0 * a * a - 1.0) / 6.0 * hi * m_[i] +
         (3.0 * b * b - 1.0) / 6.0 * hi * m_[j];
}

double PeriodicSpline::deriv2(double x) const {
  std::size_t i;
  double a, b;
  locate(x, i, a, b);
  const std::size_t j = (i + 1) % x_.size();
  return a * m_[i] + b * m_[j];
}

}  // namespace minkgeo
