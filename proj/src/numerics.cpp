#include "cpdc/numerics.hpp"

#include <cmath>
#include <limits>

namespace cpdc {

double sinc(double x) {
  // Taylor fallback keeps full precision through the removable singularity.
  if (std::abs(x) < 1e-4) {
    double x2 = x * x;
    return 1.0 - x2 / 6.0 * (1.0 - x2 / 20.0);
  }
  return std::sin(x) / x;
}

std::size_t next_pow2(std::size_t n) {
  std::size_t p = 1;
  while (p < n) p <<= 1;
  return p;
}

std::vector<double> trapezoid_weights(std::size_t n, double step) {
  if (n < 2) throw std::runtime_error("trapezoid_weights: need at least 2 points");
  std::vector<double> w(n, step);
  w.front() = 0.5 * step;
  w.back() = 0.5 * step;
  return w;
}

double trapezoid(const std::vector<double>& values, double step) {
  if (values.size() < 2) throw std::runtime_error("trapezoid: need at least 2 points");
  double s = 0.5 * (values.front() + values.back());
  for (std::size_t i = 1; i + 1 < values.size(); ++i) s += values[i];
  return s * step;
}

std::vector<Bracket> find_brackets(const std::function<double(double)>& f,
                                   double lo, double hi, std::size_t steps) {
  std::vector<Bracket> out;
  if (!(hi > lo) || steps < 1) return out;
  double x_prev = lo;
  double f_prev = f(lo);
  for (std::size_t i = 1; i <= steps; ++i) {
    double x = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(steps);
    double fx = f(x);
    if (std::isfinite(f_prev) && std::isfinite(fx)) {
      if (f_prev == 0.0)
        out.push_back({x_prev, x_prev});
      else if (f_prev * fx < 0.0)
        out.push_back({x_prev, x});
    }
    x_prev = x;
    f_prev = fx;
  }
  if (std::isfinite(f_prev) && f_prev == 0.0) out.push_back({x_prev, x_prev});
  return out;
}

double bisect(const std::function<double(double)>& f, Bracket b, double ftol) {
  if (b.lo == b.hi) return b.lo;
  double flo = f(b.lo);
  double fhi = f(b.hi);
  if (flo == 0.0) return b.lo;
  if (fhi == 0.0) return b.hi;
  if (flo * fhi > 0.0) throw std::runtime_error("bisect: bracket does not straddle a root");
  for (int it = 0; it < 200; ++it) {
    double mid = 0.5 * (b.lo + b.hi);
    if (mid == b.lo || mid == b.hi) return mid;  // interval at one ulp
    double fm = f(mid);
    if (std::abs(fm) <= ftol) return mid;
    if ((fm < 0.0) == (flo < 0.0)) {
      b.lo = mid;
      flo = fm;
    } else {
      b.hi = mid;
    }
  }
  return 0.5 * (b.lo + b.hi);
}

namespace {

// Half-maximum crossing between consecutive samples, linear interpolation.
double cross(double x0, double y0, double x1, double y1, double level) {
  if (y1 == y0) return x1;
  return x0 + (level - y0) / (y1 - y0) * (x1 - x0);
}

}  // namespace

double fwhm_main_lobe(const std::vector<double>& axis, const std::vector<double>& y) {
  if (axis.size() != y.size() || y.size() < 3)
    throw std::runtime_error("fwhm_main_lobe: bad input");
  std::size_t peak = 0;
  for (std::size_t i = 1; i < y.size(); ++i)
    if (y[i] > y[peak]) peak = i;
  const double ymax = y[peak];
  if (!(ymax > 0.0)) throw std::runtime_error("fwhm_main_lobe: non-positive peak");
  const double half = 0.5 * ymax;
  const double floor = 1e-6 * ymax;

  // Walk downhill from the peak; stop at the first local rise so side lobes
  // never contribute.
  double xl = std::numeric_limits<double>::quiet_NaN();
  for (std::size_t i = peak; i > 0; --i) {
    if (y[i - 1] > y[i] && y[i] < half) break;
    if (y[i - 1] <= half && y[i] >= half) {
      xl = cross(axis[i - 1], y[i - 1], axis[i], y[i], half);
      break;
    }
    if (y[i - 1] < floor) break;
  }
  double xr = std::numeric_limits<double>::quiet_NaN();
  for (std::size_t i = peak; i + 1 < y.size(); ++i) {
    if (y[i + 1] > y[i] && y[i] < half) break;
    if (y[i + 1] <= half && y[i] >= half) {
      xr = cross(axis[i], y[i], axis[i + 1], y[i + 1], half);
      break;
    }
    if (y[i + 1] < floor) break;
  }
  if (std::isnan(xl) || std::isnan(xr))
    throw std::runtime_error("fwhm_main_lobe: half maximum not crossed inside grid");
  return xr - xl;
}

}  // namespace cpdc
