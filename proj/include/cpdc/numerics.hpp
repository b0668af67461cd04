#pragma once

#include <cstddef>
#include <functional>
#include <stdexcept>
#include <vector>

namespace cpdc {

/// Unnormalized sinc, sin(x)/x with sinc(0) = 1.
double sinc(double x);

/// Smallest power of two >= n (n >= 1).
std::size_t next_pow2(std::size_t n);

/// Composite trapezoid weights for a uniform grid of n points with spacing step.
std::vector<double> trapezoid_weights(std::size_t n, double step);

/// Trapezoid integral of uniformly sampled values.
double trapezoid(const std::vector<double>& values, double step);

struct Bracket {
  double lo = 0.0;
  double hi = 0.0;
};

/// Scan f on [lo, hi] with `steps` uniform intervals and return every
/// sign-change bracket. Intervals where f is non-finite are skipped.
std::vector<Bracket> find_brackets(const std::function<double(double)>& f,
                                   double lo, double hi, std::size_t steps);

/// Bisection refinement of a bracketed root; stops once |f| <= ftol or the
/// interval shrinks to machine resolution. Throws std::runtime_error if the
/// bracket does not actually straddle a sign change.
double bisect(const std::function<double(double)>& f, Bracket b, double ftol);

/// Full width at half maximum of a sampled peak, measured on the main lobe
/// only: side lobes are excluded by walking from the peak down to the first
/// rise (or to a 1e-6 floor). Crossings are located by linear interpolation.
/// Throws std::runtime_error if the half level is never crossed on either side.
double fwhm_main_lobe(const std::vector<double>& axis, const std::vector<double>& y);

}  // namespace cpdc
