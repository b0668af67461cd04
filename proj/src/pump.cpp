#include "cpdc/pump.hpp"

#include <cmath>
#include <stdexcept>

namespace cpdc {

PumpPulse PumpPulse::gaussian(double tau_p_s) {
  PumpPulse p;
  p.shape = Shape::gaussian;
  p.tau_p = tau_p_s;
  p.validate();
  return p;
}

void PumpPulse::validate() const {
  if (!(tau_p > 0.0)) throw std::invalid_argument("pump: tau_p must be positive");
  if (shape == Shape::tabulated) {
    if (table_omega.size() < 2 || table_omega.size() != table_amp.size())
      throw std::invalid_argument("pump: bad spectral table");
    for (std::size_t i = 1; i < table_omega.size(); ++i)
      if (!(table_omega[i] > table_omega[i - 1]))
        throw std::invalid_argument("pump: spectral table not ascending");
  }
}

namespace {

std::complex<double> interp_complex(const std::vector<double>& xs,
                                    const std::vector<std::complex<double>>& ys, double x) {
  if (x < xs.front() || x > xs.back()) return {0.0, 0.0};
  auto it = std::upper_bound(xs.begin(), xs.end(), x);
  if (it == xs.begin()) return ys.front();
  if (it == xs.end()) return ys.back();
  const std::size_t i = static_cast<std::size_t>(it - xs.begin());
  const double t = (x - xs[i - 1]) / (xs[i] - xs[i - 1]);
  return ys[i - 1] + t * (ys[i] - ys[i - 1]);
}

}  // namespace

std::complex<double> pump_amplitude(const PumpPulse& pulse, double Omega) {
  if (pulse.shape == PumpPulse::Shape::gaussian) {
    const double x = Omega * pulse.tau_p;
    return {pulse.tau_p * std::exp(-0.5 * x * x), 0.0};
  }
  return interp_complex(pulse.table_omega, pulse.table_amp, Omega);
}

std::complex<double> pump_temporal(const PumpPulse& pulse, double t) {
  if (pulse.shape == PumpPulse::Shape::gaussian) {
    const double x = t / pulse.tau_p;
    return {std::exp(-0.5 * x * x), 0.0};
  }
  if (pulse.time_axis.size() < 2 || pulse.time_axis.size() != pulse.time_amp.size())
    throw std::runtime_error("pump_temporal: tabulated pump has no temporal profile");
  return interp_complex(pulse.time_axis, pulse.time_amp, t);
}

}  // namespace cpdc
