#pragma once

#include <complex>
#include <vector>

namespace cpdc {

/// Pump pulse description. The Gaussian pump has temporal profile
/// alpha_p(t) = exp(-t^2 / (2 tau_p^2)) normalized to its peak, whose
/// spectral amplitude is alphat_p(Omega) = tau_p exp(-Omega^2 tau_p^2 / 2).
/// Its bandwidth is dOmega_p = 1 / tau_p exactly.
struct PumpPulse {
  enum class Shape { gaussian, tabulated };
  Shape shape = Shape::gaussian;
  double tau_p = 0.0;  // s

  // Tabulated spectral amplitude (linear interpolation, zero outside).
  std::vector<double> table_omega;               // rad/s, ascending
  std::vector<std::complex<double>> table_amp;   // spectral amplitude

  // Optional temporal profile for tabulated pumps (used by the temporal
  // module); same interpolation contract.
  std::vector<double> time_axis;                 // s, ascending
  std::vector<std::complex<double>> time_amp;

  double delta_omega_p() const { return 1.0 / tau_p; }

  static PumpPulse gaussian(double tau_p_s);
  void validate() const;
};

/// Spectral amplitude alphat_p(Omega).
std::complex<double> pump_amplitude(const PumpPulse& pulse, double Omega);

/// Peak-normalized temporal profile alpha_p(t). Throws when a tabulated pump
/// carries no temporal table.
std::complex<double> pump_temporal(const PumpPulse& pulse, double t);

}  // namespace cpdc
