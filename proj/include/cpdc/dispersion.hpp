#pragma once

#include "cpdc/material.hpp"

namespace cpdc {

struct WaveNumberPoint {
  double omega = 0.0;    // rad/s
  double k = 0.0;        // rad/m
  double k_prime = 0.0;  // s/m, group slowness dk/domega
};

/// Refractive index at a vacuum wavelength given in nanometers.
/// Throws std::domain_error when lambda is outside the material's range,
/// naming the material and its range.
double refractive_index(const Material& material, double lambda_vac_nm);

/// k = n(omega) omega / c and the group slowness by Richardson-extrapolated
/// central differences with relative step h = 1e-6 omega.
WaveNumberPoint wavenumber(const Material& material, double omega_rad_s);

}  // namespace cpdc
