#pragma once

namespace cpdc::units {

inline constexpr double c_light = 2.99792458e8;  // m/s
inline constexpr double pi = 3.14159265358979323846;
inline constexpr double two_pi = 2.0 * pi;

inline constexpr double nm = 1e-9;
inline constexpr double um = 1e-6;
inline constexpr double mm = 1e-3;
inline constexpr double ps = 1e-12;
inline constexpr double fs = 1e-15;
inline constexpr double THz = 1e12;  // angular, rad/s

/// Vacuum angular frequency <-> wavelength.
inline double omega_from_lambda(double lambda_m) { return two_pi * c_light / lambda_m; }
inline double lambda_from_omega(double omega_rad_s) { return two_pi * c_light / omega_rad_s; }

}  // namespace cpdc::units
