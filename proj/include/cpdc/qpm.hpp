#pragma once

#include <string>

#include "cpdc/material.hpp"

namespace cpdc {

/// Crystal + poling + pump configuration; the single input record for all
/// computations. Counterpropagating geometry: the idler is the backward wave.
struct CrystalScenario {
  Material material_pump;
  Material material_signal;
  Material material_idler;
  double l_c = 0.0;       // crystal length, m
  double Lambda = 0.0;    // poling period, m
  double lambda_p = 0.0;  // pump central wavelength, m
  double g = 0.01;        // dimensionless gain parameter
  double pump_tau = 0.0;  // pump duration tau_p, s
  int grating_order = 1;
  // Optional search window for the signal root, m; both zero means automatic.
  double lambda_s_window_lo = 0.0;
  double lambda_s_window_hi = 0.0;
  std::string name;

  /// Above g = pi/2 the low-gain model is invalid (MOPO threshold).
  bool gain_warning() const;
  void validate() const;
};

/// Central frequencies, group slownesses and every derived scale of the
/// counterpropagating geometry.
struct PhaseMatchSummary {
  double omega_p0 = 0.0, omega_s0 = 0.0, omega_i0 = 0.0;  // rad/s
  double kprime_p = 0.0, kprime_s = 0.0, kprime_i = 0.0;  // s/m
  double tau_gvm = 0.0;        // (l_c/2)(k'_p - k'_s), signed
  double tau_gvs_prime = 0.0;  // (l_c/2)(k'_p + k'_i)
  double tau_gvs = 0.0;        // (l_c/2)(k'_s + k'_i)
  double eta = 0.0;            // tau_gvm / tau_gvs_prime
  double Omega_gvm = 0.0, Omega_gvs_prime = 0.0, Omega_gvs = 0.0;  // inverses
  double t_As = 0.0, t_Ai = 0.0, t_Ap = 0.0;  // wavepacket-center arrival times
  bool gain_warning = false;

  double lambda_s_m() const;
  double lambda_i_m() const;
};

/// Solve k_s(w_s) - k_i(w_p - w_s) - k_p(w_p) + m 2 pi / Lambda = 0 for the
/// signal frequency by scanning and bisection to |D0| l_c < 1e-10, then fill
/// every derived scale.
/// Throws std::runtime_error when no phase-matched point exists in the
/// scanned interval or when several roots are found (the error lists them).
PhaseMatchSummary solve_central_frequencies(const CrystalScenario& scenario);

enum class MismatchModel { full, linear };

/// D(Omega_s, Omega_i) * l_c / 2, dimensionless.
/// full: complete dispersion relations; linear: -(Omega_s/Omega_gvm +
/// Omega_i/Omega_gvs_prime), the first-order expansion.
double phase_mismatch(const PhaseMatchSummary& summary, const CrystalScenario& scenario,
                      double Omega_s, double Omega_i, MismatchModel model);

}  // namespace cpdc
