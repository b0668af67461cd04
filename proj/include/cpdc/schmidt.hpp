#pragma once

#include <functional>
#include <string>
#include <vector>

#include "cpdc/biphoton.hpp"

namespace cpdc {

/// Entanglement quantification for one JsaGrid.
struct SchmidtReport {
  double kappa_integral = 0.0;  // N^2 / B from the double convolution
  double kappa_svd = 0.0;       // from the singular-value spectrum
  double N = 0.0;               // mean photon number
  double B = 0.0;               // integral of |G1|^2
  double g2 = 0.0;              // 1 + 1/kappa_integral
  double asymptote_cw = 0.0;
  double asymptote_ultrashort = 0.0;
  double kappa_min_gaussian = 0.0;
  double delta_omega_p_at_min = 0.0;
  std::vector<double> schmidt_spectrum;  // normalized lambda_n, descending
  std::size_t n_s = 0, n_i = 0;
  std::string scenario_name;
  double tau_p = 0.0;
};

struct SchmidtIntegralResult {
  double N = 0.0;
  double B = 0.0;
  double kappa = 0.0;
};

/// N = integral |psi|^2, B = double integral |G1_s|^2 computed directly from
/// psi via the double convolution; trapezoid quadrature throughout.
SchmidtIntegralResult schmidt_integral(const JsaGrid& jsa);

struct SchmidtSvdResult {
  double kappa = 0.0;
  std::vector<double> spectrum;  // normalized lambda_n, descending
};

/// Singular-value oracle: spectrum of psi scaled by sqrt(dW_s dW_i);
/// lambda_n = sigma_n^2 / sum sigma^2, kappa = 1 / sum lambda_n^2.
SchmidtSvdResult schmidt_svd(const JsaGrid& jsa);

struct KappaAsymptotes {
  double cw = 0.0;          // (3/2) sqrt(pi/2) Omega_gvs' / dOmega_p
  double ultrashort = 0.0;  // 1/(1-eta) sqrt(2/pi) dOmega_p / Omega_gvm
  double kappa_min = 0.0;   // (1+eta)/(1-eta), Gaussian-approximation result
  double delta_omega_p_at_min = 0.0;  // sqrt(3 Omega_gvs' Omega_gvm)
};

KappaAsymptotes kappa_asymptotes(const PhaseMatchSummary& summary, const PumpPulse& pulse);

/// Full report for one grid: both kappa routes plus the asymptotes.
SchmidtReport schmidt_report(const JsaGrid& jsa, const PhaseMatchSummary& summary);

struct SweepRow {
  double tau_p = 0.0;
  double delta_omega_p = 0.0;
  double kappa_integral = 0.0;
  double kappa_svd = 0.0;
  double asym_cw = 0.0;
  double asym_ultrashort = 0.0;
  bool ok = false;
  std::string error;
};

struct SweepPolicy {
  GridPolicy grid;             // grid heuristic used per row
  MismatchModel model = MismatchModel::linear;
  SweepPolicy() {
    grid.samples_per_feature = 8.0;
    grid.max_count = 1024;
    grid.min_samples_per_feature = 1.0;
  }
};

/// kappa across a list of pump durations. Rows re-grid individually; a row
/// that fails records its error and the sweep continues.
std::vector<SweepRow> kappa_sweep(const CrystalScenario& scenario,
                                  const PhaseMatchSummary& summary,
                                  const std::vector<double>& tau_p_list,
                                  const SweepPolicy& policy = {});

/// Log-spaced helper covering [lo, hi].
std::vector<double> log_spaced(double lo, double hi, std::size_t count);

struct ConvergenceResult {
  JsaGrid jsa;                       // the converged grid
  std::vector<double> kappa_levels;  // kappa_integral per refinement level
  std::size_t level = 0;             // level at which the tolerance was met
};

/// Doubles grid resolution and span alternately (resolution first) until
/// kappa_integral moves less than rel_tol between levels; at most
/// max_refinements doublings. Throws with the kappa sequence on failure.
ConvergenceResult convergence_check(
    const std::function<JsaGrid(const FrequencyGrid&)>& producer,
    const FrequencyGrid& base, double rel_tol = 0.005, std::size_t max_refinements = 3);

}  // namespace cpdc
