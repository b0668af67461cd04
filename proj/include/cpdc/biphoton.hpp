#pragma once

#include <string>
#include <vector>

#include "cpdc/linalg.hpp"
#include "cpdc/pump.hpp"
#include "cpdc/qpm.hpp"

namespace cpdc {

/// Rectangular frequency-offset grid. Both axes are uniform, centered so that
/// 0 is a grid point, with power-of-two counts (FFT-ready).
struct FrequencyGrid {
  std::vector<double> axis_s;  // rad/s
  std::vector<double> axis_i;
  double step_s = 0.0;
  double step_i = 0.0;

  std::size_t n_s() const { return axis_s.size(); }
  std::size_t n_i() const { return axis_i.size(); }

  /// Axis (j - n/2) * step for j = 0..n-1; n must be a power of two >= 16.
  static FrequencyGrid centered(double step_s, std::size_t n_s, double step_i, std::size_t n_i);
  void validate() const;
};

enum class JsaRegime { exact, cw, ultrashort, intermediate };

/// Complex joint spectral amplitude psi(Omega_s, Omega_i) sampled on a grid.
/// Row index runs over the signal axis, column index over the idler axis.
struct JsaGrid {
  FrequencyGrid grid;
  CMat values;  // n_s x n_i
  JsaRegime regime = JsaRegime::exact;
  std::string scenario_name;
  double g = 0.0;
  double tau_p = 0.0;

  /// Peak-magnitude bound for a Gaussian pump: max |psi| <= g tau_p / sqrt(2 pi).
  double peak_bound() const;
};

/// Which single-variable parameterization a limiting form uses for the factor
/// that the opposite variable was eliminated from.
enum class LimitForm { signal, idler };

struct GridPolicy {
  double samples_per_feature = 16.0;  // target sampling of the narrowest feature
  double sinc_lobes = 4.0;            // half-span in units of pi*Omega_gvs
  double pump_sigmas = 4.0;           // half-span in units of the pump bandwidth
  std::size_t max_count = 4096;       // per-axis cap
  double min_samples_per_feature = 2.5;  // below this the cap is an error
  std::size_t min_count = 16;
  std::size_t force_n_s = 0;  // when nonzero, force the count (span kept)
  std::size_t force_n_i = 0;
};

/// Span/resolution heuristic. Spans cover the phase-matching sinc out to
/// `sinc_lobes` pi Omega_gvs plus the pump-driven extent per axis; steps
/// resolve the narrowest feature of each axis. Counts clamp at max_count as
/// long as at least min_samples_per_feature survive; otherwise throws
/// std::runtime_error instructing a manual grid.
FrequencyGrid default_grid(const PhaseMatchSummary& summary, const PumpPulse& pulse,
                           const GridPolicy& policy = {});

struct FftGridPolicy {
  double tail_lobes = 260.0;   // sinc-tail coverage, units of Omega_gvs
  double pump_sigmas = 5.0;    // pump coverage, units of dOmega_p
  double period_pump_mult = 6.0;  // time-axis period in units of tau_p
  std::size_t max_count = 16384;
};

/// Wide-and-sparse grid suited to the 2-D Fourier transform: spans cover the
/// slowly decaying sinc tails, steps are set by the required unaliased time
/// window rather than by feature resolution.
FrequencyGrid fft_grid(const PhaseMatchSummary& summary, const PumpPulse& pulse,
                       const FftGridPolicy& policy = {});

/// psi = (g/sqrt(2 pi)) alphat_p(Omega_s + Omega_i) sinc(D l_c / 2) e^{-i D l_c / 2}.
JsaGrid jsa_exact(const CrystalScenario& scenario, const PhaseMatchSummary& summary,
                  const PumpPulse& pulse, const FrequencyGrid& grid,
                  MismatchModel model = MismatchModel::linear);

/// CW-pump limit: pump factor times sinc(Omega/Omega_gvs) in the chosen
/// variable; the two forms coincide on the antidiagonal.
JsaGrid jsa_cw_limit(const PhaseMatchSummary& summary, const PumpPulse& pulse,
                     const FrequencyGrid& grid, LimitForm form = LimitForm::signal,
                     double g = 0.01);

/// Ultrashort-pump limit: pump collapsed onto the phase-matching line.
JsaGrid jsa_ultrashort_limit(const PhaseMatchSummary& summary, const PumpPulse& pulse,
                             const FrequencyGrid& grid, LimitForm form = LimitForm::signal,
                             double g = 0.01);

/// Intermediate limit: exact outer product of a signal and an idler factor.
JsaGrid jsa_intermediate_limit(const PhaseMatchSummary& summary, const PumpPulse& pulse,
                               const FrequencyGrid& grid, double g = 0.01);

/// Relative L2 distance between two grids sampled on identical axes.
double relative_l2(const JsaGrid& a, const JsaGrid& b);

}  // namespace cpdc
