#pragma once

#include <string>
#include <vector>

#include "cpdc/biphoton.hpp"

namespace cpdc {

/// Temporal biphoton correlation phi on barred-time axes (times measured from
/// the arrival of each wavepacket center, t_As and t_Ai).
struct TemporalGrid {
  enum class Method { analytic, fft };
  std::vector<double> axis_s;  // barred signal time, s
  std::vector<double> axis_i;  // barred idler time, s
  double step_s = 0.0;
  double step_i = 0.0;
  CMat values;  // n_s x n_i
  Method method = Method::analytic;
  double t_As = 0.0;
  double t_Ai = 0.0;
  // e^{i k_s l_c} is unobservable in magnitudes; kept as metadata (mod 2 pi).
  double constant_phase = 0.0;

  std::size_t n_s() const { return axis_s.size(); }
  std::size_t n_i() const { return axis_i.size(); }
};

/// Closed form under linear phase matching:
///   phi = g/(2 tau_gvs) alpha_p((ts - eta ti)/(1-eta)) Rect((ts - ti)/(2 tau_gvs))
/// Rect uses the half-open convention: 1 on [-1/2, 1/2), 0 elsewhere.
/// The constant e^{i k_s l_c} is excluded from the values (metadata only).
TemporalGrid phi_analytic(const PhaseMatchSummary& summary, const PumpPulse& pulse,
                          const CrystalScenario& scenario,
                          const std::vector<double>& axis_s,
                          const std::vector<double>& axis_i);

/// Uniform centered time axes sized for the Rect support and pump envelope:
/// span +-1.5 max(tau_gvs, 4 tau_p), count per axis as given.
std::vector<double> default_time_axis(const PhaseMatchSummary& summary,
                                      const PumpPulse& pulse, std::size_t count);

/// 2-D discrete transform of a JsaGrid with the 1/sqrt(2 pi)-per-axis
/// convention. The linear part of the e^{i k_s l_c} propagation phase and the
/// recentering to barred times combine into e^{-i(W_s tau_gvm + W_i tau_gvs')}
/// applied before the transform; the output time axes are the conjugate grids.
TemporalGrid phi_fft(const JsaGrid& jsa, const PhaseMatchSummary& summary);

struct RegimeReport {
  std::string label;      // "cw" | "ultrashort" | "intermediate" | "crossover"
  double ratio_cw = 0.0;     // tau_p / tau_gvs'
  double ratio_ultra = 0.0;  // tau_p / tau_gvm
};

/// Classification: cw when tau_p/tau_gvs' > 5; ultrashort when
/// tau_p/tau_gvm < 0.2; intermediate when tau_p/tau_gvs' < 0.2 and
/// tau_p/tau_gvm > 3; crossover otherwise.
RegimeReport regime_report(const PhaseMatchSummary& summary, const PumpPulse& pulse);

/// Relative L2 distance between two temporal grids on identical axes.
double relative_l2(const TemporalGrid& a, const TemporalGrid& b);

}  // namespace cpdc
