#include "cpdc/temporal.hpp"

#include <cmath>
#include <stdexcept>

#include "cpdc/numerics.hpp"
#include "cpdc/units.hpp"

namespace cpdc {

using units::two_pi;

namespace {

double rect_half_open(double x) { return (x >= -0.5 && x < 0.5) ? 1.0 : 0.0; }

}  // namespace

TemporalGrid phi_analytic(const PhaseMatchSummary& s, const PumpPulse& pulse,
                          const CrystalScenario& scenario,
                          const std::vector<double>& axis_s,
                          const std::vector<double>& axis_i) {
  if (axis_s.size() < 2 || axis_i.size() < 2)
    throw std::runtime_error("phi_analytic: axes too small");
  TemporalGrid out;
  out.axis_s = axis_s;
  out.axis_i = axis_i;
  out.step_s = axis_s[1] - axis_s[0];
  out.step_i = axis_i[1] - axis_i[0];
  out.values = CMat(axis_s.size(), axis_i.size());
  out.method = TemporalGrid::Method::analytic;
  out.t_As = s.t_As;
  out.t_Ai = s.t_Ai;
  const double k_s = s.omega_s0 / units::c_light *
                     scenario.material_signal.index_unchecked_omega(s.omega_s0);
  out.constant_phase = std::fmod(k_s * scenario.l_c, two_pi);

  const double eta = s.eta;
  const double pref = scenario.g / (2.0 * s.tau_gvs);
  for (std::size_t a = 0; a < axis_s.size(); ++a) {
    cdouble* row = out.values.row(a);
    const double ts = axis_s[a];
    for (std::size_t b = 0; b < axis_i.size(); ++b) {
      const double ti = axis_i[b];
      const double box = rect_half_open((ts - ti) / (2.0 * s.tau_gvs));
      if (box == 0.0) {
        row[b] = 0.0;
        continue;
      }
      const double u = (ts - eta * ti) / (1.0 - eta);
      row[b] = pref * pump_temporal(pulse, u);
    }
  }
  return out;
}

std::vector<double> default_time_axis(const PhaseMatchSummary& s, const PumpPulse& pulse,
                                      std::size_t count) {
  const double span = 1.5 * std::max(std::abs(s.tau_gvs), 4.0 * pulse.tau_p);
  std::vector<double> axis(count);
  const double step = 2.0 * span / static_cast<double>(count);
  for (std::size_t j = 0; j < count; ++j)
    axis[j] = (static_cast<double>(j) - static_cast<double>(count / 2)) * step;
  return axis;
}

TemporalGrid phi_fft(const JsaGrid& jsa, const PhaseMatchSummary& s) {
  jsa.grid.validate();  // uniform power-of-two axes
  const std::size_t n_s = jsa.grid.n_s(), n_i = jsa.grid.n_i();

  TemporalGrid out;
  out.method = TemporalGrid::Method::fft;
  out.t_As = s.t_As;
  out.t_Ai = s.t_Ai;
  out.step_s = two_pi / (static_cast<double>(n_s) * jsa.grid.step_s);
  out.step_i = two_pi / (static_cast<double>(n_i) * jsa.grid.step_i);
  out.axis_s.resize(n_s);
  out.axis_i.resize(n_i);
  for (std::size_t j = 0; j < n_s; ++j)
    out.axis_s[j] = (static_cast<double>(j) - static_cast<double>(n_s / 2)) * out.step_s;
  for (std::size_t j = 0; j < n_i; ++j)
    out.axis_i[j] = (static_cast<double>(j) - static_cast<double>(n_i / 2)) * out.step_i;

  // Barred-time recentering absorbs the linear propagation phase:
  // psi' = psi e^{-i(W_s tau_gvm + W_i tau_gvs')}.
  out.values = jsa.values;
  for (std::size_t a = 0; a < n_s; ++a) {
    const double ph_s = jsa.grid.axis_s[a] * s.tau_gvm;
    cdouble* row = out.values.row(a);
    for (std::size_t b = 0; b < n_i; ++b) {
      const double ph = ph_s + jsa.grid.axis_i[b] * s.tau_gvs_prime;
      row[b] *= cdouble(std::cos(ph), -std::sin(ph));
    }
  }
  centered_fft2(out.values, jsa.grid.step_s * jsa.grid.step_i / two_pi);
  return out;
}

RegimeReport regime_report(const PhaseMatchSummary& s, const PumpPulse& pulse) {
  RegimeReport r;
  r.ratio_cw = pulse.tau_p / std::abs(s.tau_gvs_prime);
  r.ratio_ultra = pulse.tau_p / std::abs(s.tau_gvm);
  // The intermediate window opens at 3 tau_gvm; the canonical intermediate
  // operating point sits at 4 tau_gvm and must classify as such.
  if (r.ratio_cw > 5.0)
    r.label = "cw";
  else if (r.ratio_ultra < 0.2)
    r.label = "ultrashort";
  else if (r.ratio_cw < 0.2 && r.ratio_ultra > 3.0)
    r.label = "intermediate";
  else
    r.label = "crossover";
  return r;
}

double relative_l2(const TemporalGrid& a, const TemporalGrid& b) {
  if (a.values.rows != b.values.rows || a.values.cols != b.values.cols)
    throw std::runtime_error("relative_l2: shape mismatch");
  double num = 0.0, den = 0.0;
  for (std::size_t i = 0; i < a.values.a.size(); ++i) {
    num += std::norm(a.values.a[i] - b.values.a[i]);
    den += std::norm(b.values.a[i]);
  }
  if (!(den > 0.0)) throw std::runtime_error("relative_l2: zero reference");
  return std::sqrt(num / den);
}

}  // namespace cpdc
