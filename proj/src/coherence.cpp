#include "cpdc/coherence.hpp"

#include <cmath>
#include <stdexcept>

#include "cpdc/numerics.hpp"
#include "cpdc/units.hpp"

namespace cpdc {

namespace {

// Widths of the diagonal and of the central antidiagonal |G| cut.
void fill_widths(CoherenceGrid& g) {
  g.spectrum.resize(g.n());
  for (std::size_t j = 0; j < g.n(); ++j) g.spectrum[j] = g.values(j, j).real();
  g.fwhm_spectrum = fwhm_main_lobe(g.axis, g.spectrum);

  // |G| along the antidiagonal cut through the center, as a function of the
  // separation d = W' - W.
  const std::size_t n = g.n();
  std::vector<double> sep, mag;
  sep.reserve(n);
  mag.reserve(n);
  for (std::size_t k = 0; k < n; ++k) {
    const std::size_t j = n - 1 - k;
    sep.push_back(g.axis[k] - g.axis[j]);
    mag.push_back(std::abs(g.values(j, k)));
  }
  g.fwhm_coherence = fwhm_main_lobe(sep, mag);
}

CoherenceGrid from_axis(Beam which, const std::vector<double>& axis, double step) {
  CoherenceGrid g;
  g.which = which;
  g.axis = axis;
  g.step = step;
  g.values = CMat(axis.size(), axis.size());
  return g;
}

}  // namespace

CoherenceGrid g1(const JsaGrid& jsa, Beam which) {
  const std::size_t traced = (which == Beam::signal) ? jsa.grid.n_i() : jsa.grid.n_s();
  if (traced < 8) throw std::runtime_error("g1: traced axis needs at least 8 points");
  const double traced_step = (which == Beam::signal) ? jsa.grid.step_i : jsa.grid.step_s;
  const auto w = trapezoid_weights(traced, traced_step);

  CoherenceGrid g = (which == Beam::signal)
                        ? from_axis(Beam::signal, jsa.grid.axis_s, jsa.grid.step_s)
                        : from_axis(Beam::idler, jsa.grid.axis_i, jsa.grid.step_i);
  g.values = (which == Beam::signal) ? gram_conj_weighted(jsa.values, w)
                                     : gram_conj_weighted_rows(jsa.values, w);
  fill_widths(g);
  return g;
}

std::vector<double> g1_spectrum(const JsaGrid& jsa, Beam which) {
  const std::size_t n_s = jsa.grid.n_s(), n_i = jsa.grid.n_i();
  if (which == Beam::signal) {
    const auto w = trapezoid_weights(n_i, jsa.grid.step_i);
    std::vector<double> spec(n_s, 0.0);
    for (std::size_t a = 0; a < n_s; ++a) {
      const cdouble* row = jsa.values.row(a);
      double acc = 0.0;
      for (std::size_t b = 0; b < n_i; ++b) acc += w[b] * std::norm(row[b]);
      spec[a] = acc;
    }
    return spec;
  }
  const auto w = trapezoid_weights(n_s, jsa.grid.step_s);
  std::vector<double> spec(n_i, 0.0);
  for (std::size_t a = 0; a < n_s; ++a) {
    const cdouble* row = jsa.values.row(a);
    for (std::size_t b = 0; b < n_i; ++b) spec[b] += w[a] * std::norm(row[b]);
  }
  return spec;
}

CoherenceGrid g1_cw_closed_form(const PhaseMatchSummary& s, const PumpPulse& pulse,
                                const std::vector<double>& axis, Beam which, double g_gain) {
  if (pulse.shape != PumpPulse::Shape::gaussian)
    throw std::runtime_error("g1_cw_closed_form: Gaussian pump only");
  const double tau_p = pulse.tau_p;
  const double ip0 = tau_p / (2.0 * std::sqrt(units::pi));
  CoherenceGrid g = from_axis(which, axis, axis.size() > 1 ? axis[1] - axis[0] : 0.0);
  // Phase sign pinned against quadrature: tracing the two quasi-CW limit
  // forms gives e^{-i d/Ogvs} for the signal and e^{+i d/Ogvs} for the
  // idler, d = W'-W.
  const double psign = (which == Beam::signal) ? -1.0 : 1.0;
  for (std::size_t j = 0; j < axis.size(); ++j) {
    for (std::size_t l = 0; l < axis.size(); ++l) {
      const double d = axis[l] - axis[j];
      const double ip = ip0 * std::exp(-0.25 * d * d * tau_p * tau_p);
      const double mag = g_gain * g_gain * ip * sinc(axis[j] * s.tau_gvs) *
                         sinc(axis[l] * s.tau_gvs);
      const double ph = psign * d * s.tau_gvs;
      g.values(j, l) = mag * cdouble(std::cos(ph), std::sin(ph));
    }
  }
  fill_widths(g);
  return g;
}

CoherenceGrid g1_ultrashort_closed_form(const PhaseMatchSummary& s, const PumpPulse& pulse,
                                        const std::vector<double>& axis, Beam which,
                                        double g_gain) {
  const double eta = s.eta;
  CoherenceGrid g = from_axis(which, axis, axis.size() > 1 ? axis[1] - axis[0] : 0.0);
  const std::size_t n = axis.size();
  std::vector<cdouble> env(n);
  if (which == Beam::signal) {
    const double pref = 0.5 * g_gain * g_gain * std::abs(s.Omega_gvs_prime);
    for (std::size_t j = 0; j < n; ++j)
      env[j] = std::sqrt(pref) * pump_amplitude(pulse, axis[j] * (1.0 - eta));
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t l = 0; l < n; ++l) {
        const double d = (axis[l] - axis[j]) * s.tau_gvm;
        g.values(j, l) =
            std::conj(env[j]) * env[l] * sinc(d) * cdouble(std::cos(d), std::sin(d));
      }
  } else {
    const double pref = 0.5 * g_gain * g_gain * std::abs(s.Omega_gvm);
    for (std::size_t j = 0; j < n; ++j)
      env[j] = std::sqrt(pref) * pump_amplitude(pulse, -axis[j] * (1.0 - eta) / eta);
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t l = 0; l < n; ++l) {
        const double d = (axis[l] - axis[j]) * s.tau_gvs_prime;
        g.values(j, l) =
            std::conj(env[j]) * env[l] * sinc(d) * cdouble(std::cos(d), std::sin(d));
      }
  }
  fill_widths(g);
  return g;
}

CoherenceGrid g1_intermediate_closed_form(const PhaseMatchSummary& s, const PumpPulse& pulse,
                                          const std::vector<double>& axis, Beam which,
                                          double g_gain) {
  const double eta = s.eta;
  CoherenceGrid g = from_axis(which, axis, axis.size() > 1 ? axis[1] - axis[0] : 0.0);
  const std::size_t n = axis.size();
  std::vector<cdouble> f(n);
  if (which == Beam::signal) {
    // Rank-1 coherent form: (g^2 Ogvs / 2) a*(W(1-eta)) a(W'(1-eta)) e^{i d/Ogvm}
    const double pref = 0.5 * g_gain * g_gain * std::abs(s.Omega_gvs);
    for (std::size_t j = 0; j < n; ++j) {
      const double ph = axis[j] * s.tau_gvm;
      f[j] = std::sqrt(pref) * pump_amplitude(pulse, axis[j] * (1.0 - eta)) *
             cdouble(std::cos(ph), std::sin(ph));
    }
  } else {
    // (g^2 tau_p / (2 sqrt(pi))) sinc(W/Ogvs) sinc(W'/Ogvs) e^{i d/Ogvs};
    // the constant is pinned against quadrature, as in the CW form.
    const double pref = 0.5 * g_gain * g_gain * pulse.tau_p / std::sqrt(units::pi);
    for (std::size_t j = 0; j < n; ++j) {
      const double x = axis[j] * s.tau_gvs;
      f[j] = std::sqrt(pref) * sinc(x) * cdouble(std::cos(x), std::sin(x));
    }
  }
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t l = 0; l < n; ++l) g.values(j, l) = std::conj(f[j]) * f[l];
  fill_widths(g);
  return g;
}

IntensityCorrelation siegert_intensity_correlation(const CoherenceGrid& g) {
  IntensityCorrelation out;
  out.axis = g.axis;
  out.step = g.step;
  const std::size_t n = g.n();
  out.delta_weight.resize(n);
  out.smooth.resize(n * n);
  for (std::size_t j = 0; j < n; ++j) out.delta_weight[j] = g.values(j, j).real();
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t l = 0; l < n; ++l)
      out.smooth[j * n + l] =
          out.delta_weight[j] * out.delta_weight[l] + std::norm(g.values(j, l));
  return out;
}

double relative_l2(const CoherenceGrid& a, const CoherenceGrid& b, bool magnitude_only) {
  if (a.n() != b.n()) throw std::runtime_error("relative_l2: shape mismatch");
  double num = 0.0, den = 0.0;
  for (std::size_t i = 0; i < a.values.a.size(); ++i) {
    if (magnitude_only) {
      const double d = std::abs(a.values.a[i]) - std::abs(b.values.a[i]);
      num += d * d;
    } else {
      num += std::norm(a.values.a[i] - b.values.a[i]);
    }
    den += std::norm(b.values.a[i]);
  }
  if (!(den > 0.0)) throw std::runtime_error("relative_l2: zero reference");
  return std::sqrt(num / den);
}

}  // namespace cpdc
