#include "cpdc/biphoton.hpp"

#include <cmath>
#include <stdexcept>

#include "cpdc/numerics.hpp"
#include "cpdc/units.hpp"

namespace cpdc {

using units::two_pi;

FrequencyGrid FrequencyGrid::centered(double step_s, std::size_t n_s, double step_i,
                                      std::size_t n_i) {
  FrequencyGrid g;
  g.step_s = step_s;
  g.step_i = step_i;
  g.axis_s.resize(n_s);
  g.axis_i.resize(n_i);
  for (std::size_t j = 0; j < n_s; ++j)
    g.axis_s[j] = (static_cast<double>(j) - static_cast<double>(n_s / 2)) * step_s;
  for (std::size_t j = 0; j < n_i; ++j)
    g.axis_i[j] = (static_cast<double>(j) - static_cast<double>(n_i / 2)) * step_i;
  g.validate();
  return g;
}

void FrequencyGrid::validate() const {
  auto pow2 = [](std::size_t n) { return n >= 16 && (n & (n - 1)) == 0; };
  if (!pow2(n_s()) || !pow2(n_i()))
    throw std::runtime_error("FrequencyGrid: counts must be powers of two >= 16");
  if (!(step_s > 0.0) || !(step_i > 0.0))
    throw std::runtime_error("FrequencyGrid: steps must be positive");
  if (axis_s[n_s() / 2] != 0.0 || axis_i[n_i() / 2] != 0.0)
    throw std::runtime_error("FrequencyGrid: zero must be a grid point");
  auto uniform = [](const std::vector<double>& axis, double step) {
    for (std::size_t j = 1; j < axis.size(); ++j)
      if (std::abs(axis[j] - axis[j - 1] - step) > 1e-9 * step) return false;
    return true;
  };
  if (!uniform(axis_s, step_s) || !uniform(axis_i, step_i))
    throw std::runtime_error("FrequencyGrid: axes must be uniform");
}

double JsaGrid::peak_bound() const { return g * tau_p / std::sqrt(two_pi); }

namespace {

std::size_t pick_count(double span, double step_target, const GridPolicy& p, std::size_t forced) {
  if (forced) {
    if ((forced & (forced - 1)) != 0 || forced < p.min_count)
      throw std::runtime_error("default_grid: forced count must be a power of two >= 16");
    return forced;
  }
  const double needed = 2.0 * span / step_target;
  std::size_t n = next_pow2(static_cast<std::size_t>(std::ceil(needed)));
  n = std::max(n, p.min_count);
  if (n > p.max_count) {
    const double granted = static_cast<double>(p.max_count) / needed * p.samples_per_feature;
    if (granted < p.min_samples_per_feature)
      throw std::runtime_error(
          "default_grid: grid cap exceeded; supply a manual grid (needed " +
          std::to_string(static_cast<std::size_t>(needed)) + " points per axis)");
    n = p.max_count;
  }
  return n;
}

}  // namespace

FrequencyGrid default_grid(const PhaseMatchSummary& s, const PumpPulse& pulse,
                           const GridPolicy& policy) {
  const double dop = pulse.delta_omega_p();
  const double abs_eta = std::abs(s.eta);
  const double one_minus = std::max(1.0 - abs_eta, 0.5);
  const double o_gvs = std::abs(s.Omega_gvs);

  // Extents: sinc support along the phase-matching line plus the pump-driven
  // extent of each axis (see the limiting forms).
  const double span_s =
      policy.sinc_lobes * units::pi * o_gvs + policy.pump_sigmas * dop / one_minus;
  const double span_i = policy.sinc_lobes * units::pi * o_gvs +
                        policy.pump_sigmas * dop * abs_eta / one_minus;

  // Narrowest feature per axis. Omega_gvm may be huge (zero-GVM points);
  // the pump bandwidth then rules.
  const double feat_s = std::min(dop, std::abs(s.Omega_gvm));
  const double feat_i = std::min(dop, std::abs(s.Omega_gvs_prime));

  const double step_s_t = feat_s / policy.samples_per_feature;
  const double step_i_t = feat_i / policy.samples_per_feature;
  const std::size_t n_s = pick_count(span_s, step_s_t, policy, policy.force_n_s);
  const std::size_t n_i = pick_count(span_i, step_i_t, policy, policy.force_n_i);
  return FrequencyGrid::centered(2.0 * span_s / static_cast<double>(n_s), n_s,
                                 2.0 * span_i / static_cast<double>(n_i), n_i);
}

FrequencyGrid fft_grid(const PhaseMatchSummary& s, const PumpPulse& pulse,
                       const FftGridPolicy& policy) {
  const double dop = pulse.delta_omega_p();
  const double abs_eta = std::abs(s.eta);
  const double one_minus = std::max(1.0 - abs_eta, 0.5);
  const double o_gvs = std::abs(s.Omega_gvs);
  const double tau_p = pulse.tau_p;
  const double abs_gvm = std::abs(s.tau_gvm);

  const double span_s = policy.tail_lobes * o_gvs + policy.pump_sigmas * dop / one_minus;
  const double span_i =
      policy.tail_lobes * o_gvs + policy.pump_sigmas * dop * abs_eta / one_minus;

  // Time windows that must fit one period of the conjugate axis: the pump
  // envelope plus, for the signal, the ultrashort Rect width 2 tau_gvm, and
  // for the backward idler the full Rect width 2 tau_gvs.
  const double period_s = policy.period_pump_mult * tau_p + 8.0 * abs_gvm;
  const double period_i =
      policy.period_pump_mult * tau_p + 4.0 * (std::abs(s.tau_gvs) + abs_gvm);
  const double step_s = two_pi / period_s;
  const double step_i = two_pi / period_i;

  auto count = [&](double span, double step) {
    std::size_t n = next_pow2(static_cast<std::size_t>(std::ceil(2.0 * span / step)));
    n = std::max<std::size_t>(n, 16);
    if (n > policy.max_count)
      throw std::runtime_error("fft_grid: grid cap exceeded; supply a manual grid");
    return n;
  };
  const std::size_t n_s = count(span_s, step_s);
  const std::size_t n_i = count(span_i, step_i);
  // Keep the requested steps (hence the time periods); enlarging the count
  // only widens the spectral span, which is harmless.
  return FrequencyGrid::centered(step_s, n_s, step_i, n_i);
}

namespace {

JsaGrid make_result(const FrequencyGrid& grid, const PumpPulse& pulse, JsaRegime regime,
                    double g_gain) {
  JsaGrid out;
  out.grid = grid;
  out.values = CMat(grid.n_s(), grid.n_i());
  out.regime = regime;
  out.g = g_gain;
  out.tau_p = pulse.tau_p;
  return out;
}

}  // namespace

JsaGrid jsa_exact(const CrystalScenario& scenario, const PhaseMatchSummary& summary,
                  const PumpPulse& pulse, const FrequencyGrid& grid, MismatchModel model) {
  grid.validate();
  JsaGrid out = make_result(grid, pulse, JsaRegime::exact, scenario.g);
  out.scenario_name = scenario.name;
  const double pref = scenario.g / std::sqrt(two_pi);
  const std::size_t n_s = grid.n_s(), n_i = grid.n_i();

  if (model == MismatchModel::linear) {
    // D l_c/2 = -(tau_gvm W_s + tau_gvs' W_i); evaluated inline for speed.
    for (std::size_t a = 0; a < n_s; ++a) {
      const double ws = grid.axis_s[a];
      const double s_row = ws * summary.tau_gvm;
      cdouble* row = out.values.row(a);
      for (std::size_t b = 0; b < n_i; ++b) {
        const double wi = grid.axis_i[b];
        const double sarg = s_row + wi * summary.tau_gvs_prime;  // = -D l_c/2
        const cdouble pump = pump_amplitude(pulse, ws + wi);
        row[b] = pref * pump * sinc(sarg) * cdouble(std::cos(sarg), std::sin(sarg));
      }
    }
    return out;
  }
  for (std::size_t a = 0; a < n_s; ++a) {
    const double ws = grid.axis_s[a];
    cdouble* row = out.values.row(a);
    for (std::size_t b = 0; b < n_i; ++b) {
      const double wi = grid.axis_i[b];
      const double half_d = phase_mismatch(summary, scenario, ws, wi, MismatchModel::full);
      const cdouble pump = pump_amplitude(pulse, ws + wi);
      row[b] = pref * pump * sinc(half_d) * cdouble(std::cos(half_d), -std::sin(half_d));
    }
  }
  return out;
}

JsaGrid jsa_cw_limit(const PhaseMatchSummary& summary, const PumpPulse& pulse,
                     const FrequencyGrid& grid, LimitForm form, double g) {
  grid.validate();
  JsaGrid out = make_result(grid, pulse, JsaRegime::cw, g);
  const double pref = g / std::sqrt(two_pi);
  for (std::size_t a = 0; a < grid.n_s(); ++a) {
    const double ws = grid.axis_s[a];
    cdouble* row = out.values.row(a);
    for (std::size_t b = 0; b < grid.n_i(); ++b) {
      const double wi = grid.axis_i[b];
      const cdouble pump = pump_amplitude(pulse, ws + wi);
      // The two printed forms are V(-Omega_s/Omega_gvs) and
      // V(+Omega_i/Omega_gvs) with V(s) = sinc(s) e^{is}; they coincide
      // where Omega_i = -Omega_s.
      const double x =
          (form == LimitForm::signal) ? -ws * summary.tau_gvs : wi * summary.tau_gvs;
      row[b] = pref * pump * sinc(x) * cdouble(std::cos(x), std::sin(x));
    }
  }
  return out;
}

JsaGrid jsa_ultrashort_limit(const PhaseMatchSummary& summary, const PumpPulse& pulse,
                             const FrequencyGrid& grid, LimitForm form, double g) {
  grid.validate();
  JsaGrid out = make_result(grid, pulse, JsaRegime::ultrashort, g);
  const double pref = out.g / std::sqrt(two_pi);
  const double eta = summary.eta;
  for (std::size_t a = 0; a < grid.n_s(); ++a) {
    const double ws = grid.axis_s[a];
    cdouble* row = out.values.row(a);
    for (std::size_t b = 0; b < grid.n_i(); ++b) {
      const double wi = grid.axis_i[b];
      const double sarg = ws * summary.tau_gvm + wi * summary.tau_gvs_prime;
      const double pump_arg =
          (form == LimitForm::signal) ? ws * (1.0 - eta) : -wi * (1.0 - eta) / eta;
      const cdouble pump = pump_amplitude(pulse, pump_arg);
      row[b] = pref * pump * sinc(sarg) * cdouble(std::cos(sarg), std::sin(sarg));
    }
  }
  return out;
}

JsaGrid jsa_intermediate_limit(const PhaseMatchSummary& summary, const PumpPulse& pulse,
                               const FrequencyGrid& grid, double g) {
  grid.validate();
  JsaGrid out = make_result(grid, pulse, JsaRegime::intermediate, g);
  const double pref = out.g / std::sqrt(two_pi);
  // Built as an outer product, so separability is exact by construction.
  std::vector<cdouble> fs(grid.n_s()), fi(grid.n_i());
  for (std::size_t a = 0; a < grid.n_s(); ++a) {
    const double ws = grid.axis_s[a];
    const double ph = ws * summary.tau_gvm;
    fs[a] = pump_amplitude(pulse, ws) * cdouble(std::cos(ph), std::sin(ph));
  }
  for (std::size_t b = 0; b < grid.n_i(); ++b) {
    const double x = grid.axis_i[b] * summary.tau_gvs;
    fi[b] = sinc(x) * cdouble(std::cos(x), std::sin(x));
  }
  for (std::size_t a = 0; a < grid.n_s(); ++a) {
    cdouble* row = out.values.row(a);
    for (std::size_t b = 0; b < grid.n_i(); ++b) row[b] = pref * fs[a] * fi[b];
  }
  return out;
}

double relative_l2(const JsaGrid& a, const JsaGrid& b) {
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
