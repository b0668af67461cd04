#include "cpdc/qpm.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "cpdc/dispersion.hpp"
#include "cpdc/numerics.hpp"
#include "cpdc/units.hpp"

namespace cpdc {

using units::c_light;
using units::two_pi;

bool CrystalScenario::gain_warning() const { return g >= units::pi / 2.0; }

void CrystalScenario::validate() const {
  if (!(l_c > 0.0)) throw std::invalid_argument("scenario: l_c must be positive");
  if (!(Lambda > 0.0)) throw std::invalid_argument("scenario: Lambda must be positive");
  if (!(pump_tau > 0.0)) throw std::invalid_argument("scenario: pump_tau must be positive");
  if (!(g > 0.0)) throw std::invalid_argument("scenario: g must be positive");
  if (!(lambda_p > 0.0)) throw std::invalid_argument("scenario: lambda_p must be positive");
  if (grating_order < 1 || grating_order % 2 == 0)
    throw std::invalid_argument("scenario: grating order must be odd and >= 1");
  material_pump.validate();
  material_signal.validate();
  material_idler.validate();
}

double PhaseMatchSummary::lambda_s_m() const { return units::lambda_from_omega(omega_s0); }
double PhaseMatchSummary::lambda_i_m() const { return units::lambda_from_omega(omega_i0); }

namespace {

double grating_k(const CrystalScenario& sc) {
  return two_pi * static_cast<double>(sc.grating_order) / sc.Lambda;
}

// D0(omega_s) = k_s - k_i - k_p + k_G at the central pump frequency.
double d0_of_omega_s(const CrystalScenario& sc, double omega_p, double k_p, double omega_s) {
  const double omega_i = omega_p - omega_s;
  const double k_s = sc.material_signal.index_unchecked_omega(omega_s) * omega_s / c_light;
  const double k_i = sc.material_idler.index_unchecked_omega(omega_i) * omega_i / c_light;
  return k_s - k_i - k_p + grating_k(sc);
}

}  // namespace

PhaseMatchSummary solve_central_frequencies(const CrystalScenario& sc) {
  sc.validate();
  const double omega_p = units::omega_from_lambda(sc.lambda_p);
  if (!sc.material_pump.in_range_omega(omega_p))
    throw std::domain_error("pump wavelength outside material range for '" +
                            sc.material_pump.name + "'");
  const double k_p = sc.material_pump.index_unchecked_omega(omega_p) * omega_p / c_light;

  // Feasible signal window: both photons must stay inside their material
  // ranges. The backward idler may be the red or the blue member of the pair,
  // so the scan covers the whole window below the pump frequency.
  const double om_s_max_mat = units::omega_from_lambda(sc.material_signal.lambda_min_nm * units::nm);
  const double om_s_min_mat = units::omega_from_lambda(sc.material_signal.lambda_max_nm * units::nm);
  const double om_i_max_mat = units::omega_from_lambda(sc.material_idler.lambda_min_nm * units::nm);
  const double om_i_min_mat = units::omega_from_lambda(sc.material_idler.lambda_max_nm * units::nm);

  double lo = std::max(om_s_min_mat, omega_p - om_i_max_mat);
  double hi = std::min({om_s_max_mat, omega_p - om_i_min_mat, omega_p * (1.0 - 1e-6)});
  if (sc.lambda_s_window_lo > 0.0 && sc.lambda_s_window_hi > sc.lambda_s_window_lo) {
    lo = std::max(lo, units::omega_from_lambda(sc.lambda_s_window_hi));
    hi = std::min(hi, units::omega_from_lambda(sc.lambda_s_window_lo));
  }
  if (!(hi > lo))
    throw std::runtime_error("solve_central_frequencies: empty signal search window");

  auto d0 = [&](double om_s) { return d0_of_omega_s(sc, omega_p, k_p, om_s); };
  const auto brackets = find_brackets(d0, lo, hi, 2000);
  if (brackets.empty()) {
    std::ostringstream os;
    os << "no phase-matched point: D0 has no sign change for lambda_s in ["
       << units::lambda_from_omega(hi) / units::nm << ", "
       << units::lambda_from_omega(lo) / units::nm << "] nm";
    throw std::runtime_error(os.str());
  }
  std::vector<double> roots;
  const double ftol = 1e-10 / sc.l_c;  // |D0| * l_c < 1e-10
  for (const auto& b : brackets) roots.push_back(bisect(d0, b, ftol));
  if (roots.size() > 1) {
    std::ostringstream os;
    os << "multiple phase-matched points; restrict the search window. roots at lambda_s =";
    for (double r : roots) os << " " << units::lambda_from_omega(r) / units::nm << " nm";
    throw std::runtime_error(os.str());
  }

  PhaseMatchSummary s;
  s.omega_p0 = omega_p;
  s.omega_s0 = roots.front();
  s.omega_i0 = omega_p - s.omega_s0;
  s.kprime_p = wavenumber(sc.material_pump, s.omega_p0).k_prime;
  s.kprime_s = wavenumber(sc.material_signal, s.omega_s0).k_prime;
  s.kprime_i = wavenumber(sc.material_idler, s.omega_i0).k_prime;
  const double half_lc = 0.5 * sc.l_c;
  s.tau_gvm = half_lc * (s.kprime_p - s.kprime_s);
  s.tau_gvs_prime = half_lc * (s.kprime_p + s.kprime_i);
  s.tau_gvs = half_lc * (s.kprime_s + s.kprime_i);
  s.eta = s.tau_gvm / s.tau_gvs_prime;
  s.Omega_gvm = 1.0 / s.tau_gvm;
  s.Omega_gvs_prime = 1.0 / s.tau_gvs_prime;
  s.Omega_gvs = 1.0 / s.tau_gvs;
  s.t_As = half_lc * (s.kprime_s + s.kprime_p);
  s.t_Ai = half_lc * (s.kprime_i + s.kprime_p);
  s.t_Ap = sc.l_c * s.kprime_p;
  s.gain_warning = sc.gain_warning();
  return s;
}

double phase_mismatch(const PhaseMatchSummary& summary, const CrystalScenario& sc,
                      double Omega_s, double Omega_i, MismatchModel model) {
  if (model == MismatchModel::linear)
    return -(Omega_s * summary.tau_gvm + Omega_i * summary.tau_gvs_prime);

  const double om_s = summary.omega_s0 + Omega_s;
  const double om_i = summary.omega_i0 + Omega_i;
  const double om_p = summary.omega_p0 + Omega_s + Omega_i;
  if (!sc.material_signal.in_range_omega(om_s) || !sc.material_idler.in_range_omega(om_i) ||
      !sc.material_pump.in_range_omega(om_p)) {
    std::ostringstream os;
    os << "phase_mismatch(full): shifted frequency outside material range at Omega_s="
       << Omega_s << ", Omega_i=" << Omega_i;
    throw std::domain_error(os.str());
  }
  const double k_s = sc.material_signal.index_unchecked_omega(om_s) * om_s / c_light;
  const double k_i = sc.material_idler.index_unchecked_omega(om_i) * om_i / c_light;
  const double k_p = sc.material_pump.index_unchecked_omega(om_p) * om_p / c_light;
  const double d = k_s - k_i - k_p + grating_k(sc);
  return 0.5 * d * sc.l_c;
}

}  // namespace cpdc
