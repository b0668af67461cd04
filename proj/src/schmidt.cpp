#include "cpdc/schmidt.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "cpdc/numerics.hpp"
#include "cpdc/units.hpp"

namespace cpdc {

SchmidtIntegralResult schmidt_integral(const JsaGrid& jsa) {
  const std::size_t n_s = jsa.grid.n_s(), n_i = jsa.grid.n_i();
  const auto ws = trapezoid_weights(n_s, jsa.grid.step_s);
  const auto wi = trapezoid_weights(n_i, jsa.grid.step_i);

  double N = 0.0;
  for (std::size_t a = 0; a < n_s; ++a) {
    const cdouble* row = jsa.values.row(a);
    double acc = 0.0;
    for (std::size_t b = 0; b < n_i; ++b) acc += wi[b] * std::norm(row[b]);
    N += ws[a] * acc;
  }
  if (!std::isfinite(N)) throw std::runtime_error("schmidt_integral: non-finite N");

  // B = sum_jl w_j w_l |G_s(j,l)|^2 with G_s the signal trace of psi.
  const CMat g = gram_conj_weighted(jsa.values, wi);
  double B = 0.0;
  for (std::size_t j = 0; j < n_s; ++j) {
    const cdouble* row = g.row(j);
    double acc = 0.0;
    for (std::size_t l = 0; l < n_s; ++l) acc += ws[l] * std::norm(row[l]);
    B += ws[j] * acc;
  }
  if (!std::isfinite(B) || !(B > 0.0)) throw std::runtime_error("schmidt_integral: bad B");

  return {N, B, N * N / B};
}

SchmidtSvdResult schmidt_svd(const JsaGrid& jsa) {
  const std::size_t n_s = jsa.grid.n_s(), n_i = jsa.grid.n_i();
  const auto ws = trapezoid_weights(n_s, jsa.grid.step_s);
  const auto wi = trapezoid_weights(n_i, jsa.grid.step_i);

  // Eigenvalues of the quadrature-scaled Gram matrix on the smaller side are
  // the squared singular values of sqrt(w_s) psi sqrt(w_i).
  CMat gram = (n_s <= n_i) ? gram_conj_weighted(jsa.values, wi)
                           : gram_conj_weighted_rows(jsa.values, ws);
  const auto& wside = (n_s <= n_i) ? ws : wi;
  const std::size_t n = gram.rows;
  for (std::size_t j = 0; j < n; ++j) {
    const double sj = std::sqrt(wside[j]);
    for (std::size_t l = 0; l < n; ++l) gram(j, l) *= sj * std::sqrt(wside[l]);
  }
  auto ev = hermitian_eigenvalues(std::move(gram));

  double total = 0.0;
  for (double v : ev) total += std::max(v, 0.0);
  if (!(total > 0.0)) throw std::runtime_error("schmidt_svd: zero spectrum");
  std::sort(ev.begin(), ev.end(), std::greater<double>());
  SchmidtSvdResult out;
  out.spectrum.reserve(ev.size());
  double sum2 = 0.0;
  for (double v : ev) {
    const double lam = std::max(v, 0.0) / total;
    out.spectrum.push_back(lam);
    sum2 += lam * lam;
  }
  out.kappa = 1.0 / sum2;
  return out;
}

KappaAsymptotes kappa_asymptotes(const PhaseMatchSummary& s, const PumpPulse& pulse) {
  const double dop = pulse.delta_omega_p();
  const double eta = s.eta;
  KappaAsymptotes a;
  a.cw = 1.5 * std::sqrt(units::pi / 2.0) * std::abs(s.Omega_gvs_prime) / dop;
  a.ultrashort = std::sqrt(2.0 / units::pi) * dop * std::abs(s.tau_gvm) / (1.0 - eta);
  a.kappa_min = (1.0 + std::abs(eta)) / (1.0 - std::abs(eta));
  a.delta_omega_p_at_min =
      std::sqrt(3.0 * std::abs(s.Omega_gvs_prime) * std::abs(s.Omega_gvm));
  return a;
}

SchmidtReport schmidt_report(const JsaGrid& jsa, const PhaseMatchSummary& summary) {
  SchmidtReport r;
  const auto integral = schmidt_integral(jsa);
  const auto svd = schmidt_svd(jsa);
  PumpPulse pump = PumpPulse::gaussian(jsa.tau_p);
  const auto asym = kappa_asymptotes(summary, pump);
  r.kappa_integral = integral.kappa;
  r.kappa_svd = svd.kappa;
  r.N = integral.N;
  r.B = integral.B;
  r.g2 = 1.0 + 1.0 / integral.kappa;
  r.asymptote_cw = asym.cw;
  r.asymptote_ultrashort = asym.ultrashort;
  r.kappa_min_gaussian = asym.kappa_min;
  r.delta_omega_p_at_min = asym.delta_omega_p_at_min;
  r.schmidt_spectrum = svd.spectrum;
  r.n_s = jsa.grid.n_s();
  r.n_i = jsa.grid.n_i();
  r.scenario_name = jsa.scenario_name;
  r.tau_p = jsa.tau_p;
  return r;
}

std::vector<double> log_spaced(double lo, double hi, std::size_t count) {
  if (!(lo > 0.0) || !(hi > lo) || count < 2)
    throw std::runtime_error("log_spaced: bad range");
  std::vector<double> out(count);
  const double llo = std::log(lo), lhi = std::log(hi);
  for (std::size_t i = 0; i < count; ++i)
    out[i] = std::exp(llo + (lhi - llo) * static_cast<double>(i) /
                                static_cast<double>(count - 1));
  return out;
}

std::vector<SweepRow> kappa_sweep(const CrystalScenario& scenario,
                                  const PhaseMatchSummary& summary,
                                  const std::vector<double>& tau_p_list,
                                  const SweepPolicy& policy) {
  std::vector<SweepRow> rows;
  rows.reserve(tau_p_list.size());
  for (double tp : tau_p_list) {
    SweepRow row;
    row.tau_p = tp;
    row.delta_omega_p = 1.0 / tp;
    try {
      PumpPulse pump = PumpPulse::gaussian(tp);
      const auto grid = default_grid(summary, pump, policy.grid);
      CrystalScenario sc = scenario;
      sc.pump_tau = tp;
      const auto jsa = jsa_exact(sc, summary, pump, grid, policy.model);
      row.kappa_integral = schmidt_integral(jsa).kappa;
      row.kappa_svd = schmidt_svd(jsa).kappa;
      const auto asym = kappa_asymptotes(summary, pump);
      row.asym_cw = asym.cw;
      row.asym_ultrashort = asym.ultrashort;
      row.ok = true;
    } catch (const std::exception& e) {
      row.ok = false;
      row.error = e.what();
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

ConvergenceResult convergence_check(
    const std::function<JsaGrid(const FrequencyGrid&)>& producer,
    const FrequencyGrid& base, double rel_tol, std::size_t max_refinements) {
  ConvergenceResult res;
  FrequencyGrid grid = base;
  res.jsa = producer(grid);
  res.kappa_levels.push_back(schmidt_integral(res.jsa).kappa);

  for (std::size_t level = 1; level <= max_refinements; ++level) {
    const bool refine_step = (level % 2 == 1);  // odd levels halve the step
    std::size_t n_s = grid.n_s() * 2, n_i = grid.n_i() * 2;
    double step_s = refine_step ? grid.step_s * 0.5 : grid.step_s;
    double step_i = refine_step ? grid.step_i * 0.5 : grid.step_i;
    if (n_s > 4096 || n_i > 4096)
      throw std::runtime_error("convergence_check: refinement exceeded the 4096 cap");
    grid = FrequencyGrid::centered(step_s, n_s, step_i, n_i);
    JsaGrid jsa = producer(grid);
    const double kappa = schmidt_integral(jsa).kappa;
    const double prev = res.kappa_levels.back();
    res.kappa_levels.push_back(kappa);
    res.jsa = std::move(jsa);
    // level L converged means level L already agreed with its refinement
    res.level = level - 1;
    if (std::abs(kappa - prev) <= rel_tol * std::abs(prev)) return res;
  }
  std::ostringstream os;
  os << "convergence_check: kappa did not settle; sequence =";
  for (double k : res.kappa_levels) os << " " << k;
  throw std::runtime_error(os.str());
}

}  // namespace cpdc
