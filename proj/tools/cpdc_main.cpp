// Command-line front end: scenario loading, regime-tagged pipelines,
// figure-data regeneration and machine-readable reports.
//
// Exit codes: 0 success, 1 numeric failure, 2 input error.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "cpdc/coherence.hpp"
#include "cpdc/io.hpp"
#include "cpdc/schmidt.hpp"
#include "cpdc/temporal.hpp"
#include "cpdc/units.hpp"

namespace fs = std::filesystem;
using namespace cpdc;

namespace {

constexpr const char* kVersion = "cpdc 0.1.0";

struct CommonOpts {
  std::string scenario_file;
  double tau_p_ps = 0.0;  // 0 = use the scenario value
  std::string regime = "exact";
  std::size_t grid_n = 0;  // 0 = heuristic
  std::string out_dir = ".";
};

void add_common(CLI::App* cmd, CommonOpts& o, bool needs_out) {
  cmd->add_option("--scenario", o.scenario_file, "scenario JSON file")->required();
  cmd->add_option("--tau-p-ps", o.tau_p_ps, "override the pump duration, ps");
  cmd->add_option("--regime", o.regime, "exact|cw|ultrashort|intermediate")
      ->check(CLI::IsMember({"exact", "cw", "ultrashort", "intermediate"}));
  cmd->add_option("--grid-n", o.grid_n, "force per-axis grid count (power of two)");
  if (needs_out) cmd->add_option("--out", o.out_dir, "output directory");
}

struct Loaded {
  CrystalScenario scenario;
  PhaseMatchSummary summary;
  PumpPulse pump;
};

Loaded load_and_solve(const CommonOpts& o) {
  Loaded l;
  l.scenario = load_scenario(o.scenario_file);
  if (o.tau_p_ps > 0.0) l.scenario.pump_tau = o.tau_p_ps * units::ps;
  l.summary = solve_central_frequencies(l.scenario);
  l.pump = PumpPulse::gaussian(l.scenario.pump_tau);
  return l;
}

JsaGrid build_jsa(const Loaded& l, const std::string& regime, std::size_t grid_n) {
  GridPolicy policy;
  policy.force_n_s = grid_n;
  policy.force_n_i = grid_n;
  const FrequencyGrid grid = default_grid(l.summary, l.pump, policy);
  if (regime == "cw") return jsa_cw_limit(l.summary, l.pump, grid, LimitForm::signal, l.scenario.g);
  if (regime == "ultrashort")
    return jsa_ultrashort_limit(l.summary, l.pump, grid, LimitForm::signal, l.scenario.g);
  if (regime == "intermediate")
    return jsa_intermediate_limit(l.summary, l.pump, grid, l.scenario.g);
  return jsa_exact(l.scenario, l.summary, l.pump, grid, MismatchModel::full);
}

void print_summary(const Loaded& l) {
  const auto& s = l.summary;
  std::printf("scenario           %s\n", l.scenario.name.c_str());
  std::printf("lambda_s_nm        %.6g\n", s.lambda_s_m() / units::nm);
  std::printf("lambda_i_nm        %.6g\n", s.lambda_i_m() / units::nm);
  std::printf("kprime_p_s_per_m   %.9g\n", s.kprime_p);
  std::printf("kprime_s_s_per_m   %.9g\n", s.kprime_s);
  std::printf("kprime_i_s_per_m   %.9g\n", s.kprime_i);
  std::printf("tau_gvm_ps         %.6g\n", s.tau_gvm / units::ps);
  std::printf("tau_gvs_prime_ps   %.6g\n", s.tau_gvs_prime / units::ps);
  std::printf("tau_gvs_ps         %.6g\n", s.tau_gvs / units::ps);
  std::printf("eta                %.6g\n", s.eta);
  std::printf("Omega_gvm_THz      %.6g\n", s.Omega_gvm / units::THz);
  std::printf("Omega_gvs_prime_THz %.6g\n", s.Omega_gvs_prime / units::THz);
  std::printf("Omega_gvs_THz      %.6g\n", s.Omega_gvs / units::THz);
  std::printf("t_As_ps            %.6g\n", s.t_As / units::ps);
  std::printf("t_Ai_ps            %.6g\n", s.t_Ai / units::ps);
  std::printf("t_Ap_ps            %.6g\n", s.t_Ap / units::ps);
  std::printf("tau_p_ps           %.6g\n", l.scenario.pump_tau / units::ps);
  const auto regime = regime_report(s, l.pump);
  std::printf("regime             %s\n", regime.label.c_str());
  if (s.gain_warning)
    std::printf("warning            g >= pi/2: low-gain model invalid (MOPO threshold)\n");
}

int cmd_phasematch(const CommonOpts& o, const std::vector<double>& sweep_lp,
                   const std::vector<double>& sweep_pp, const std::string& sweep_out) {
  if (sweep_lp.size() == 3 && sweep_pp.size() == 3) {
    // eta map over (lambda_p, Lambda) for the poling-design figure.
    CrystalScenario base = load_scenario(o.scenario_file);
    auto axis = [](const std::vector<double>& a) {
      std::vector<double> v;
      const auto n = static_cast<std::size_t>(a[2]);
      for (std::size_t i = 0; i < n; ++i)
        v.push_back(a[0] + (n > 1 ? (a[1] - a[0]) * double(i) / double(n - 1) : 0.0));
      return v;
    };
    const auto lps = axis(sweep_lp);
    const auto pps = axis(sweep_pp);
    fs::create_directories(sweep_out.empty() ? "." : sweep_out);
    const fs::path file = fs::path(sweep_out.empty() ? "." : sweep_out) / "eta_map.csv";
    std::ofstream out(file, std::ios::binary);
    out << "lambda_p_nm,Lambda_nm,lambda_s_nm,lambda_i_nm,tau_gvm_ps,tau_gvs_prime_ps,eta\n";
    for (double lp : lps)
      for (double pp : pps) {
        CrystalScenario sc = base;
        sc.lambda_p = lp * units::nm;
        sc.Lambda = pp * units::nm;
        out << lp << ',' << pp << ',';
        try {
          const auto s = solve_central_frequencies(sc);
          char buf[160];
          std::snprintf(buf, sizeof buf, "%.10g,%.10g,%.10g,%.10g,%.10g",
                        s.lambda_s_m() / units::nm, s.lambda_i_m() / units::nm,
                        s.tau_gvm / units::ps, s.tau_gvs_prime / units::ps, s.eta);
          out << buf << '\n';
        } catch (const std::exception&) {
          out << "nan,nan,nan,nan,nan\n";
        }
      }
    std::printf("wrote %s\n", file.string().c_str());
    return 0;
  }
  const Loaded l = load_and_solve(o);
  print_summary(l);
  return 0;
}

int cmd_jsa(const CommonOpts& o) {
  const auto t0 = std::chrono::steady_clock::now();
  const Loaded l = load_and_solve(o);
  const JsaGrid jsa = build_jsa(l, o.regime, o.grid_n);
  fs::create_directories(o.out_dir);
  write_jsa_matrix(fs::path(o.out_dir) / "jsa.txt", jsa);
  write_jsa_magnitude_csv(fs::path(o.out_dir) / "jsa_abs.csv", jsa);
  RunManifest m;
  m.command = "jsa";
  m.scenario_file = o.scenario_file;
  m.out_dir = o.out_dir;
  m.tool_version = kVersion;
  m.grid_n_s = jsa.grid.n_s();
  m.grid_n_i = jsa.grid.n_i();
  m.outputs = {"jsa.txt", "jsa_abs.csv"};
  m.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  m.write(o.out_dir);
  std::printf("wrote %s/jsa.txt (%zux%zu), jsa_abs.csv, manifest.json\n", o.out_dir.c_str(),
              jsa.grid.n_s(), jsa.grid.n_i());
  return 0;
}

int cmd_coherence(const CommonOpts& o) {
  const auto t0 = std::chrono::steady_clock::now();
  const Loaded l = load_and_solve(o);
  const JsaGrid jsa = build_jsa(l, o.regime, o.grid_n);
  const CoherenceGrid gs = g1(jsa, Beam::signal);
  const CoherenceGrid gi = g1(jsa, Beam::idler);
  fs::create_directories(o.out_dir);
  write_coherence_magnitude_csv(fs::path(o.out_dir) / "g1_signal_abs.csv", gs);
  write_coherence_magnitude_csv(fs::path(o.out_dir) / "g1_idler_abs.csv", gi);
  write_spectrum_csv(fs::path(o.out_dir) / "spectrum_signal.csv", gs.axis, gs.spectrum);
  write_spectrum_csv(fs::path(o.out_dir) / "spectrum_idler.csv", gi.axis, gi.spectrum);
  RunManifest m;
  m.command = "coherence";
  m.scenario_file = o.scenario_file;
  m.out_dir = o.out_dir;
  m.tool_version = kVersion;
  m.grid_n_s = jsa.grid.n_s();
  m.grid_n_i = jsa.grid.n_i();
  m.outputs = {"g1_signal_abs.csv", "g1_idler_abs.csv", "spectrum_signal.csv",
               "spectrum_idler.csv"};
  m.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  m.write(o.out_dir);
  std::printf("fwhm_spectrum_signal_THz %.6g\n", gs.fwhm_spectrum / units::THz);
  std::printf("fwhm_spectrum_idler_THz  %.6g\n", gi.fwhm_spectrum / units::THz);
  std::printf("fwhm_coherence_signal_THz %.6g\n", gs.fwhm_coherence / units::THz);
  std::printf("fwhm_coherence_idler_THz  %.6g\n", gi.fwhm_coherence / units::THz);
  return 0;
}

int cmd_temporal(const CommonOpts& o) {
  const auto t0 = std::chrono::steady_clock::now();
  const Loaded l = load_and_solve(o);
  // Analytic phi on the default window plus the FFT route from the jsa.
  const std::size_t n = o.grid_n ? o.grid_n : 512;
  const auto axis = default_time_axis(l.summary, l.pump, n);
  const TemporalGrid an = phi_analytic(l.summary, l.pump, l.scenario, axis, axis);
  GridPolicy policy;
  policy.force_n_s = o.grid_n;
  policy.force_n_i = o.grid_n;
  const JsaGrid jsa = jsa_exact(l.scenario, l.summary, l.pump,
                                default_grid(l.summary, l.pump, policy), MismatchModel::linear);
  const TemporalGrid ft = phi_fft(jsa, l.summary);
  fs::create_directories(o.out_dir);
  write_temporal_magnitude_csv(fs::path(o.out_dir) / "phi_analytic_abs.csv", an);
  write_temporal_magnitude_csv(fs::path(o.out_dir) / "phi_fft_abs.csv", ft);
  RunManifest m;
  m.command = "temporal";
  m.scenario_file = o.scenario_file;
  m.out_dir = o.out_dir;
  m.tool_version = kVersion;
  m.grid_n_s = jsa.grid.n_s();
  m.grid_n_i = jsa.grid.n_i();
  m.outputs = {"phi_analytic_abs.csv", "phi_fft_abs.csv"};
  m.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  m.write(o.out_dir);
  const auto regime = regime_report(l.summary, l.pump);
  std::printf("regime %s (tau_p/tau_gvs' = %.4g, tau_p/tau_gvm = %.4g)\n",
              regime.label.c_str(), regime.ratio_cw, regime.ratio_ultra);
  return 0;
}

int cmd_schmidt_sweep(const CommonOpts& o, double tau_min_ps, double tau_max_ps,
                      std::size_t points) {
  const auto t0 = std::chrono::steady_clock::now();
  const Loaded l = load_and_solve(o);
  double lo = tau_min_ps, hi = tau_max_ps;
  if (!(lo > 0.0)) lo = 0.01 * std::abs(l.summary.tau_gvm) / units::ps;
  if (!(hi > lo)) hi = 30.0 * std::abs(l.summary.tau_gvs_prime) / units::ps;
  const auto taus = log_spaced(lo * units::ps, hi * units::ps, points);
  SweepPolicy policy;
  if (o.grid_n) {
    policy.grid.force_n_s = o.grid_n;
    policy.grid.force_n_i = o.grid_n;
  }
  const auto rows = kappa_sweep(l.scenario, l.summary, taus, policy);
  fs::create_directories(o.out_dir);
  write_sweep_csv(fs::path(o.out_dir) / "kappa_sweep.csv", rows);

  std::size_t ok = 0, min_idx = rows.size();
  double kmin = 0.0;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (!rows[i].ok) continue;
    ++ok;
    if (min_idx == rows.size() || rows[i].kappa_integral < kmin) {
      kmin = rows[i].kappa_integral;
      min_idx = i;
    }
  }
  const auto asym = kappa_asymptotes(l.summary, PumpPulse::gaussian(taus.back()));
  RunManifest m;
  m.command = "schmidt-sweep";
  m.scenario_file = o.scenario_file;
  m.out_dir = o.out_dir;
  m.tool_version = kVersion;
  m.outputs = {"kappa_sweep.csv"};
  m.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  m.write(o.out_dir);

  std::printf("rows_ok %zu of %zu\n", ok, rows.size());
  if (min_idx < rows.size()) {
    std::printf("kappa_min %.6g at tau_p_ps %.6g (dOmega_p_THz %.6g)\n", kmin,
                rows[min_idx].tau_p / units::ps, rows[min_idx].delta_omega_p / units::THz);
    std::printf("dOmega_p_at_min_pred_THz %.6g (Gaussian-approximation)\n",
                asym.delta_omega_p_at_min / units::THz);
  }
  // asymptote agreement at the sweep tails
  for (auto it = rows.rbegin(); it != rows.rend(); ++it)
    if (it->ok) {
      std::printf("cw_tail_agreement_pct %.2f (tau_p_ps %.6g)\n",
                  100.0 * std::abs(it->kappa_integral / it->asym_cw - 1.0),
                  it->tau_p / units::ps);
      break;
    }
  for (const auto& r : rows)
    if (r.ok) {
      std::printf("ultrashort_tail_agreement_pct %.2f (tau_p_ps %.6g)\n",
                  100.0 * std::abs(r.kappa_integral / r.asym_ultrashort - 1.0),
                  r.tau_p / units::ps);
      break;
    }
  if (ok * 5 < rows.size() * 4) {
    std::fprintf(stderr, "more than 20%% of sweep rows failed\n");
    return 1;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"counterpropagating-SPDC toolkit"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);

  CommonOpts o_pm, o_jsa, o_coh, o_tmp, o_sw;
  std::vector<double> sweep_lp, sweep_pp;
  std::string pm_sweep_out;
  double tau_min_ps = 0.0, tau_max_ps = 0.0;
  std::size_t sweep_points = 25;

  auto* pm = app.add_subcommand("phasematch", "solve the QPM point and derived scales");
  add_common(pm, o_pm, false);
  pm->add_option("--sweep-lambda-p-nm", sweep_lp, "lo hi count: pump-wavelength sweep")
      ->expected(3);
  pm->add_option("--sweep-Lambda-nm", sweep_pp, "lo hi count: poling-period sweep")
      ->expected(3);
  pm->add_option("--out", pm_sweep_out, "output directory for the eta map");

  auto* jsa = app.add_subcommand("jsa", "export the joint spectral amplitude");
  add_common(jsa, o_jsa, true);
  auto* coh = app.add_subcommand("coherence", "export marginal coherence functions");
  add_common(coh, o_coh, true);
  auto* tmp = app.add_subcommand("temporal", "export the temporal correlation");
  add_common(tmp, o_tmp, true);
  auto* sw = app.add_subcommand("schmidt-sweep", "kappa versus pump duration");
  add_common(sw, o_sw, true);
  sw->add_option("--tau-min-ps", tau_min_ps, "sweep start (default 0.01 tau_gvm)");
  sw->add_option("--tau-max-ps", tau_max_ps, "sweep end (default 30 tau_gvs')");
  sw->add_option("--points", sweep_points, "number of sweep rows");

  CLI11_PARSE(app, argc, argv);

  try {
    if (pm->parsed()) return cmd_phasematch(o_pm, sweep_lp, sweep_pp, pm_sweep_out);
    if (jsa->parsed()) return cmd_jsa(o_jsa);
    if (coh->parsed()) return cmd_coherence(o_coh);
    if (tmp->parsed()) return cmd_temporal(o_tmp);
    if (sw->parsed()) return cmd_schmidt_sweep(o_sw, tau_min_ps, tau_max_ps, sweep_points);
  } catch (const input_error& e) {
    std::fprintf(stderr, "input error: %s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 0;
}
