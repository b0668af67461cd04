#include <cmath>
#include <complex>

#include "cpdc/io.hpp"
#include "cpdc/schmidt.hpp"
#include "cpdc/temporal.hpp"
#include "cpdc/units.hpp"
#include "doctest.h"

using namespace cpdc;
using units::ps;

namespace {

struct Ctx {
  CrystalScenario sc;
  PhaseMatchSummary s;
  explicit Ctx(const char* name)
      : sc(load_scenario(std::string(CPDC_DATA_DIR "/scenarios/") + name + ".json")),
        s(solve_central_frequencies(sc)) {}
};

const Ctx& ctx_a() {
  static Ctx c("point_a");
  return c;
}

std::vector<double> centered_axis(double span, std::size_t n) {
  std::vector<double> axis(n);
  const double step = 2.0 * span / double(n);
  for (std::size_t j = 0; j < n; ++j)
    axis[j] = (double(j) - double(n / 2)) * step;
  return axis;
}

}  // namespace

TEST_SUITE_BEGIN("temporal");

TEST_CASE("phi_analytic center value and Rect support semantics") {
  const auto& c = ctx_a();
  const auto pump = PumpPulse::gaussian(1.1 * ps);
  const auto axis = centered_axis(2.0 * c.s.tau_gvs, 256);
  const auto phi = phi_analytic(c.s, pump, c.sc, axis, axis);
  CHECK(std::abs(phi.values(128, 128)) ==
        doctest::Approx(c.sc.g / (2.0 * c.s.tau_gvs)).epsilon(1e-12));

  // half-open edge: ts - ti = -tau_gvs inside, +tau_gvs outside
  const std::vector<double> ts{-c.s.tau_gvs, c.s.tau_gvs};
  const std::vector<double> ti{0.0, 1.0 * ps};
  const auto edge = phi_analytic(c.s, pump, c.sc, ts, ti);
  CHECK(std::abs(edge.values(0, 0)) > 0.0);   // x = -1/2 belongs to the box
  CHECK(std::abs(edge.values(1, 0)) == 0.0);  // x = +1/2 does not

  // strictly zero outside the band
  for (std::size_t a = 0; a < axis.size(); ++a)
    for (std::size_t b = 0; b < axis.size(); ++b)
      if (std::abs(axis[a] - axis[b]) > c.s.tau_gvs)
        CHECK(std::abs(phi.values(a, b)) == 0.0);
}

TEST_CASE("uniform conditional distribution of arrival-time differences") {
  const auto& c = ctx_a();
  // quasi-cw and intermediate pumps: the difference-marginal is flat
  for (double tau_mult : {14.0 * c.s.tau_gvs_prime / ps, 1.1}) {
    const auto pump = PumpPulse::gaussian(tau_mult * ps);
    const std::size_t n = 512;
    const auto axis = centered_axis(1.5 * std::max(c.s.tau_gvs, 4.0 * pump.tau_p), n);
    const auto phi = phi_analytic(c.s, pump, c.sc, axis, axis);
    // p(d) = sum_t |phi(t, t - d)|^2 along diagonals
    const double step = axis[1] - axis[0];
    const int dmax = static_cast<int>(0.9 * c.s.tau_gvs / step);
    double lo = 1e300, hi = 0.0;
    for (int d = -dmax; d <= dmax; d += std::max(1, dmax / 8)) {
      double p = 0.0;
      for (std::size_t a = 0; a < n; ++a) {
        const long bb = static_cast<long>(a) - d;
        if (bb < 0 || bb >= static_cast<long>(n)) continue;
        p += std::norm(phi.values(a, static_cast<std::size_t>(bb)));
      }
      lo = std::min(lo, p);
      hi = std::max(hi, p);
    }
    CHECK((hi - lo) / hi < 0.03);
  }
}

TEST_CASE("ultrashort ridge sits on tbar_s = eta tbar_i") {
  const auto& c = ctx_a();
  const auto pump = PumpPulse::gaussian(0.22 * c.s.tau_gvm);
  const std::size_t n = 1024;
  const auto axis_i = centered_axis(1.2 * c.s.tau_gvs, n);
  const auto axis_s = centered_axis(3.0 * c.s.tau_gvm, n);
  const auto phi = phi_analytic(c.s, pump, c.sc, axis_s, axis_i);
  const double step_s = axis_s[1] - axis_s[0];
  for (std::size_t b = n / 8; b < n; b += n / 6) {
    std::size_t best = 0;
    double best_v = -1.0;
    for (std::size_t a = 0; a < n; ++a) {
      const double v = std::abs(phi.values(a, b));
      if (v > best_v) {
        best_v = v;
        best = a;
      }
    }
    if (best_v <= 0.0) continue;
    CHECK(std::abs(axis_s[best] - c.s.eta * axis_i[b]) <= step_s);
  }
}

TEST_CASE("phi_fft of a separable jsa stays separable") {
  const auto& c = ctx_a();
  const auto pump = PumpPulse::gaussian(1.1 * ps);
  GridPolicy pol;
  pol.force_n_s = 128;
  pol.force_n_i = 256;
  const auto grid = default_grid(c.s, pump, pol);
  const auto im = jsa_intermediate_limit(c.s, pump, grid, c.sc.g);
  const auto phi = phi_fft(im, c.s);
  // rank-1 in time as well: lambda_1 of the temporal matrix is 1
  JsaGrid as_grid;
  as_grid.grid = FrequencyGrid::centered(phi.step_s, phi.n_s(), phi.step_i, phi.n_i());
  as_grid.values = phi.values;
  as_grid.g = c.sc.g;
  as_grid.tau_p = pump.tau_p;
  const auto svd = schmidt_svd(as_grid);
  CHECK(svd.spectrum[0] == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("fft and analytic phi agree in the intermediate regime") {
  const auto& c = ctx_a();
  const auto pump = PumpPulse::gaussian(0.04 * c.s.tau_gvs_prime);
  const auto grid = fft_grid(c.s, pump, {});
  const auto jsa = jsa_exact(c.sc, c.s, pump, grid, MismatchModel::linear);
  const auto ft = phi_fft(jsa, c.s);
  const auto an = phi_analytic(c.s, pump, c.sc, ft.axis_s, ft.axis_i);
  CHECK(relative_l2(ft, an) < 0.05);

  // Parseval within 1% (Riemann sums on both sides)
  double e_psi = 0.0, e_phi = 0.0;
  for (const auto& v : jsa.values.a) e_psi += std::norm(v);
  e_psi *= jsa.grid.step_s * jsa.grid.step_i;
  for (const auto& v : ft.values.a) e_phi += std::norm(v);
  e_phi *= ft.step_s * ft.step_i;
  CHECK(e_phi == doctest::Approx(e_psi).epsilon(0.01));
}

TEST_CASE("temporal and spectral Schmidt numbers coincide in all regimes") {
  // The transform is a local unitary, so the Schmidt spectrum is invariant;
  // checked across the quasi-CW, intermediate and ultrashort operating points.
  const auto& c = ctx_a();
  for (double tau_p : {14.0 * c.s.tau_gvs_prime, 0.04 * c.s.tau_gvs_prime,
                       0.22 * c.s.tau_gvm}) {
    const auto pump = PumpPulse::gaussian(tau_p);
    GridPolicy pol;
    pol.sinc_lobes = 6.0;
    pol.force_n_s = 512;
    pol.force_n_i = 512;
    const auto grid = default_grid(c.s, pump, pol);
    const auto jsa = jsa_exact(c.sc, c.s, pump, grid, MismatchModel::linear);
    const double kappa_spectral = schmidt_svd(jsa).kappa;
    const auto phi = phi_fft(jsa, c.s);
    JsaGrid as_grid;
    as_grid.grid = FrequencyGrid::centered(phi.step_s, phi.n_s(), phi.step_i, phi.n_i());
    as_grid.values = phi.values;
    as_grid.g = c.sc.g;
    as_grid.tau_p = pump.tau_p;
    const double kappa_temporal = schmidt_svd(as_grid).kappa;
    CHECK(std::abs(kappa_temporal - kappa_spectral) / kappa_spectral < 0.05);
  }
}

TEST_CASE("regime classification at the published pump durations") {
  const auto& c = ctx_a();
  CHECK(regime_report(c.s, PumpPulse::gaussian(353.0 * ps)).label == "cw");
  CHECK(regime_report(c.s, PumpPulse::gaussian(1.1 * ps)).label == "intermediate");
  CHECK(regime_report(c.s, PumpPulse::gaussian(0.03 * ps)).label == "ultrashort");
  CHECK(regime_report(c.s, PumpPulse::gaussian(0.5 * c.s.tau_gvm)).label == "crossover");
  const auto r = regime_report(c.s, PumpPulse::gaussian(353.0 * ps));
  CHECK(r.ratio_cw == doctest::Approx(353.0 * ps / c.s.tau_gvs_prime).epsilon(1e-12));
}

TEST_CASE("analytic support bound carries over to the fft within leakage") {
  const auto& c = ctx_a();
  const auto pump = PumpPulse::gaussian(0.04 * c.s.tau_gvs_prime);
  const auto grid = fft_grid(c.s, pump, {});
  const auto jsa = jsa_exact(c.sc, c.s, pump, grid, MismatchModel::linear);
  const auto ft = phi_fft(jsa, c.s);
  double peak = 0.0;
  for (const auto& v : ft.values.a) peak = std::max(peak, std::abs(v));
  double worst = 0.0;
  for (std::size_t a = 0; a < ft.n_s(); a += 3)
    for (std::size_t b = 0; b < ft.n_i(); b += 3) {
      const double d = std::abs(ft.axis_s[a] - ft.axis_i[b]);
      if (d > 1.15 * c.s.tau_gvs)
        worst = std::max(worst, std::abs(ft.values(a, b)));
    }
  CHECK(worst < 0.05 * peak);
}

TEST_SUITE_END();
