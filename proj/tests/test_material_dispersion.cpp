#include <cmath>
#include <stdexcept>

#include "cpdc/dispersion.hpp"
#include "cpdc/io.hpp"
#include "cpdc/units.hpp"
#include "doctest.h"

using namespace cpdc;

namespace {

Material ktp() { return load_material(CPDC_DATA_DIR "/materials/ktp_z.json"); }
Material lnb() { return load_material(CPDC_DATA_DIR "/materials/linbo3_e.json"); }

}  // namespace

TEST_SUITE_BEGIN("material-dispersion");

// Golden values pinned from tests/oracle/sellmeier_reference.py against the
// shipped coefficient files.
TEST_CASE("refractive index golden values") {
  CHECK(refractive_index(ktp(), 1141.0) == doctest::Approx(1.826836660).epsilon(1e-8));
  CHECK(refractive_index(ktp(), 821.0) == doctest::Approx(1.842965979).epsilon(1e-8));
  CHECK(refractive_index(lnb(), 1055.0) == doctest::Approx(2.156012401).epsilon(1e-8));
  CHECK(refractive_index(lnb(), 527.5) == doctest::Approx(2.235479999).epsilon(1e-8));
  CHECK(refractive_index(ktp(), 1141.0) > 1.7);
  CHECK(refractive_index(ktp(), 1141.0) < 1.9);
  CHECK(refractive_index(lnb(), 1055.0) > 2.0);
  CHECK(refractive_index(lnb(), 1055.0) < 2.3);
}

TEST_CASE("out-of-range wavelength raises a domain error naming the material") {
  const auto m = ktp();
  CHECK_THROWS_AS(refractive_index(m, m.lambda_min_nm - 1.0), std::domain_error);
  try {
    refractive_index(m, m.lambda_min_nm - 1.0);
  } catch (const std::domain_error& e) {
    const std::string msg = e.what();
    CHECK(msg.find("KTP") != std::string::npos);
    CHECK(msg.find("430") != std::string::npos);
  }
}

TEST_CASE("wavenumber ties to the pinned index") {
  const auto m = ktp();
  const double omega = units::omega_from_lambda(1141.0 * units::nm);
  const auto p = wavenumber(m, omega);
  CHECK(p.k == doctest::Approx(1.826836660 * omega / units::c_light).epsilon(1e-8));
  CHECK(p.k > 0.0);
  CHECK(p.k_prime > 0.0);
}

TEST_CASE("constant-index mock gives k' = n/c exactly") {
  const auto m = make_mock_material("const2", {2.0}, 400.0, 4000.0);
  const double omega = units::omega_from_lambda(1000.0 * units::nm);
  const auto p = wavenumber(m, omega);
  CHECK(p.k_prime == doctest::Approx(2.0 / units::c_light).epsilon(1e-12));
}

TEST_CASE("mock material with polynomial n(omega) matches the closed form") {
  // n(w) = 1.5 + 0.05 x + 0.01 x^2, x = w * 1e-15
  const auto m = make_mock_material("poly", {1.5, 0.05, 0.01}, 400.0, 4000.0);
  for (double lam_nm : {500.0, 900.0, 1500.0, 2500.0, 3800.0}) {
    const double omega = units::omega_from_lambda(lam_nm * units::nm);
    const auto p = wavenumber(m, omega);
    const double exact = mock_kprime_exact(m, omega);
    CHECK(std::abs(p.k_prime - exact) / exact < 1e-9);
  }
}

TEST_CASE("dispersion is material-dependent: k' differs across the band") {
  const auto m = ktp();
  const auto p1 = wavenumber(m, units::omega_from_lambda(1141.0 * units::nm));
  const auto p2 = wavenumber(m, units::omega_from_lambda(2932.0 * units::nm));
  CHECK(std::abs(p1.k_prime - p2.k_prime) / p1.k_prime > 1e-4);
}

TEST_CASE("finite-difference convergence: halving h moves k' below 1e-6 relative") {
  // wavenumber() uses h = 1e-6 w with one Richardson step; compare against a
  // recomputation at half the step done here by hand.
  const auto m = ktp();
  for (double lam_nm : {600.0, 1141.0, 2000.0, 2932.0, 3400.0}) {
    const double w0 = units::omega_from_lambda(lam_nm * units::nm);
    auto k_at = [&](double w) { return m.index_unchecked_omega(w) * w / units::c_light; };
    auto richardson = [&](double h) {
      const double d1 = (k_at(w0 + h) - k_at(w0 - h)) / (2.0 * h);
      const double d2 = (k_at(w0 + 0.5 * h) - k_at(w0 - 0.5 * h)) / h;
      return (4.0 * d2 - d1) / 3.0;
    };
    const double full = richardson(1e-6 * w0);
    const double half = richardson(0.5e-6 * w0);
    CHECK(std::abs(full - half) / std::abs(full) < 1e-6);
    CHECK(wavenumber(m, w0).k_prime == doctest::Approx(full).epsilon(1e-12));
  }
}

TEST_CASE("k(omega) strictly increasing over the valid range") {
  for (const auto& m : {ktp(), lnb()}) {
    double prev = 0.0;
    for (int i = 0; i <= 100; ++i) {
      const double lam =
          m.lambda_max_nm - (m.lambda_max_nm - m.lambda_min_nm) * double(i) / 100.0;
      const double w = units::omega_from_lambda(lam * units::nm);
      const double k = wavenumber(m, w).k;
      CHECK(k > prev);  // omega ascends as lambda descends
      prev = k;
    }
  }
}

TEST_CASE("n > 1 and finite over the range (validate enforces it)") {
  for (const auto& m : {ktp(), lnb()}) {
    CHECK_NOTHROW(m.validate());
    for (int i = 0; i <= 64; ++i) {
      const double lam = m.lambda_min_nm + (m.lambda_max_nm - m.lambda_min_nm) * i / 64.0;
      const double n = refractive_index(m, lam);
      CHECK(std::isfinite(n));
      CHECK(n > 1.0);
    }
  }
}

TEST_CASE("material with a pole inside its claimed range fails validation") {
  Material bad;
  bad.name = "bad";
  bad.branch = "ordinary";
  bad.form = "rational_poles";
  bad.coefficients = {4.0, 0.05, 1.0};  // pole at lambda = 1 um
  bad.lambda_min_nm = 500.0;
  bad.lambda_max_nm = 2000.0;
  bad.source = "test";
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
}

TEST_SUITE_END();
