#include <cmath>
#include <complex>
#include <random>

#include "cpdc/linalg.hpp"
#include "cpdc/numerics.hpp"
#include "cpdc/units.hpp"
#include "doctest.h"

using namespace cpdc;

TEST_SUITE_BEGIN("numerics-linalg");

TEST_CASE("sinc behaves through the origin") {
  CHECK(sinc(0.0) == 1.0);
  CHECK(sinc(1e-9) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(sinc(units::pi) == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(sinc(1.0) == doctest::Approx(std::sin(1.0)).epsilon(1e-15));
  // continuity across the series/direct switch
  CHECK(sinc(1.0001e-4) == doctest::Approx(sinc(0.9999e-4)).epsilon(1e-10));
}

TEST_CASE("trapezoid integrates a Gaussian to spectral accuracy") {
  const std::size_t n = 64;
  const double span = 8.0;
  const double step = 2.0 * span / n;
  std::vector<double> y(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double x = -span + step * static_cast<double>(i);
    y[i] = std::exp(-0.5 * x * x);
  }
  CHECK(trapezoid(y, step) == doctest::Approx(std::sqrt(2.0 * units::pi)).epsilon(1e-12));
}

TEST_CASE("bracketing and bisection find a transcendental root") {
  auto f = [](double x) { return std::cos(x) - x; };
  const auto brackets = find_brackets(f, 0.0, 2.0, 50);
  REQUIRE(brackets.size() == 1);
  const double root = bisect(f, brackets.front(), 1e-14);
  CHECK(root == doctest::Approx(0.7390851332151607).epsilon(1e-12));
}

TEST_CASE("fwhm of a sampled Gaussian and of sinc^2 main lobe") {
  const std::size_t n = 2001;
  std::vector<double> x(n), g(n), s2(n);
  for (std::size_t i = 0; i < n; ++i) {
    x[i] = -10.0 + 20.0 * static_cast<double>(i) / static_cast<double>(n - 1);
    g[i] = std::exp(-x[i] * x[i]);
    const double v = sinc(x[i]);
    s2[i] = v * v;
  }
  CHECK(fwhm_main_lobe(x, g) == doctest::Approx(2.0 * std::sqrt(std::log(2.0))).epsilon(1e-4));
  // sinc^2 half max at |x| = 1.391557; side lobes must not confuse the walk
  CHECK(fwhm_main_lobe(x, s2) == doctest::Approx(2.0 * 1.39155737825151).epsilon(1e-4));
}

TEST_CASE("fft matches a direct DFT and Parseval") {
  const std::size_t n = 64;
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::vector<cdouble> x(n);
  for (auto& v : x) v = {u(rng), u(rng)};
  auto y = x;
  Fft fft(n);
  fft.transform(y.data(), -1);
  for (std::size_t k = 0; k < n; ++k) {
    cdouble ref = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      const double ang = -units::two_pi * double(k * j % n) / double(n);
      ref += x[j] * cdouble(std::cos(ang), std::sin(ang));
    }
    CHECK(std::abs(y[k] - ref) < 1e-10);
  }
  double ex = 0.0, ey = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    ex += std::norm(x[j]);
    ey += std::norm(y[j]);
  }
  CHECK(ey == doctest::Approx(ex * n).epsilon(1e-12));
  // round trip
  fft.transform(y.data(), +1);
  for (std::size_t j = 0; j < n; ++j) CHECK(std::abs(y[j] / double(n) - x[j]) < 1e-12);
}

TEST_CASE("centered_fft2 reproduces the analytic Gaussian transform") {
  // f(ws, wi) = exp(-(ws^2+wi^2)/2) -> (1/2pi) integral e^{-i(ws t + wi t')} f
  //           = exp(-(ts^2+ti^2)/2)
  const std::size_t n = 64;
  const double step = 16.0 / n;
  CMat grid(n, n);
  std::vector<double> w(n);
  for (std::size_t j = 0; j < n; ++j) w[j] = (double(j) - double(n / 2)) * step;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      grid(a, b) = std::exp(-0.5 * (w[a] * w[a] + w[b] * w[b]));
  centered_fft2(grid, step * step / units::two_pi);
  const double dt = units::two_pi / (n * step);
  for (std::size_t a = 0; a < n; a += 7)
    for (std::size_t b = 0; b < n; b += 7) {
      const double ta = (double(a) - double(n / 2)) * dt;
      const double tb = (double(b) - double(n / 2)) * dt;
      const double ref = std::exp(-0.5 * (ta * ta + tb * tb));
      CHECK(std::abs(grid(a, b) - cdouble(ref, 0.0)) < 1e-9);
    }
}

TEST_CASE("hermitian eigenvalues: Toeplitz tridiagonal closed form") {
  const std::size_t n = 48;
  CMat a(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    a(i, i) = 2.0;
    if (i + 1 < n) {
      a(i, i + 1) = -1.0;
      a(i + 1, i) = -1.0;
    }
  }
  const auto ev = hermitian_eigenvalues(std::move(a));
  for (std::size_t k = 1; k <= n; ++k) {
    const double ref = 2.0 - 2.0 * std::cos(double(k) * units::pi / double(n + 1));
    CHECK(ev[k - 1] == doctest::Approx(ref).epsilon(1e-10));
  }
}

TEST_CASE("hermitian eigenvalues: random complex Hermitian invariants") {
  const std::size_t n = 40;
  std::mt19937 rng(11);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  CMat a(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    a(i, i) = u(rng);
    for (std::size_t j = i + 1; j < n; ++j) {
      const cdouble v{u(rng), u(rng)};
      a(i, j) = v;
      a(j, i) = std::conj(v);
    }
  }
  double tr = 0.0, fro2 = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    tr += a(i, i).real();
    for (std::size_t j = 0; j < n; ++j) fro2 += std::norm(a(i, j));
  }
  const auto ev = hermitian_eigenvalues(std::move(a));
  double s1 = 0.0, s2 = 0.0;
  for (double v : ev) {
    s1 += v;
    s2 += v * v;
  }
  CHECK(s1 == doctest::Approx(tr).epsilon(1e-10));
  CHECK(s2 == doctest::Approx(fro2).epsilon(1e-10));
}

TEST_CASE("gram contractions agree with direct sums") {
  const std::size_t r = 13, c = 9;
  std::mt19937 rng(3);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  CMat m(r, c);
  for (auto& v : m.a) v = {u(rng), u(rng)};
  std::vector<double> wc(c), wr(r);
  for (auto& v : wc) v = 0.5 + 0.5 * u(rng) + 0.6;
  for (auto& v : wr) v = 0.5 + 0.5 * u(rng) + 0.6;

  const CMat gs = gram_conj_weighted(m, wc);
  const CMat gi = gram_conj_weighted_rows(m, wr);
  for (std::size_t j = 0; j < r; ++j)
    for (std::size_t l = 0; l < r; ++l) {
      cdouble ref = 0.0;
      for (std::size_t k = 0; k < c; ++k) ref += std::conj(m(j, k)) * wc[k] * m(l, k);
      CHECK(std::abs(gs(j, l) - ref) < 1e-12);
    }
  for (std::size_t j = 0; j < c; ++j)
    for (std::size_t l = 0; l < c; ++l) {
      cdouble ref = 0.0;
      for (std::size_t k = 0; k < r; ++k) ref += std::conj(m(k, j)) * wr[k] * m(k, l);
      CHECK(std::abs(gi(j, l) - ref) < 1e-12);
    }
}

TEST_SUITE_END();
