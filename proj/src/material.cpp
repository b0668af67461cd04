#include "cpdc/material.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "cpdc/units.hpp"

namespace cpdc {

namespace {

double lambda_um_from_omega(double omega) {
  return units::lambda_from_omega(omega) / units::um;
}

double n2_rational_poles(const std::vector<double>& c, double l2) {
  double n2 = c[0];
  for (std::size_t j = 1; j + 1 < c.size(); j += 2) n2 += c[j] / (l2 - c[j + 1]);
  return n2;
}

double n2_lambda2_terms(const std::vector<double>& c, double l2) {
  double n2 = 1.0;
  for (std::size_t j = 0; j + 1 < c.size(); j += 2) n2 += c[j] * l2 / (l2 - c[j + 1]);
  return n2;
}

}  // namespace

bool Material::in_range_lambda_m(double lambda_m) const {
  const double nm = lambda_m / units::nm;
  return nm >= lambda_min_nm && nm <= lambda_max_nm;
}

bool Material::in_range_omega(double omega_rad_s) const {
  if (!(omega_rad_s > 0.0)) return false;
  return in_range_lambda_m(units::lambda_from_omega(omega_rad_s));
}

double Material::index_unchecked_omega(double omega_rad_s) const {
  if (form == "poly_omega") {
    const double x = omega_rad_s * 1e-15;
    double n = 0.0;
    for (std::size_t j = coefficients.size(); j-- > 0;) n = n * x + coefficients[j];
    return n;
  }
  const double lum = lambda_um_from_omega(omega_rad_s);
  const double l2 = lum * lum;
  double n2;
  if (form == "rational_poles")
    n2 = n2_rational_poles(coefficients, l2);
  else if (form == "lambda2_terms")
    n2 = n2_lambda2_terms(coefficients, l2);
  else
    throw std::invalid_argument("material '" + name + "': unknown form '" + form + "'");
  return std::sqrt(n2);
}

void Material::validate() const {
  if (name.empty()) throw std::invalid_argument("material: empty name");
  if (branch != "ordinary" && branch != "extraordinary" && branch != "mock")
    throw std::invalid_argument("material '" + name + "': bad branch '" + branch + "'");
  if (!(lambda_min_nm > 0.0) || !(lambda_max_nm > lambda_min_nm))
    throw std::invalid_argument("material '" + name + "': bad range");
  if (coefficients.empty())
    throw std::invalid_argument("material '" + name + "': no coefficients");

  const double l2_min = std::pow(lambda_min_nm / 1e3, 2);
  const double l2_max = std::pow(lambda_max_nm / 1e3, 2);
  auto check_pole = [&](double pole_l2) {
    if (pole_l2 > l2_min && pole_l2 < l2_max)
      throw std::invalid_argument("material '" + name + "': form pole inside valid range");
  };
  if (form == "rational_poles") {
    if (coefficients.size() % 2 != 1)
      throw std::invalid_argument("material '" + name + "': rational_poles wants odd count");
    for (std::size_t j = 2; j < coefficients.size(); j += 2) check_pole(coefficients[j]);
  } else if (form == "lambda2_terms") {
    if (coefficients.size() % 2 != 0)
      throw std::invalid_argument("material '" + name + "': lambda2_terms wants even count");
    for (std::size_t j = 1; j < coefficients.size(); j += 2) check_pole(coefficients[j]);
  } else if (form != "poly_omega") {
    throw std::invalid_argument("material '" + name + "': unknown form '" + form + "'");
  }

  for (int i = 0; i <= 64; ++i) {
    const double lam_nm = lambda_min_nm + (lambda_max_nm - lambda_min_nm) * i / 64.0;
    const double n = index_unchecked_omega(units::omega_from_lambda(lam_nm * units::nm));
    if (!std::isfinite(n) || n <= 1.0)
      throw std::invalid_argument("material '" + name + "': n(lambda) not finite and > 1 at " +
                                  std::to_string(lam_nm) + " nm");
  }
}

Material make_mock_material(std::string name, std::vector<double> poly_coeffs,
                            double lambda_min_nm, double lambda_max_nm) {
  Material m;
  m.name = std::move(name);
  m.branch = "mock";
  m.form = "poly_omega";
  m.coefficients = std::move(poly_coeffs);
  m.lambda_min_nm = lambda_min_nm;
  m.lambda_max_nm = lambda_max_nm;
  m.source = "synthetic test material";
  m.validate();
  return m;
}

double mock_kprime_exact(const Material& mock, double omega_rad_s) {
  if (mock.form != "poly_omega")
    throw std::invalid_argument("mock_kprime_exact: material is not poly_omega");
  const double x = omega_rad_s * 1e-15;
  double n = 0.0, dn_dx = 0.0;
  for (std::size_t j = mock.coefficients.size(); j-- > 0;) {
    dn_dx = dn_dx * x + n;
    n = n * x + mock.coefficients[j];
  }
  // k' = (n + omega dn/domega) / c
  return (n + omega_rad_s * dn_dx * 1e-15) / units::c_light;
}

}  // namespace cpdc
