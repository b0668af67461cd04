#pragma once

#include <string>
#include <vector>

namespace cpdc {

/// Refractive-index data for one polarization branch of a crystal.
///
/// Supported functional forms (wavelength in micrometers inside the form):
///   "rational_poles":  n^2 = c0 + sum_j c[2j+1] / (L2 - c[2j+2]),  L2 = lambda^2
///   "lambda2_terms":   n^2 = 1  + sum_j c[2j] L2 / (L2 - c[2j+1])
///   "poly_omega":      n    = sum_j c[j] * (omega * 1e-15)^j   (test materials)
struct Material {
  std::string name;
  std::string branch;  // "ordinary" | "extraordinary"
  std::string form;
  std::vector<double> coefficients;
  double lambda_min_nm = 0.0;
  double lambda_max_nm = 0.0;
  std::string source;
  double temperature_c = 20.0;  // reference temperature, provenance only

  bool in_range_lambda_m(double lambda_m) const;
  bool in_range_omega(double omega_rad_s) const;

  /// Index evaluated from the functional form without a range check. Used
  /// internally for finite-difference probes that sit a hair outside range.
  double index_unchecked_omega(double omega_rad_s) const;

  /// Validates invariants: known form, sane range, no pole of the form inside
  /// the range, and n finite and > 1 on a scan of the range.
  /// Throws std::invalid_argument on violation.
  void validate() const;
};

/// Polynomial test material: n(omega) = sum_j c[j] (omega * 1e-15)^j.
/// An exact n, k, dk/domega companion for oracle tests.
Material make_mock_material(std::string name, std::vector<double> poly_coeffs,
                            double lambda_min_nm, double lambda_max_nm);

/// Exact group slowness dk/domega of a mock (poly_omega) material.
double mock_kprime_exact(const Material& mock, double omega_rad_s);

}  // namespace cpdc
