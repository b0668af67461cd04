#include "cpdc/dispersion.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "cpdc/units.hpp"

namespace cpdc {

namespace {

[[noreturn]] void range_error(const Material& m, double lambda_nm) {
  std::ostringstream os;
  os << "wavelength " << lambda_nm << " nm outside valid range [" << m.lambda_min_nm
     << ", " << m.lambda_max_nm << "] nm of material '" << m.name << "' (" << m.branch << ")";
  throw std::domain_error(os.str());
}

}  // namespace

double refractive_index(const Material& material, double lambda_vac_nm) {
  if (!(lambda_vac_nm >= material.lambda_min_nm && lambda_vac_nm <= material.lambda_max_nm))
    range_error(material, lambda_vac_nm);
  return material.index_unchecked_omega(units::omega_from_lambda(lambda_vac_nm * units::nm));
}

WaveNumberPoint wavenumber(const Material& material, double omega_rad_s) {
  if (!material.in_range_omega(omega_rad_s))
    range_error(material, units::lambda_from_omega(omega_rad_s) / units::nm);

  auto k_at = [&](double om) {
    return material.index_unchecked_omega(om) * om / units::c_light;
  };
  const double h = 1e-6 * omega_rad_s;
  // One Richardson step on the central difference: error drops from O(h^2)
  // to O(h^4).
  const double d_h = (k_at(omega_rad_s + h) - k_at(omega_rad_s - h)) / (2.0 * h);
  const double d_h2 = (k_at(omega_rad_s + 0.5 * h) - k_at(omega_rad_s - 0.5 * h)) / h;
  WaveNumberPoint p;
  p.omega = omega_rad_s;
  p.k = k_at(omega_rad_s);
  p.k_prime = (4.0 * d_h2 - d_h) / 3.0;
  return p;
}

}  // namespace cpdc
