// Python bindings for the counterpropagating-SPDC toolkit. Exposes the main
// operations: material/scenario loading, phase matching, JSA construction,
// marginal coherence, Schmidt analysis and the temporal correlation.

#include <pybind11/complex.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include "cpdc/coherence.hpp"
#include "cpdc/dispersion.hpp"
#include "cpdc/io.hpp"
#include "cpdc/schmidt.hpp"
#include "cpdc/temporal.hpp"
#include "cpdc/units.hpp"

namespace py = pybind11;
using namespace cpdc;

namespace {

py::array_t<std::complex<double>> mat_to_numpy(const CMat& m) {
  py::array_t<std::complex<double>> out({m.rows, m.cols});
  auto buf = out.mutable_unchecked<2>();
  for (std::size_t i = 0; i < m.rows; ++i)
    for (std::size_t j = 0; j < m.cols; ++j) buf(i, j) = m(i, j);
  return out;
}

CMat numpy_to_mat(const py::array_t<std::complex<double>, py::array::c_style>& arr) {
  if (arr.ndim() != 2) throw std::invalid_argument("expected a 2-D complex array");
  CMat m(static_cast<std::size_t>(arr.shape(0)), static_cast<std::size_t>(arr.shape(1)));
  auto buf = arr.unchecked<2>();
  for (std::size_t i = 0; i < m.rows; ++i)
    for (std::size_t j = 0; j < m.cols; ++j) m(i, j) = buf(i, j);
  return m;
}

MismatchModel model_from(const std::string& s) {
  if (s == "full") return MismatchModel::full;
  if (s == "linear") return MismatchModel::linear;
  throw std::invalid_argument("dispersion model must be 'full' or 'linear'");
}

Beam beam_from(const std::string& s) {
  if (s == "signal") return Beam::signal;
  if (s == "idler") return Beam::idler;
  throw std::invalid_argument("beam must be 'signal' or 'idler'");
}

}  // namespace

PYBIND11_MODULE(_cpdc, m) {
  m.doc() = "counterpropagating-SPDC toolkit";
  m.attr("__version__") = "0.1.0";
  m.attr("c_light") = units::c_light;

  py::register_exception<input_error>(m, "InputError");

  py::class_<Material>(m, "Material")
      .def_readonly("name", &Material::name)
      .def_readonly("branch", &Material::branch)
      .def_readonly("form", &Material::form)
      .def_readonly("coefficients", &Material::coefficients)
      .def_readonly("lambda_min_nm", &Material::lambda_min_nm)
      .def_readonly("lambda_max_nm", &Material::lambda_max_nm)
      .def_readonly("source", &Material::source)
      .def("__repr__", [](const Material& mat) {
        return "<Material " + mat.name + "/" + mat.branch + ">";
      });

  py::class_<CrystalScenario>(m, "CrystalScenario")
      .def_readonly("name", &CrystalScenario::name)
      .def_readwrite("l_c", &CrystalScenario::l_c)
      .def_readwrite("Lambda", &CrystalScenario::Lambda)
      .def_readwrite("lambda_p", &CrystalScenario::lambda_p)
      .def_readwrite("g", &CrystalScenario::g)
      .def_readwrite("pump_tau", &CrystalScenario::pump_tau)
      .def_readwrite("grating_order", &CrystalScenario::grating_order);

  py::class_<PhaseMatchSummary>(m, "PhaseMatchSummary")
      .def_readonly("omega_p0", &PhaseMatchSummary::omega_p0)
      .def_readonly("omega_s0", &PhaseMatchSummary::omega_s0)
      .def_readonly("omega_i0", &PhaseMatchSummary::omega_i0)
      .def_readonly("kprime_p", &PhaseMatchSummary::kprime_p)
      .def_readonly("kprime_s", &PhaseMatchSummary::kprime_s)
      .def_readonly("kprime_i", &PhaseMatchSummary::kprime_i)
      .def_readonly("tau_gvm", &PhaseMatchSummary::tau_gvm)
      .def_readonly("tau_gvs_prime", &PhaseMatchSummary::tau_gvs_prime)
      .def_readonly("tau_gvs", &PhaseMatchSummary::tau_gvs)
      .def_readonly("eta", &PhaseMatchSummary::eta)
      .def_readonly("Omega_gvm", &PhaseMatchSummary::Omega_gvm)
      .def_readonly("Omega_gvs_prime", &PhaseMatchSummary::Omega_gvs_prime)
      .def_readonly("Omega_gvs", &PhaseMatchSummary::Omega_gvs)
      .def_readonly("t_As", &PhaseMatchSummary::t_As)
      .def_readonly("t_Ai", &PhaseMatchSummary::t_Ai)
      .def_readonly("t_Ap", &PhaseMatchSummary::t_Ap)
      .def_readonly("gain_warning", &PhaseMatchSummary::gain_warning)
      .def_property_readonly("lambda_s_nm",
                             [](const PhaseMatchSummary& s) { return s.lambda_s_m() / units::nm; })
      .def_property_readonly("lambda_i_nm",
                             [](const PhaseMatchSummary& s) { return s.lambda_i_m() / units::nm; });

  py::class_<PumpPulse>(m, "PumpPulse")
      .def_static("gaussian", &PumpPulse::gaussian, py::arg("tau_p_s"))
      .def_readonly("tau_p", &PumpPulse::tau_p)
      .def_property_readonly("delta_omega_p", &PumpPulse::delta_omega_p);

  py::class_<FrequencyGrid>(m, "FrequencyGrid")
      .def_static("centered", &FrequencyGrid::centered, py::arg("step_s"), py::arg("n_s"),
                  py::arg("step_i"), py::arg("n_i"))
      .def_readonly("axis_s", &FrequencyGrid::axis_s)
      .def_readonly("axis_i", &FrequencyGrid::axis_i)
      .def_readonly("step_s", &FrequencyGrid::step_s)
      .def_readonly("step_i", &FrequencyGrid::step_i);

  py::class_<JsaGrid>(m, "JsaGrid")
      .def_readonly("grid", &JsaGrid::grid)
      .def_readonly("g", &JsaGrid::g)
      .def_readonly("tau_p", &JsaGrid::tau_p)
      .def_property_readonly("values", [](const JsaGrid& j) { return mat_to_numpy(j.values); })
      .def_property_readonly("regime", [](const JsaGrid& j) {
        switch (j.regime) {
          case JsaRegime::exact: return "exact";
          case JsaRegime::cw: return "cw";
          case JsaRegime::ultrashort: return "ultrashort";
          default: return "intermediate";
        }
      });

  py::class_<CoherenceGrid>(m, "CoherenceGrid")
      .def_readonly("axis", &CoherenceGrid::axis)
      .def_readonly("spectrum", &CoherenceGrid::spectrum)
      .def_readonly("fwhm_spectrum", &CoherenceGrid::fwhm_spectrum)
      .def_readonly("fwhm_coherence", &CoherenceGrid::fwhm_coherence)
      .def_property_readonly("values",
                             [](const CoherenceGrid& g) { return mat_to_numpy(g.values); });

  py::class_<SchmidtReport>(m, "SchmidtReport")
      .def_readonly("kappa_integral", &SchmidtReport::kappa_integral)
      .def_readonly("kappa_svd", &SchmidtReport::kappa_svd)
      .def_readonly("N", &SchmidtReport::N)
      .def_readonly("B", &SchmidtReport::B)
      .def_readonly("g2", &SchmidtReport::g2)
      .def_readonly("asymptote_cw", &SchmidtReport::asymptote_cw)
      .def_readonly("asymptote_ultrashort", &SchmidtReport::asymptote_ultrashort)
      .def_readonly("kappa_min_gaussian", &SchmidtReport::kappa_min_gaussian)
      .def_readonly("delta_omega_p_at_min", &SchmidtReport::delta_omega_p_at_min)
      .def_readonly("schmidt_spectrum", &SchmidtReport::schmidt_spectrum);

  py::class_<TemporalGrid>(m, "TemporalGrid")
      .def_readonly("axis_s", &TemporalGrid::axis_s)
      .def_readonly("axis_i", &TemporalGrid::axis_i)
      .def_readonly("t_As", &TemporalGrid::t_As)
      .def_readonly("t_Ai", &TemporalGrid::t_Ai)
      .def_readonly("constant_phase", &TemporalGrid::constant_phase)
      .def_property_readonly("values",
                             [](const TemporalGrid& t) { return mat_to_numpy(t.values); });

  py::class_<RegimeReport>(m, "RegimeReport")
      .def_readonly("label", &RegimeReport::label)
      .def_readonly("ratio_cw", &RegimeReport::ratio_cw)
      .def_readonly("ratio_ultra", &RegimeReport::ratio_ultra);

  m.def("load_material", &load_material, py::arg("file"));
  m.def("load_scenario", &load_scenario, py::arg("file"));
  m.def("refractive_index", &refractive_index, py::arg("material"), py::arg("lambda_vac_nm"));
  m.def(
      "wavenumber",
      [](const Material& mat, double omega) {
        const auto p = wavenumber(mat, omega);
        return py::make_tuple(p.k, p.k_prime);
      },
      py::arg("material"), py::arg("omega_rad_s"), "returns (k, dk/domega)");
  m.def("solve_central_frequencies", &solve_central_frequencies, py::arg("scenario"));
  m.def(
      "phase_mismatch",
      [](const PhaseMatchSummary& s, const CrystalScenario& sc, double ws, double wi,
         const std::string& model) { return phase_mismatch(s, sc, ws, wi, model_from(model)); },
      py::arg("summary"), py::arg("scenario"), py::arg("Omega_s"), py::arg("Omega_i"),
      py::arg("model") = "linear");

  m.def(
      "default_grid",
      [](const PhaseMatchSummary& s, const PumpPulse& p, std::size_t force_n) {
        GridPolicy pol;
        pol.force_n_s = force_n;
        pol.force_n_i = force_n;
        return default_grid(s, p, pol);
      },
      py::arg("summary"), py::arg("pump"), py::arg("force_n") = 0);
  m.def("fft_grid",
        [](const PhaseMatchSummary& s, const PumpPulse& p) { return fft_grid(s, p, {}); });

  m.def(
      "jsa_exact",
      [](const CrystalScenario& sc, const PhaseMatchSummary& s, const PumpPulse& p,
         const FrequencyGrid& grid, const std::string& model) {
        return jsa_exact(sc, s, p, grid, model_from(model));
      },
      py::arg("scenario"), py::arg("summary"), py::arg("pump"), py::arg("grid"),
      py::arg("model") = "linear");
  m.def(
      "jsa_cw_limit",
      [](const PhaseMatchSummary& s, const PumpPulse& p, const FrequencyGrid& grid, double g) {
        return jsa_cw_limit(s, p, grid, LimitForm::signal, g);
      },
      py::arg("summary"), py::arg("pump"), py::arg("grid"), py::arg("g") = 0.01);
  m.def(
      "jsa_ultrashort_limit",
      [](const PhaseMatchSummary& s, const PumpPulse& p, const FrequencyGrid& grid, double g) {
        return jsa_ultrashort_limit(s, p, grid, LimitForm::signal, g);
      },
      py::arg("summary"), py::arg("pump"), py::arg("grid"), py::arg("g") = 0.01);
  m.def("jsa_intermediate_limit", &jsa_intermediate_limit, py::arg("summary"), py::arg("pump"),
        py::arg("grid"), py::arg("g") = 0.01);

  m.def(
      "g1", [](const JsaGrid& jsa, const std::string& which) { return g1(jsa, beam_from(which)); },
      py::arg("jsa"), py::arg("which"));
  m.def(
      "g1_spectrum",
      [](const JsaGrid& jsa, const std::string& which) {
        return g1_spectrum(jsa, beam_from(which));
      },
      py::arg("jsa"), py::arg("which"));

  m.def(
      "schmidt_integral",
      [](const JsaGrid& jsa) {
        const auto r = schmidt_integral(jsa);
        return py::make_tuple(r.N, r.B, r.kappa);
      },
      py::arg("jsa"), "returns (N, B, kappa)");
  m.def(
      "schmidt_svd",
      [](const JsaGrid& jsa) {
        const auto r = schmidt_svd(jsa);
        return py::make_tuple(r.kappa, r.spectrum);
      },
      py::arg("jsa"), "returns (kappa, normalized_spectrum)");
  m.def("schmidt_report", &schmidt_report, py::arg("jsa"), py::arg("summary"));
  m.def(
      "kappa_svd_of_matrix",
      [](const py::array_t<std::complex<double>, py::array::c_style>& arr, double step_s,
         double step_i) {
        JsaGrid jsa;
        jsa.values = numpy_to_mat(arr);
        // axes only enter through the quadrature steps; any shape is fine here
        jsa.grid.axis_s.assign(jsa.values.rows, 0.0);
        jsa.grid.axis_i.assign(jsa.values.cols, 0.0);
        jsa.grid.step_s = step_s;
        jsa.grid.step_i = step_i;
        jsa.g = 1.0;
        jsa.tau_p = 1.0;
        return schmidt_svd(jsa).kappa;
      },
      py::arg("values"), py::arg("step_s") = 1.0, py::arg("step_i") = 1.0,
      "Schmidt number of an arbitrary complex amplitude matrix");

  m.def(
      "kappa_asymptotes",
      [](const PhaseMatchSummary& s, const PumpPulse& p) {
        const auto a = kappa_asymptotes(s, p);
        py::dict d;
        d["cw"] = a.cw;
        d["ultrashort"] = a.ultrashort;
        d["kappa_min"] = a.kappa_min;
        d["delta_omega_p_at_min"] = a.delta_omega_p_at_min;
        return d;
      },
      py::arg("summary"), py::arg("pump"));

  m.def(
      "kappa_sweep",
      [](const CrystalScenario& sc, const PhaseMatchSummary& s,
         const std::vector<double>& taus) {
        py::list rows;
        for (const auto& r : kappa_sweep(sc, s, taus)) {
          py::dict d;
          d["tau_p"] = r.tau_p;
          d["delta_omega_p"] = r.delta_omega_p;
          d["kappa_integral"] = r.kappa_integral;
          d["kappa_svd"] = r.kappa_svd;
          d["asym_cw"] = r.asym_cw;
          d["asym_ultrashort"] = r.asym_ultrashort;
          d["ok"] = r.ok;
          if (!r.ok) d["error"] = r.error;
          rows.append(d);
        }
        return rows;
      },
      py::arg("scenario"), py::arg("summary"), py::arg("tau_p_list"));

  m.def(
      "phi_analytic",
      [](const PhaseMatchSummary& s, const PumpPulse& p, const CrystalScenario& sc,
         const std::vector<double>& axis_s, const std::vector<double>& axis_i) {
        return phi_analytic(s, p, sc, axis_s, axis_i);
      },
      py::arg("summary"), py::arg("pump"), py::arg("scenario"), py::arg("axis_s"),
      py::arg("axis_i"));
  m.def("default_time_axis", &default_time_axis, py::arg("summary"), py::arg("pump"),
        py::arg("count"));
  m.def("phi_fft", &phi_fft, py::arg("jsa"), py::arg("summary"));
  m.def("regime_report", &regime_report, py::arg("summary"), py::arg("pump"));
}
