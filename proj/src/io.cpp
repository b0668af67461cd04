#include "cpdc/io.hpp"

#include <cinttypes>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "cpdc/units.hpp"
#include "json.hpp"

namespace cpdc {

namespace {

using nlohmann::json;

json parse_file(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) throw input_error("cannot open '" + file.string() + "'");
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw input_error("malformed JSON in '" + file.string() + "': " + e.what());
  }
}

template <typename T>
T require(const json& j, const char* key, const std::filesystem::path& file) {
  if (!j.contains(key))
    throw input_error("'" + file.string() + "': missing field '" + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const json::exception&) {
    throw input_error("'" + file.string() + "': field '" + key + "' has the wrong type");
  }
}

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::ofstream open_out(const std::filesystem::path& file) {
  std::ofstream out(file, std::ios::binary);  // binary keeps LF endings
  if (!out) throw std::runtime_error("cannot write '" + file.string() + "'");
  return out;
}

}  // namespace

Material load_material(const std::filesystem::path& file) {
  const json j = parse_file(file);
  Material m;
  m.name = require<std::string>(j, "name", file);
  m.branch = require<std::string>(j, "branch", file);
  m.form = require<std::string>(j, "form", file);
  m.coefficients = require<std::vector<double>>(j, "coefficients", file);
  const auto range = require<std::vector<double>>(j, "range_nm", file);
  if (range.size() != 2) throw input_error("'" + file.string() + "': range_nm wants [lo, hi]");
  m.lambda_min_nm = range[0];
  m.lambda_max_nm = range[1];
  m.source = require<std::string>(j, "source", file);
  if (j.contains("temperature_c")) m.temperature_c = j.at("temperature_c").get<double>();
  try {
    m.validate();
  } catch (const std::invalid_argument& e) {
    throw input_error("'" + file.string() + "': " + e.what());
  }
  return m;
}

CrystalScenario load_scenario(const std::filesystem::path& file) {
  const json j = parse_file(file);
  CrystalScenario sc;
  const auto mat_rel = require<std::string>(j, "material", file);
  const auto mat_path = file.parent_path() / mat_rel;
  sc.material_pump = load_material(mat_path);
  sc.material_signal = sc.material_pump;
  sc.material_idler = sc.material_pump;
  sc.l_c = require<double>(j, "l_c_mm", file) * units::mm;
  sc.Lambda = require<double>(j, "Lambda_nm", file) * units::nm;
  sc.lambda_p = require<double>(j, "lambda_p_nm", file) * units::nm;
  sc.g = require<double>(j, "g", file);
  sc.pump_tau = require<double>(j, "tau_p_ps", file) * units::ps;
  sc.name = j.value("name", file.stem().string());
  sc.grating_order = j.value("grating_order", 1);
  if (j.contains("lambda_s_window_nm")) {
    const auto w = j.at("lambda_s_window_nm").get<std::vector<double>>();
    if (w.size() != 2)
      throw input_error("'" + file.string() + "': lambda_s_window_nm wants [lo, hi]");
    sc.lambda_s_window_lo = w[0] * units::nm;
    sc.lambda_s_window_hi = w[1] * units::nm;
  }
  try {
    sc.validate();
  } catch (const std::invalid_argument& e) {
    throw input_error("'" + file.string() + "': " + e.what());
  }
  return sc;
}

void write_jsa_matrix(const std::filesystem::path& file, const JsaGrid& jsa) {
  auto out = open_out(file);
  const char* regime = "exact";
  switch (jsa.regime) {
    case JsaRegime::exact: regime = "exact"; break;
    case JsaRegime::cw: regime = "cw"; break;
    case JsaRegime::ultrashort: regime = "ultrashort"; break;
    case JsaRegime::intermediate: regime = "intermediate"; break;
  }
  out << "# jsa-matrix v1\n";
  out << "# scenario " << (jsa.scenario_name.empty() ? "-" : jsa.scenario_name)
      << " regime " << regime << " g " << fmt(jsa.g) << " tau_p_s " << fmt(jsa.tau_p) << "\n";
  out << "# axis_s count " << jsa.grid.n_s() << " step_rad_s " << fmt(jsa.grid.step_s) << "\n";
  out << "# axis_i count " << jsa.grid.n_i() << " step_rad_s " << fmt(jsa.grid.step_i) << "\n";
  out << "# rows: signal index; per row: Re Im pairs across the idler axis\n";
  for (std::size_t a = 0; a < jsa.grid.n_s(); ++a) {
    const cdouble* row = jsa.values.row(a);
    for (std::size_t b = 0; b < jsa.grid.n_i(); ++b) {
      if (b) out << ' ';
      out << fmt(row[b].real()) << ' ' << fmt(row[b].imag());
    }
    out << '\n';
  }
}

namespace {

template <typename Getter>
void write_grid_csv(std::ofstream& out, const std::vector<double>& rows_axis,
                    const std::vector<double>& cols_axis, const char* corner, Getter get) {
  out << corner;
  for (double v : cols_axis) out << ',' << fmt(v);
  out << '\n';
  for (std::size_t a = 0; a < rows_axis.size(); ++a) {
    out << fmt(rows_axis[a]);
    for (std::size_t b = 0; b < cols_axis.size(); ++b) out << ',' << fmt(get(a, b));
    out << '\n';
  }
}

}  // namespace

void write_jsa_magnitude_csv(const std::filesystem::path& file, const JsaGrid& jsa) {
  auto out = open_out(file);
  write_grid_csv(out, jsa.grid.axis_s, jsa.grid.axis_i, "Omega_s_rad_s\\Omega_i_rad_s",
                 [&](std::size_t a, std::size_t b) { return std::abs(jsa.values(a, b)); });
}

void write_spectrum_csv(const std::filesystem::path& file, const std::vector<double>& axis,
                        const std::vector<double>& spectrum) {
  if (axis.size() != spectrum.size())
    throw std::runtime_error("write_spectrum_csv: size mismatch");
  auto out = open_out(file);
  out << "Omega_rad_s,intensity_arb\n";
  for (std::size_t i = 0; i < axis.size(); ++i)
    out << fmt(axis[i]) << ',' << fmt(spectrum[i]) << '\n';
}

void write_coherence_magnitude_csv(const std::filesystem::path& file, const CoherenceGrid& g) {
  auto out = open_out(file);
  write_grid_csv(out, g.axis, g.axis, "Omega_rad_s\\Omega_prime_rad_s",
                 [&](std::size_t a, std::size_t b) { return std::abs(g.values(a, b)); });
}

void write_temporal_magnitude_csv(const std::filesystem::path& file, const TemporalGrid& t) {
  auto out = open_out(file);
  out << "# t_As_ps " << fmt(t.t_As / units::ps) << " t_Ai_ps " << fmt(t.t_Ai / units::ps)
      << " constant_phase_rad " << fmt(t.constant_phase) << "\n";
  std::vector<double> rows_ps(t.axis_s.size()), cols_ps(t.axis_i.size());
  for (std::size_t a = 0; a < rows_ps.size(); ++a) rows_ps[a] = t.axis_s[a] / units::ps;
  for (std::size_t b = 0; b < cols_ps.size(); ++b) cols_ps[b] = t.axis_i[b] / units::ps;
  write_grid_csv(out, rows_ps, cols_ps, "tbar_s_ps\\tbar_i_ps",
                 [&](std::size_t a, std::size_t b) { return std::abs(t.values(a, b)); });
}

void write_sweep_csv(const std::filesystem::path& file, const std::vector<SweepRow>& rows) {
  auto out = open_out(file);
  out << "tau_p_ps,dOmega_p_THz,kappa_integral,kappa_svd,asym_cw,asym_ultrashort\n";
  for (const auto& r : rows) {
    out << fmt(r.tau_p / units::ps) << ',' << fmt(r.delta_omega_p / units::THz) << ',';
    if (r.ok)
      out << fmt(r.kappa_integral) << ',' << fmt(r.kappa_svd) << ',' << fmt(r.asym_cw)
          << ',' << fmt(r.asym_ultrashort);
    else
      out << "nan,nan,nan,nan";
    out << '\n';
  }
}

std::string file_checksum(const std::filesystem::path& file) {
  std::ifstream in(file, std::ios::binary);
  if (!in) throw std::runtime_error("file_checksum: cannot open '" + file.string() + "'");
  std::uint64_t h = 0xcbf29ce484222325ull;
  char buf[1 << 16];
  while (in) {
    in.read(buf, sizeof buf);
    const std::streamsize got = in.gcount();
    for (std::streamsize i = 0; i < got; ++i) {
      h ^= static_cast<unsigned char>(buf[i]);
      h *= 0x100000001b3ull;
    }
  }
  char hex[17];
  std::snprintf(hex, sizeof hex, "%016" PRIx64, h);
  return hex;
}

void RunManifest::write(const std::filesystem::path& dir) const {
  json j;
  j["command"] = command;
  j["scenario_file"] = scenario_file;
  j["out_dir"] = out_dir;
  j["tool_version"] = tool_version;
  j["wall_ms"] = wall_ms;
  j["grid"] = {{"n_s", grid_n_s}, {"n_i", grid_n_i}};
  json files = json::array();
  for (const auto& rel : outputs) {
    files.push_back({{"file", rel}, {"fnv1a64", file_checksum(dir / rel)}});
  }
  j["outputs"] = files;
  auto out = open_out(dir / "manifest.json");
  out << j.dump(2) << '\n';
}

}  // namespace cpdc
