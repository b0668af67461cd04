#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "cpdc/biphoton.hpp"
#include "cpdc/coherence.hpp"
#include "cpdc/qpm.hpp"
#include "cpdc/schmidt.hpp"
#include "cpdc/temporal.hpp"

namespace cpdc {

/// Thrown for malformed or unreadable input files (CLI exit code 2);
/// numeric/solver failures keep std::runtime_error (exit code 1).
struct input_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Material record: JSON with fields name, branch, form, coefficients[],
/// range_nm, source (optional temperature_c). UTF-8.
Material load_material(const std::filesystem::path& file);

/// Scenario record: JSON with fields material (path relative to the scenario
/// file), l_c_mm, Lambda_nm, lambda_p_nm, g, tau_p_ps; optional name,
/// grating_order, lambda_s_window_nm = [lo, hi].
CrystalScenario load_scenario(const std::filesystem::path& file);

// ---- text/CSV exports; '.' decimal, LF line endings, %.17g numbers ----

/// Header lines with axis metadata, then one row per signal sample holding
/// "Re Im" pairs across the idler axis.
void write_jsa_matrix(const std::filesystem::path& file, const JsaGrid& jsa);

/// Magnitude-only CSV: first row is the idler axis, first column the signal
/// axis (both rad/s), cells |psi|.
void write_jsa_magnitude_csv(const std::filesystem::path& file, const JsaGrid& jsa);

/// Spectrum CSV with header Omega_rad_s,intensity_arb.
void write_spectrum_csv(const std::filesystem::path& file,
                        const std::vector<double>& axis, const std::vector<double>& spectrum);

/// |G1| grid CSV in the same layout as the JSA magnitude export.
void write_coherence_magnitude_csv(const std::filesystem::path& file, const CoherenceGrid& g);

/// Temporal |phi| CSV, axes in ps, annotated with the arrival-time offsets.
void write_temporal_magnitude_csv(const std::filesystem::path& file, const TemporalGrid& t);

/// Sweep CSV with header tau_p_ps,dOmega_p_THz,kappa_integral,kappa_svd,
/// asym_cw,asym_ultrashort. Failed rows keep their position with nan columns.
void write_sweep_csv(const std::filesystem::path& file, const std::vector<SweepRow>& rows);

/// FNV-1a 64-bit checksum of a file's bytes, as 16 hex digits.
std::string file_checksum(const std::filesystem::path& file);

/// Run manifest: every output with its checksum, plus command/grid/timing
/// telemetry. Written as manifest.json in the output directory.
struct RunManifest {
  std::string command;
  std::string scenario_file;
  std::string out_dir;
  std::string tool_version;
  double wall_ms = 0.0;
  std::size_t grid_n_s = 0, grid_n_i = 0;
  std::vector<std::string> outputs;  // paths relative to out_dir

  void write(const std::filesystem::path& dir) const;
};

}  // namespace cpdc
