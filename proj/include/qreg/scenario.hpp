#pragma once

#include <filesystem>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qreg/config.hpp"
#include "qreg/dynamics.hpp"

namespace qreg {

inline constexpr std::string_view kTimeSeriesHeader = "t,fidelity,entropy_bits,p0,p1,d_re,d_im";

/// Header line plus one row per record, 17 significant digits.
void write_time_series_csv(std::ostream& out, std::span<const TimeSeriesRecord> records);

/// Writes to a sibling temporary file and renames it over `path`.
void write_file_atomic(const std::filesystem::path& path, std::string_view content);

/// Sidecar next to a CSV: "<csv>.meta".
std::filesystem::path metadata_path(const std::filesystem::path& csv);

struct ScenarioResult {
  TimeSeries series;
  std::filesystem::path csv;
  std::filesystem::path metadata;
};

/// Runs the time series for `config`, writes the CSV and a metadata sidecar
/// that is itself a valid config (late-window averages as comments).
ScenarioResult run_scenario(const RunConfig& config);

/// Named configurations reproducing the figure setups; CSVs land in `out_dir`.
/// Throws std::invalid_argument for an unknown name.
std::vector<RunConfig> preset_configs(std::string_view name, const std::filesystem::path& out_dir);
std::vector<std::string_view> preset_names();

struct Spectrum {
  std::vector<double> eigenvalues;
  std::optional<std::vector<double>> secular_roots;  // uniform coupling only
};

Spectrum compute_spectrum(const ModelParams& params);

/// `eigenvalues.csv` and, when available, `secular_roots.csv` in `dir`,
/// one ascending value per line.
void write_spectrum(const Spectrum& spectrum, const std::filesystem::path& dir);

}  // namespace qreg
