#include "qreg/scenario.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <system_error>

#include "qreg/spectral.hpp"

namespace qreg {

namespace {

constexpr double kPresetTMax = 2000.0;
constexpr int kPresetSteps = 4001;
constexpr int kPresetModes = 200;

RunConfig preset(int n_qubits, CouplingSpec coupling, PrepSpec prep,
                 const std::filesystem::path& csv) {
  return RunConfig{ModelParams(RegisterShape(n_qubits, kPresetModes), 1.0, std::move(coupling)),
                   std::move(prep), TimeGrid(kPresetTMax, kPresetSteps), csv, std::nullopt,
                   std::nullopt};
}

std::string tag(double value) {
  std::ostringstream s;
  s << value;
  return s.str();
}

}  // namespace

void write_time_series_csv(std::ostream& out, std::span<const TimeSeriesRecord> records) {
  out << kTimeSeriesHeader << '\n';
  for (const auto& r : records) {
    out << format_double(r.t) << ',' << format_double(r.fidelity) << ','
        << format_double(r.entropy_bits) << ',' << format_double(r.p0) << ','
        << format_double(r.p1) << ',' << format_double(r.d_re) << ',' << format_double(r.d_im)
        << '\n';
  }
}

void write_file_atomic(const std::filesystem::path& path, std::string_view content) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  auto temp = path;
  temp += ".tmp";
  {
    std::ofstream out(temp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write `" + temp.string() + "`");
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    out.flush();
    if (!out) throw std::runtime_error("write failed for `" + temp.string() + "`");
  }
  std::error_code ec;
  std::filesystem::rename(temp, path, ec);
  if (ec) {
    std::filesystem::remove(temp);
    throw std::runtime_error("cannot rename onto `" + path.string() + "`: " + ec.message());
  }
}

std::filesystem::path metadata_path(const std::filesystem::path& csv) {
  auto p = csv;
  p += ".meta";
  return p;
}

ScenarioResult run_scenario(const RunConfig& config) {
  const SpinVector prep = resolve_preparation(config.prep, config.model.shape());
  ScenarioResult result{run_time_series(config.model, prep, config.grid), config.output_path,
                        metadata_path(config.output_path)};

  std::ostringstream csv;
  write_time_series_csv(csv, result.series.records);
  write_file_atomic(result.csv, csv.str());

  std::ostringstream meta;
  meta << "# resolved run parameters; parse as a config to reproduce the run\n"
       << render_config(config)
       << "# late_window_fidelity = " << format_double(result.series.late_fidelity) << '\n'
       << "# late_window_entropy_bits = " << format_double(result.series.late_entropy) << '\n'
       << "# mean_fidelity = " << format_double(result.series.mean_fidelity) << '\n'
       << "# mean_entropy_bits = " << format_double(result.series.mean_entropy) << '\n';
  write_file_atomic(result.metadata, meta.str());
  return result;
}

std::vector<std::string_view> preset_names() { return {"fig1", "fig2", "fig3", "fig4", "fig5"}; }

std::vector<RunConfig> preset_configs(std::string_view name, const std::filesystem::path& out_dir) {
  std::vector<RunConfig> configs;
  const std::string prefix(name);
  if (name == "fig1") {
    for (double g : {0.005, 0.01, 0.02}) {
      configs.push_back(preset(2, UniformCoupling{g}, prep::Symmetric{},
                               out_dir / (prefix + "_g" + tag(g) + ".csv")));
    }
  } else if (name == "fig2" || name == "fig3") {
    // fig3 plots the entropy column of the fig2 runs
    for (int m : {1, 2, 3}) {
      configs.push_back(preset(4, UniformCoupling{0.01}, prep::MSuperposition{m},
                               out_dir / (prefix + "_M" + std::to_string(m) + ".csv")));
    }
  } else if (name == "fig4") {
    for (double xi : {10.0, 5.0, 1.0}) {
      configs.push_back(preset(2, CosineCoupling{0.01, xi}, prep::Momentum{1},
                               out_dir / (prefix + "_xi" + tag(xi) + ".csv")));
    }
  } else if (name == "fig5") {
    configs.push_back(preset(2, CosineCoupling{0.01, 1.0}, prep::Symmetric{},
                             out_dir / (prefix + "_sym.csv")));
    configs.push_back(preset(2, CosineCoupling{0.01, 1.0}, prep::Momentum{1},
                             out_dir / (prefix + "_antisym.csv")));
  } else {
    throw std::invalid_argument("unknown preset `" + prefix + "`");
  }
  return configs;
}

Spectrum compute_spectrum(const ModelParams& params) {
  const auto sd = diagonalize(build_h1(params));
  Spectrum s;
  s.eigenvalues.assign(sd.eigenvalues.data(), sd.eigenvalues.data() + sd.eigenvalues.size());
  if (params.has_uniform_coupling()) s.secular_roots = secular_roots(params);
  return s;
}

void write_spectrum(const Spectrum& spectrum, const std::filesystem::path& dir) {
  auto column = [](const std::vector<double>& values) {
    std::string text;
    for (double v : values) text += format_double(v) + '\n';
    return text;
  };
  write_file_atomic(dir / "eigenvalues.csv", column(spectrum.eigenvalues));
  if (spectrum.secular_roots) write_file_atomic(dir / "secular_roots.csv", column(*spectrum.secular_roots));
}

}  // namespace qreg
