// qreg: run register/bath simulations, figure presets, spectra and the
// acceptance checks from the command line.

#include <filesystem>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "qreg/acceptance.hpp"
#include "qreg/config.hpp"
#include "qreg/scenario.hpp"

namespace {

void report(const qreg::ScenarioResult& r) {
  std::cout << r.csv.string() << ": late-window F = " << qreg::format_double(r.series.late_fidelity)
            << ", S = " << qreg::format_double(r.series.late_entropy) << " bits\n";
}

int cmd_run(const std::filesystem::path& config_path) {
  report(qreg::run_scenario(qreg::load_config(config_path)));
  return 0;
}

int cmd_preset(const std::string& name, const std::filesystem::path& out_dir) {
  for (const auto& cfg : qreg::preset_configs(name, out_dir)) report(qreg::run_scenario(cfg));
  return 0;
}

int cmd_spectrum(const std::filesystem::path& config_path, const std::filesystem::path& out_dir) {
  const auto cfg = qreg::load_config(config_path);
  const auto spectrum = qreg::compute_spectrum(cfg.model);
  qreg::write_spectrum(spectrum, out_dir);
  std::cout << "wrote " << (out_dir / "eigenvalues.csv").string() << " ("
            << spectrum.eigenvalues.size() << " values)\n";
  if (spectrum.secular_roots) {
    std::cout << "wrote " << (out_dir / "secular_roots.csv").string() << " ("
              << spectrum.secular_roots->size() << " values)\n";
  } else {
    std::cout << "secular roots skipped: coupling is not uniform\n";
  }
  return 0;
}

int cmd_check() {
  const auto results = qreg::acceptance::check_all(std::cout);
  int failed = 0;
  for (const auto& r : results) failed += r.passed ? 0 : 1;
  std::cout << results.size() - failed << "/" << results.size() << " criteria passed\n";
  return failed == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact one-excitation dynamics of a qubit register coupled to a bosonic bath"};
  app.require_subcommand(1);

  std::filesystem::path config_path;
  auto* run = app.add_subcommand("run", "Run the time series described by a config file");
  run->add_option("config", config_path, "Config file")->required()->check(CLI::ExistingFile);

  std::string preset_name;
  std::filesystem::path preset_out = ".";
  auto* preset = app.add_subcommand("preset", "Reproduce a figure setup");
  preset->add_option("name", preset_name, "Preset name")
      ->required()
      ->check(CLI::IsMember({"fig1", "fig2", "fig3", "fig4", "fig5"}));
  preset->add_option("--out", preset_out, "Output directory");

  std::filesystem::path spectrum_config;
  std::filesystem::path spectrum_out = ".";
  auto* spectrum = app.add_subcommand("spectrum", "Write eigenvalues and secular roots as CSV");
  spectrum->add_option("config", spectrum_config, "Config file")->required()->check(CLI::ExistingFile);
  spectrum->add_option("--out", spectrum_out, "Output directory");

  auto* check = app.add_subcommand("check", "Run the acceptance criteria");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*run) return cmd_run(config_path);
    if (*preset) return cmd_preset(preset_name, preset_out);
    if (*spectrum) return cmd_spectrum(spectrum_config, spectrum_out);
    if (*check) return cmd_check();
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << '\n';
    return 2;
  }
  return 0;
}
