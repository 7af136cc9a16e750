#pragma once

// Run configuration: a flat `key = value` document with `#` comments.
//
//   register.n_qubits   register.n_modes   model.epsilon
//   coupling.type       uniform | cosine | explicit
//   coupling.g0         coupling.xi        coupling.file
//   dispersion.type     linear | explicit
//   dispersion.file
//   prep.type           symmetric | momentum | m_superposition | bell_mix | explicit
//   prep.n  prep.m  prep.cs  prep.ca  prep.amplitudes
//   grid.t_max          grid.n_steps       output.path
//
// Complex values are written `re`, `re+imj` or `re-imj`; amplitude lists are
// comma separated. Unknown keys are errors.

#include <complex>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "qreg/dynamics.hpp"
#include "qreg/model.hpp"
#include "qreg/sector.hpp"

namespace qreg {

class ConfigError : public std::runtime_error {
 public:
  ConfigError(const std::string& key, int line, const std::string& message);

  const std::string& key() const noexcept { return key_; }
  int line() const noexcept { return line_; }  // 0 when the key is absent

 private:
  std::string key_;
  int line_;
};

namespace prep {
struct Symmetric {};
struct Momentum {
  int n;
};
struct MSuperposition {
  int m;
};
struct BellMix {
  std::complex<double> c_s;
  std::complex<double> c_a;
};
struct Explicit {
  std::vector<std::complex<double>> amplitudes;
};
}  // namespace prep

using PrepSpec = std::variant<prep::Symmetric, prep::Momentum, prep::MSuperposition, prep::BellMix,
                              prep::Explicit>;

/// Spin-block initial state for a preparation; validates it against `shape`.
SpinVector resolve_preparation(const PrepSpec& spec, const RegisterShape& shape);

struct RunConfig {
  ModelParams model;
  PrepSpec prep;
  TimeGrid grid;
  std::filesystem::path output_path;
  // Matrix/vector files the model was read from, kept so the config can be
  // written back out verbatim.
  std::optional<std::filesystem::path> coupling_file;
  std::optional<std::filesystem::path> dispersion_file;
};

/// Parses and validates a configuration document. Relative `*.file` paths are
/// resolved against `base_dir`.
RunConfig parse_config(std::string_view text, const std::filesystem::path& base_dir = {});

RunConfig load_config(const std::filesystem::path& path);

/// Renders a config in the same grammar; parse_config(render_config(c))
/// reproduces `c`. Explicit couplings/dispersions without a source file are
/// rejected (std::invalid_argument).
std::string render_config(const RunConfig& config);

std::complex<double> parse_complex(std::string_view text);
std::string format_complex(std::complex<double> value);

/// 17 significant digits, enough to round-trip any double.
std::string format_double(double value);

}  // namespace qreg
