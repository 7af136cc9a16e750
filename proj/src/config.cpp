#include "qreg/config.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace qreg {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};

constexpr std::array kKnownKeys = {
    "register.n_qubits", "register.n_modes", "model.epsilon",  "coupling.type",
    "coupling.g0",       "coupling.xi",      "coupling.file",  "dispersion.type",
    "dispersion.file",   "prep.type",        "prep.m",         "prep.n",
    "prep.cs",           "prep.ca",          "prep.amplitudes", "grid.t_max",
    "grid.n_steps",      "output.path",
};

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

struct Entry {
  std::string value;
  int line;
};

class Document {
 public:
  explicit Document(std::string_view text) {
    int line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
      auto eol = text.find('\n', pos);
      if (eol == std::string_view::npos) eol = text.size();
      std::string_view line = text.substr(pos, eol - pos);
      pos = eol + 1;
      ++line_no;

      if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
      line = trim(line);
      if (line.empty()) continue;

      const auto eq = line.find('=');
      if (eq == std::string_view::npos) {
        throw ConfigError(std::string(line), line_no, "expected `key = value`");
      }
      const std::string key(trim(line.substr(0, eq)));
      const std::string value(trim(line.substr(eq + 1)));
      if (key.empty()) throw ConfigError(key, line_no, "empty key");
      if (std::find(kKnownKeys.begin(), kKnownKeys.end(), key) == kKnownKeys.end()) {
        throw ConfigError(key, line_no, "unknown key");
      }
      if (value.empty()) throw ConfigError(key, line_no, "empty value");
      if (auto [it, inserted] = entries_.emplace(key, Entry{value, line_no}); !inserted) {
        throw ConfigError(key, line_no,
                          "duplicate key (first set on line " + std::to_string(it->second.line) + ")");
      }
    }
  }

  bool has(const std::string& key) const { return entries_.count(key) != 0; }

  const Entry& require(const std::string& key) const {
    auto it = entries_.find(key);
    if (it == entries_.end()) throw ConfigError(key, 0, "missing required key");
    used_.insert(key);
    return it->second;
  }

  const Entry* find(const std::string& key) const {
    auto it = entries_.find(key);
    if (it == entries_.end()) return nullptr;
    used_.insert(key);
    return &it->second;
  }

  /// Keys present in the document but not consumed by the active variants.
  void reject_unused() const {
    for (const auto& [key, entry] : entries_) {
      if (used_.count(key) != 0) continue;
      const auto section = key.substr(0, key.find('.'));
      std::string message = "unknown key";
      if (auto it = entries_.find(section + ".type"); it != entries_.end()) {
        message += " for " + it->second.value + " " + section;
      }
      throw ConfigError(key, entry.line, message);
    }
  }

 private:
  std::map<std::string, Entry> entries_;
  mutable std::set<std::string> used_;
};

double to_double(const std::string& key, const Entry& e) {
  double value = 0.0;
  const char* first = e.value.data();
  const char* last = first + e.value.size();
  if (*first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last || !std::isfinite(value)) {
    throw ConfigError(key, e.line, "expected a finite number, got `" + e.value + "`");
  }
  return value;
}

int to_int(const std::string& key, const Entry& e) {
  int value = 0;
  const char* first = e.value.data();
  const char* last = first + e.value.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last) {
    throw ConfigError(key, e.line, "expected an integer, got `" + e.value + "`");
  }
  return value;
}

int to_int_at_least(const std::string& key, const Entry& e, int lowest) {
  const int value = to_int(key, e);
  if (value < lowest) {
    throw ConfigError(key, e.line, "must be at least " + std::to_string(lowest) + ", got " + e.value);
  }
  return value;
}

double to_positive(const std::string& key, const Entry& e) {
  const double value = to_double(key, e);
  if (!(value > 0.0)) throw ConfigError(key, e.line, "must be positive, got " + e.value);
  return value;
}

std::complex<double> to_complex(const std::string& key, const Entry& e) {
  try {
    return parse_complex(e.value);
  } catch (const std::invalid_argument& ex) {
    throw ConfigError(key, e.line, ex.what());
  }
}

std::filesystem::path resolve(const std::filesystem::path& base_dir, const std::string& value) {
  std::filesystem::path p(value);
  if (p.is_relative() && !base_dir.empty()) p = base_dir / p;
  return p.lexically_normal();
}

std::vector<double> read_numbers(const std::string& key, const Entry& e,
                                 const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError(key, e.line, "cannot open `" + path.string() + "`");
  std::vector<double> values;
  std::string token;
  while (in >> token) {
    try {
      values.push_back(to_double(key, Entry{token, e.line}));
    } catch (const ConfigError&) {
      throw ConfigError(key, e.line, "bad number `" + token + "` in `" + path.string() + "`");
    }
  }
  return values;
}

// Wraps std::invalid_argument from a domain constructor with the key that caused it.
template <class F>
auto with_key(const std::string& key, int line, F&& f) {
  try {
    return f();
  } catch (const std::invalid_argument& ex) {
    throw ConfigError(key, line, ex.what());
  }
}

}  // namespace

ConfigError::ConfigError(const std::string& key, int line, const std::string& message)
    : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + key + ": " + message
                                  : key + ": " + message),
      key_(key),
      line_(line) {}

std::string format_double(double value) {
  std::array<char, 40> buf{};
  std::snprintf(buf.data(), buf.size(), "%.17g", value);
  return buf.data();
}

std::string format_complex(std::complex<double> value) {
  if (value.imag() == 0.0) return format_double(value.real());
  std::string out = format_double(value.real());
  const std::string im = format_double(value.imag());
  if (im.front() != '-') out += '+';
  return out + im + 'j';
}

std::complex<double> parse_complex(std::string_view text) {
  const std::string_view s = trim(text);
  if (s.empty()) throw std::invalid_argument("empty complex number");
  auto number = [&](std::string_view part, bool imaginary) {
    if (imaginary && (part == "+" || part.empty())) return 1.0;
    if (imaginary && part == "-") return -1.0;
    if (!part.empty() && part.front() == '+') part.remove_prefix(1);
    double v = 0.0;
    auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), v);
    if (ec != std::errc() || ptr != part.data() + part.size() || !std::isfinite(v)) {
      throw std::invalid_argument("malformed complex number `" + std::string(s) + "`");
    }
    return v;
  };
  if (s.back() != 'j') return {number(s, false), 0.0};

  const std::string_view body = s.substr(0, s.size() - 1);
  // split at the last sign that does not belong to an exponent
  std::size_t split = std::string_view::npos;
  for (std::size_t i = body.size(); i-- > 1;) {
    if ((body[i] == '+' || body[i] == '-') && body[i - 1] != 'e' && body[i - 1] != 'E') {
      split = i;
      break;
    }
  }
  if (split == std::string_view::npos) return {0.0, number(body, true)};
  return {number(body.substr(0, split), false), number(body.substr(split), true)};
}

SpinVector resolve_preparation(const PrepSpec& spec, const RegisterShape& shape) {
  const int n = shape.n_qubits();
  return std::visit(
      overloaded{
          [n](const prep::Symmetric&) { return symmetric_state(n); },
          [n](const prep::Momentum& p) { return momentum_state(n, p.n); },
          [n](const prep::MSuperposition& p) { return m_superposition(n, p.m); },
          [n](const prep::BellMix& p) {
            if (n != 2) throw std::invalid_argument("bell_mix requires exactly two qubits");
            return bell_mix(p.c_s, p.c_a);
          },
          [n](const prep::Explicit& p) {
            if (static_cast<int>(p.amplitudes.size()) != n) {
              throw std::invalid_argument("explicit amplitudes must list one value per qubit");
            }
            Eigen::VectorXcd amps(n);
            for (int i = 0; i < n; ++i) amps(i) = p.amplitudes[i];
            if (std::abs(amps.norm() - 1.0) > 1e-9) {
              throw std::invalid_argument("explicit amplitudes must have unit norm");
            }
            return SpinVector::normalized(std::move(amps));
          },
      },
      spec);
}

RunConfig parse_config(std::string_view text, const std::filesystem::path& base_dir) {
  const Document doc(text);

  const auto& nq = doc.require("register.n_qubits");
  const auto& nm = doc.require("register.n_modes");
  const RegisterShape shape(to_int_at_least("register.n_qubits", nq, 1),
                            to_int_at_least("register.n_modes", nm, 1));

  double epsilon = 1.0;
  int epsilon_line = 0;
  if (const auto* e = doc.find("model.epsilon")) {
    epsilon = to_double("model.epsilon", *e);
    epsilon_line = e->line;
  }

  std::optional<std::filesystem::path> dispersion_file;
  Dispersion dispersion = LinearDispersion{};
  int dispersion_line = 0;
  if (const auto* dt = doc.find("dispersion.type")) {
    dispersion_line = dt->line;
    if (dt->value == "explicit") {
      const auto& f = doc.require("dispersion.file");
      dispersion_file = resolve(base_dir, f.value);
      auto omegas = read_numbers("dispersion.file", f, *dispersion_file);
      if (static_cast<int>(omegas.size()) != shape.n_modes()) {
        throw ConfigError("dispersion.file", f.line,
                          "expected " + std::to_string(shape.n_modes()) + " frequencies, found " +
                              std::to_string(omegas.size()));
      }
      dispersion = ExplicitDispersion{std::move(omegas)};
    } else if (dt->value != "linear") {
      throw ConfigError("dispersion.type", dt->line, "expected linear or explicit");
    }
  }

  std::optional<std::filesystem::path> coupling_file;
  CouplingSpec coupling = UniformCoupling{0.0};
  const auto& ct = doc.require("coupling.type");
  if (ct.value == "uniform") {
    coupling = UniformCoupling{to_double("coupling.g0", doc.require("coupling.g0"))};
  } else if (ct.value == "cosine") {
    coupling = CosineCoupling{to_double("coupling.g0", doc.require("coupling.g0")),
                              to_positive("coupling.xi", doc.require("coupling.xi"))};
  } else if (ct.value == "explicit") {
    const auto& f = doc.require("coupling.file");
    coupling_file = resolve(base_dir, f.value);
    const auto values = read_numbers("coupling.file", f, *coupling_file);
    const auto rows = static_cast<std::size_t>(shape.n_modes());
    const auto cols = static_cast<std::size_t>(shape.n_qubits());
    if (values.size() != rows * cols) {
      throw ConfigError("coupling.file", f.line,
                        "expected an N_b x N = " + std::to_string(rows) + " x " + std::to_string(cols) +
                            " matrix, found " + std::to_string(values.size()) + " values");
    }
    Eigen::MatrixXcd g(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
      for (std::size_t c = 0; c < cols; ++c) g(r, c) = values[r * cols + c];
    coupling = ExplicitCoupling{std::move(g)};
  } else {
    throw ConfigError("coupling.type", ct.line, "expected uniform, cosine or explicit");
  }

  const int model_line = epsilon_line > 0 ? epsilon_line : (dispersion_line > 0 ? dispersion_line : ct.line);
  ModelParams model = with_key("model", model_line, [&] {
    return ModelParams(shape, epsilon, std::move(coupling), std::move(dispersion));
  });

  PrepSpec prep_spec = prep::Symmetric{};
  const auto& pt = doc.require("prep.type");
  if (pt.value == "symmetric") {
    prep_spec = prep::Symmetric{};
  } else if (pt.value == "momentum") {
    prep_spec = prep::Momentum{to_int("prep.n", doc.require("prep.n"))};
  } else if (pt.value == "m_superposition") {
    prep_spec = prep::MSuperposition{to_int("prep.m", doc.require("prep.m"))};
  } else if (pt.value == "bell_mix") {
    prep_spec = prep::BellMix{to_complex("prep.cs", doc.require("prep.cs")),
                              to_complex("prep.ca", doc.require("prep.ca"))};
  } else if (pt.value == "explicit") {
    const auto& a = doc.require("prep.amplitudes");
    prep::Explicit ex;
    std::string_view rest = a.value;
    while (true) {
      const auto comma = rest.find(',');
      ex.amplitudes.push_back(to_complex("prep.amplitudes", Entry{std::string(trim(rest.substr(0, comma))), a.line}));
      if (comma == std::string_view::npos) break;
      rest.remove_prefix(comma + 1);
    }
    prep_spec = std::move(ex);
  } else {
    throw ConfigError("prep.type", pt.line,
                      "expected symmetric, momentum, m_superposition, bell_mix or explicit");
  }
  with_key("prep.type", pt.line, [&] { return resolve_preparation(prep_spec, shape); });

  const auto& tm = doc.require("grid.t_max");
  const auto& ns = doc.require("grid.n_steps");
  const TimeGrid grid(to_positive("grid.t_max", tm), to_int_at_least("grid.n_steps", ns, 2));

  std::filesystem::path output = "timeseries.csv";
  if (const auto* o = doc.find("output.path")) output = resolve(base_dir, o->value);

  doc.reject_unused();
  return RunConfig{std::move(model), std::move(prep_spec), grid, std::move(output),
                   std::move(coupling_file), std::move(dispersion_file)};
}

RunConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError(path.string(), 0, "cannot open config file");
  std::ostringstream text;
  text << in.rdbuf();
  return parse_config(text.str(), path.parent_path());
}

std::string render_config(const RunConfig& config) {
  std::ostringstream out;
  const auto& m = config.model;
  out << "register.n_qubits = " << m.shape().n_qubits() << '\n'
      << "register.n_modes = " << m.shape().n_modes() << '\n'
      << "model.epsilon = " << format_double(m.epsilon()) << '\n';

  std::visit(overloaded{
                 [&](const UniformCoupling& c) {
                   out << "coupling.type = uniform\ncoupling.g0 = " << format_double(c.g0) << '\n';
                 },
                 [&](const CosineCoupling& c) {
                   out << "coupling.type = cosine\ncoupling.g0 = " << format_double(c.g0)
                       << "\ncoupling.xi = " << format_double(c.xi) << '\n';
                 },
                 [&](const ExplicitCoupling&) {
                   if (!config.coupling_file) {
                     throw std::invalid_argument("explicit coupling has no source file to echo");
                   }
                   out << "coupling.type = explicit\ncoupling.file = "
                       << std::filesystem::absolute(*config.coupling_file).string() << '\n';
                 },
             },
             m.coupling());

  std::visit(overloaded{
                 [&](const LinearDispersion&) { out << "dispersion.type = linear\n"; },
                 [&](const ExplicitDispersion&) {
                   if (!config.dispersion_file) {
                     throw std::invalid_argument("explicit dispersion has no source file to echo");
                   }
                   out << "dispersion.type = explicit\ndispersion.file = "
                       << std::filesystem::absolute(*config.dispersion_file).string() << '\n';
                 },
             },
             m.dispersion());

  std::visit(overloaded{
                 [&](const prep::Symmetric&) { out << "prep.type = symmetric\n"; },
                 [&](const prep::Momentum& p) { out << "prep.type = momentum\nprep.n = " << p.n << '\n'; },
                 [&](const prep::MSuperposition& p) {
                   out << "prep.type = m_superposition\nprep.m = " << p.m << '\n';
                 },
                 [&](const prep::BellMix& p) {
                   out << "prep.type = bell_mix\nprep.cs = " << format_complex(p.c_s)
                       << "\nprep.ca = " << format_complex(p.c_a) << '\n';
                 },
                 [&](const prep::Explicit& p) {
                   out << "prep.type = explicit\nprep.amplitudes = ";
                   for (std::size_t i = 0; i < p.amplitudes.size(); ++i) {
                     out << (i ? ", " : "") << format_complex(p.amplitudes[i]);
                   }
                   out << '\n';
                 },
             },
             config.prep);

  out << "grid.t_max = " << format_double(config.grid.t_max()) << '\n'
      << "grid.n_steps = " << config.grid.n_steps() << '\n'
      << "output.path = " << std::filesystem::absolute(config.output_path).string() << '\n';
  return out.str();
}

}  // namespace qreg
