#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "qreg/scenario.hpp"

using namespace qreg;
namespace fs = std::filesystem;

namespace {

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

fs::path scratch_dir(const std::string& name) {
  const auto dir = fs::temp_directory_path() / ("qreg_test_scenario_" + name);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

RunConfig small_run(const fs::path& csv) {
  return RunConfig{ModelParams(RegisterShape(2, 40), 1.0, UniformCoupling{0.02}), prep::MSuperposition{1},
                   TimeGrid(100.0, 201), csv, std::nullopt, std::nullopt};
}

}  // namespace

TEST_CASE("CSV layout") {
  std::vector<TimeSeriesRecord> rows{{0.0, 1.0, 0.0, 0.0, 1.0, 1.0, 0.0},
                                     {0.1, 1.0 / 3, 0.5, 0.25, 0.75, -0.2, 1e-20}};
  std::ostringstream out;
  write_time_series_csv(out, rows);
  CHECK(out.str() ==
        "t,fidelity,entropy_bits,p0,p1,d_re,d_im\n"
        "0,1,0,0,1,1,0\n"
        "0.10000000000000001,0.33333333333333331,0.5,0.25,0.75,-0.20000000000000001,9.9999999999999995e-21\n");
}

TEST_CASE("scenario output is deterministic and the sidecar reproduces the run") {
  const auto dir = scratch_dir("determinism");
  const auto first = run_scenario(small_run(dir / "a.csv"));
  const auto second = run_scenario(small_run(dir / "b.csv"));
  const auto csv = slurp(first.csv);
  CHECK(csv == slurp(second.csv));
  CHECK(csv.rfind("t,fidelity,entropy_bits,p0,p1,d_re,d_im\n", 0) == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 202);
  CHECK(csv.back() == '\n');
  CHECK_FALSE(fs::exists(dir / "a.csv.tmp"));

  REQUIRE(first.metadata == dir / "a.csv.meta");
  const auto meta = slurp(first.metadata);
  CHECK(meta.find("# late_window_fidelity = " + format_double(first.series.late_fidelity)) != std::string::npos);
  CHECK(meta.find("# late_window_entropy_bits = ") != std::string::npos);

  auto replay = parse_config(meta);
  replay.output_path = dir / "c.csv";
  run_scenario(replay);
  CHECK(slurp(dir / "c.csv") == csv);
}

TEST_CASE("presets") {
  CHECK(preset_names().size() == 5);
  const fs::path out = "figs";
  auto fig2 = preset_configs("fig2", out);
  REQUIRE(fig2.size() == 3);
  CHECK(fig2[2].output_path == out / "fig2_M3.csv");
  CHECK(fig2[0].model.shape() == RegisterShape(4, 200));
  CHECK(std::get<prep::MSuperposition>(fig2[1].prep).m == 2);
  CHECK(fig2[0].grid.t_max() == 2000.0);

  const auto fig4 = preset_configs("fig4", out);
  REQUIRE(fig4.size() == 3);
  CHECK(std::get<CosineCoupling>(fig4[0].model.coupling()).xi == 10.0);
  CHECK(std::holds_alternative<prep::Momentum>(fig4[2].prep));

  const auto fig5 = preset_configs("fig5", out);
  REQUIRE(fig5.size() == 2);
  CHECK(fig5[0].output_path == out / "fig5_sym.csv");
  CHECK(preset_configs("fig1", out).size() == 3);
  CHECK(preset_configs("fig3", out).size() == 3);
  CHECK_THROWS_AS(preset_configs("fig6", out), std::invalid_argument);

  for (auto name : preset_names())
    for (const auto& cfg : preset_configs(name, out)) CHECK_NOTHROW(parse_config(render_config(cfg)));
}

TEST_CASE("spectrum files") {
  const auto dir = scratch_dir("spectrum");
  const ModelParams p(RegisterShape(2, 50), 1.0, UniformCoupling{0.01});
  const auto s = compute_spectrum(p);
  REQUIRE(s.secular_roots);
  CHECK(s.eigenvalues.size() == 52);
  CHECK(s.secular_roots->size() == 51);
  write_spectrum(s, dir);

  std::ifstream in(dir / "secular_roots.csv");
  std::vector<double> values;
  for (std::string line; std::getline(in, line);) values.push_back(std::stod(line));
  CHECK(values == *s.secular_roots);
  CHECK(std::is_sorted(values.begin(), values.end()));

  const auto cosine = compute_spectrum(ModelParams(RegisterShape(2, 5), 1.0, CosineCoupling{0.01, 1.0}));
  CHECK_FALSE(cosine.secular_roots);
}
