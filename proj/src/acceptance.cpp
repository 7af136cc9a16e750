#include "qreg/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <iomanip>
#include <numbers>
#include <random>
#include <sstream>

#include "qreg/analysis.hpp"
#include "qreg/dynamics.hpp"
#include "qreg/model.hpp"
#include "qreg/oracle/propagator.hpp"
#include "qreg/sector.hpp"
#include "qreg/spectral.hpp"

namespace qreg::acceptance {

namespace {

using Outcome = std::pair<bool, std::string>;

constexpr double kTMax = 2000.0;
constexpr int kSteps = 4001;

ModelParams uniform_model(int n, int nb, double g) {
  return ModelParams(RegisterShape(n, nb), 1.0, UniformCoupling{g});
}

ModelParams cosine_model(int n, int nb, double g0, double xi) {
  return ModelParams(RegisterShape(n, nb), 1.0, CosineCoupling{g0, xi});
}

std::ostringstream detail_stream() {
  std::ostringstream s;
  s << std::setprecision(4);
  return s;
}

double max_abs(const Eigen::VectorXcd& v) { return v.cwiseAbs().maxCoeff(); }

Eigen::VectorXcd random_unit(std::mt19937_64& rng, int dim) {
  std::normal_distribution<double> gauss;
  Eigen::VectorXcd v(dim);
  for (int i = 0; i < dim; ++i) v(i) = {gauss(rng), gauss(rng)};
  return v / v.norm();
}

// ---------------------------------------------------------------------------

Outcome dimension_enumeration() {
  int mismatches = 0;
  int cases = 0;
  for (int n = 1; n <= 4; ++n)
    for (int nb = 1; nb <= 4; ++nb)
      for (int i = 0; i <= 4; ++i) {
        const RegisterShape shape(n, nb);
        ++cases;
        if (enumerate_basis(shape, i).labels.size() != sector_dimension(shape, i)) ++mismatches;
      }
  int completeness_failures = 0;
  for (int n = 1; n <= 12; ++n) {
    std::uint64_t total = 0;
    for (int twice = n % 2; twice <= n; twice += 2) {
      total += su2_multiplicity(TotalSpin{twice}, n) * static_cast<std::uint64_t>(twice + 1);
    }
    if (total != (std::uint64_t{1} << n)) ++completeness_failures;
  }
  auto d = detail_stream();
  d << cases << " sectors, " << mismatches << " size mismatches; sum n(S,N)(2S+1) != 2^N for "
    << completeness_failures << " of N=1..12";
  return {mismatches == 0 && completeness_failures == 0, d.str()};
}

Outcome jaynes_cummings() {
  constexpr double g = 0.05;
  const ModelParams params(RegisterShape(1, 1), 1.0, UniformCoupling{g}, ExplicitDispersion{{1.0}});
  const auto sd = diagonalize(build_h1(params));
  const double eig_err =
      std::max(std::abs(sd.eigenvalues(0) - (1.0 - g)), std::abs(sd.eigenvalues(1) - (1.0 + g)));

  const TimeGrid grid(2.0 * std::numbers::pi / g, 100);
  const auto series = run_time_series(sd, initial_amplitudes(symmetric_state(1), params.shape()), grid);
  double rabi_err = 0.0;
  for (const auto& r : series.records) {
    const double expected = std::pow(std::cos(g * r.t), 2);
    rabi_err = std::max(rabi_err, std::abs(r.p1 - expected));
  }
  auto d = detail_stream();
  d << "max |E - (1 +- g)| = " << eig_err << " (tol 1e-12); max ||C_spin|^2 - cos^2(gt)| = "
    << rabi_err << " over 100 points (tol 1e-10)";
  return {eig_err <= 1e-12 && rabi_err <= 1e-10, d.str()};
}

Outcome decoherence_free_subspace() {
  const auto params = uniform_model(2, 200, 0.01);
  const auto series = run_time_series(params, momentum_state(2, 1), TimeGrid(kTMax, 8001));
  double f_err = 0.0;
  double s_max = 0.0;
  for (const auto& r : series.records) {
    f_err = std::max(f_err, std::abs(r.fidelity - 1.0));
    s_max = std::max(s_max, r.entropy_bits);
  }
  auto d = detail_stream();
  d << "max |F - 1| = " << f_err << ", max S = " << s_max << " over t in [0, 2000] (tol 1e-8)";
  return {f_err <= 1e-8 && s_max <= 1e-8, d.str()};
}

Outcome asymptotic_fidelity_entropy() {
  const auto params = uniform_model(4, 200, 0.01);
  const auto sd = diagonalize(build_h1(params));
  bool ok = true;
  auto d = detail_stream();
  for (int m = 1; m <= 3; ++m) {
    const double ratio = m / 4.0;
    const double f_expected = std::pow(1.0 - ratio, 2);
    const double s_expected = binary_entropy_bits(ratio);
    const auto series =
        run_time_series(sd, initial_amplitudes(m_superposition(4, m), params.shape()), TimeGrid(kTMax, kSteps));
    const bool f_ok = std::abs(series.late_fidelity - f_expected) <= 0.05;
    const bool s_ok = std::abs(series.late_entropy - s_expected) <= 0.05;
    ok = ok && f_ok && s_ok;
    d << (m > 1 ? "; " : "") << "M=" << m << ": F=" << series.late_fidelity << " vs " << f_expected
      << (f_ok ? "" : " (off)") << ", S=" << series.late_entropy << " vs " << s_expected
      << (s_ok ? "" : " (off)");
  }
  d << " (tol 0.05, window t in [1500, 2000])";
  return {ok, d.str()};
}

Outcome secular_cross_check() {
  bool ok = true;
  auto d = detail_stream();
  for (auto [n, nb] : {std::pair{2, 50}, std::pair{4, 100}}) {
    const auto params = uniform_model(n, nb, 0.01);
    const auto roots = secular_roots(params);
    const auto split = split_by_symmetry(diagonalize(build_h1(params)), n);

    double root_err = std::numeric_limits<double>::infinity();
    if (split.symmetric.size() == roots.size()) {
      root_err = 0.0;
      for (std::size_t i = 0; i < roots.size(); ++i) {
        root_err = std::max(root_err, std::abs(roots[i] - split.symmetric[i]));
      }
    }
    const bool multiplicity_ok =
        static_cast<int>(split.antisymmetric.size()) == n - 1 &&
        std::all_of(split.antisymmetric.begin(), split.antisymmetric.end(),
                    [&](double e) { return std::abs(e - params.epsilon()) <= 1e-9; });

    auto omegas = params.frequencies();
    std::sort(omegas.begin(), omegas.end());
    bool interlaced = roots.size() == omegas.size() + 1;
    for (std::size_t k = 0; interlaced && k < omegas.size(); ++k) {
      interlaced = roots[k] < omegas[k] && omegas[k] < roots[k + 1];
    }
    ok = ok && root_err <= 1e-8 && multiplicity_ok && interlaced;
    d << "(N=" << n << ", N_b=" << nb << "): max |root - E_sym| = " << root_err
      << ", eps multiplicity " << split.antisymmetric.size() << "/" << n - 1
      << (interlaced ? ", interlaced" : ", NOT interlaced") << "; ";
  }
  d << "tol 1e-8";
  return {ok, d.str()};
}

Outcome norm_unitarity() {
  std::mt19937_64 rng(20240601);
  std::uniform_int_distribution<int> qubits(1, 4);
  std::uniform_int_distribution<int> modes(1, 12);
  std::uniform_real_distribution<double> unit(0.0, 1.0);

  double norm_dev = 0.0;
  double compose_dev = 0.0;
  for (int sample = 0; sample < 1000; ++sample) {
    const RegisterShape shape(qubits(rng), modes(rng));
    Eigen::MatrixXcd g(shape.n_modes(), shape.n_qubits());
    for (Eigen::Index i = 0; i < g.size(); ++i) {
      g(i) = std::polar(0.1 * unit(rng), 2.0 * std::numbers::pi * unit(rng));
    }
    const ModelParams params(shape, 1.0, ExplicitCoupling{g});
    const auto sd = diagonalize(build_h1(params));
    const AmplitudeVector c0(random_unit(rng, shape.one_excitation_dim()), shape.n_qubits());
    for (double t : {1.0, 10.0, 100.0, 1000.0}) {
      norm_dev = std::max(norm_dev, std::abs(evolve(sd, c0, t).coefficients().norm() - 1.0));
    }
    const auto two_step = evolve(sd, evolve(sd, c0, 10.0), 100.0);
    const auto one_step = evolve(sd, c0, 110.0);
    compose_dev = std::max(compose_dev, max_abs(two_step.coefficients() - one_step.coefficients()));
  }
  auto d = detail_stream();
  d << "1000 samples: max | ||C(t)|| - 1 | = " << norm_dev << " (tol 1e-10), max |U(100)U(10)c - U(110)c| = "
    << compose_dev << " (tol 1e-9)";
  return {norm_dev <= 1e-10 && compose_dev <= 1e-9, d.str()};
}

Outcome short_time_law() {
  bool ok = true;
  auto d = detail_stream();
  for (int n : {2, 4}) {
    const auto params = uniform_model(n, 200, 0.01);
    const auto h = build_h1(params);
    const auto c0 = initial_amplitudes(symmetric_state(n), params.shape());
    const auto series = run_time_series(diagonalize(h), c0, TimeGrid(0.5, 201));
    const double fitted = short_time_coefficient(series.records, 0.5);
    const double oracle = oracle::short_time_curvature(h.entries(), c0.coefficients(), n);
    const double n_delta = n * 200 * 0.01 * 0.01;
    const double rel = std::abs(fitted - oracle) / oracle;
    ok = ok && rel <= 0.05;
    d << "N=" << n << ": fit c=" << fitted << ", oracle c=" << oracle << " (N*Delta=" << n_delta
      << ", printed N*Delta/2=" << n_delta / 2 << "), rel diff " << rel << "; ";
  }
  d << "tol 5%";
  return {ok, d.str()};
}

Outcome relaxation_scaling() {
  const TimeGrid grid(200.0, 4001);
  auto tau_for = [&](double g, const SpinVector& prep, FitWindow window) {
    return fit_relaxation_time(run_time_series(uniform_model(2, 200, g), prep, grid).records, window);
  };
  const auto slow = tau_for(0.01, symmetric_state(2), {});
  const auto fast = tau_for(0.02, symmetric_state(2), {});
  const double cs = std::sqrt(0.5);
  const auto mixed = tau_for(0.01, bell_mix(cs, cs), FitWindow{0.8, 0.98});

  auto d = detail_stream();
  const bool fits_ok = slow.status == FitStatus::ok && fast.status == FitStatus::ok &&
                       mixed.status == FitStatus::ok;
  if (!fits_ok) {
    d << "fit status: " << to_string(slow.status) << " / " << to_string(fast.status) << " / "
      << to_string(mixed.status);
    return {false, d.str()};
  }
  const double ratio = slow.tau / fast.tau;
  const double relation = mixed.tau * 0.5 / slow.tau;
  d << "tau(0.01)=" << slow.tau << ", tau(0.02)=" << fast.tau << ", ratio " << ratio
    << " (4 +- 10%); tau(c_s)|c_s|^2 / tau(1) = " << relation << " (1 +- 10%)";
  return {std::abs(ratio / 4.0 - 1.0) <= 0.1 && std::abs(relation - 1.0) <= 0.1, d.str()};
}

Outcome replica_dependent_coupling() {
  const TimeGrid grid(kTMax, kSteps);
  auto d = detail_stream();

  const auto sym = run_time_series(cosine_model(2, 200, 0.01, 1.0), symmetric_state(2), grid);
  const auto anti = run_time_series(cosine_model(2, 200, 0.01, 1.0), momentum_state(2, 1), grid);
  const bool a_ok = anti.mean_fidelity > sym.mean_fidelity;
  d << "(a) mean F_A=" << anti.mean_fidelity << " vs F_sym=" << sym.mean_fidelity;

  bool b_ok = true;
  double previous = -1.0;
  d << "; (b) late F_A at xi=1,5,10:";
  for (double xi : {1.0, 5.0, 10.0}) {
    const auto s = run_time_series(cosine_model(2, 200, 0.01, xi), momentum_state(2, 1), grid);
    double f_min = 1.0;
    for (const auto& r : s.records) f_min = std::min(f_min, r.fidelity);
    b_ok = b_ok && s.late_fidelity >= previous && f_min < 1.0 - 1e-3;
    previous = s.late_fidelity;
    d << ' ' << s.late_fidelity << " (min " << f_min << ")";
  }

  const auto limit = run_time_series(cosine_model(2, 200, 0.01, 1e8), momentum_state(2, 1), grid);
  double f_err = 0.0;
  double s_max = 0.0;
  for (const auto& r : limit.records) {
    f_err = std::max(f_err, std::abs(r.fidelity - 1.0));
    s_max = std::max(s_max, r.entropy_bits);
  }
  const bool c_ok = f_err <= 1e-6 && s_max <= 1e-6;
  d << "; (c) xi=1e8: max |F-1|=" << f_err << ", max S=" << s_max << " (tol 1e-6)";
  return {a_ok && b_ok && c_ok, d.str()};
}

Outcome brute_force_evolution() {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> coupling(-0.5, 0.5);
  const RegisterShape shape(2, 3);
  Eigen::MatrixXcd g(3, 2);
  for (Eigen::Index i = 0; i < g.size(); ++i) g(i) = coupling(rng);
  const ModelParams params(shape, 1.0, ExplicitCoupling{g});
  const auto h = build_h1(params);
  const auto sd = diagonalize(h);
  const AmplitudeVector c0(random_unit(rng, shape.one_excitation_dim()), shape.n_qubits());

  double err = 0.0;
  for (double t : {1.0, 10.0, 100.0}) {
    const Eigen::VectorXcd reference = oracle::step_evolve(h.entries(), c0.coefficients(), t, 0.5);
    err = std::max(err, max_abs(evolve(sd, c0, t).coefficients() - reference));
  }
  auto d = detail_stream();
  d << "max |C_eig - C_expm| over t in {1, 10, 100} = " << err << " (tol 1e-8)";
  return {err <= 1e-8, d.str()};
}

}  // namespace

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> all = {
      {1, "dimension/enumeration equivalence", 1.0, dimension_enumeration},
      {2, "Jaynes-Cummings limit", 1.0, jaynes_cummings},
      {3, "decoherence-free subspace", 10.0, decoherence_free_subspace},
      {4, "asymptotic fidelity/entropy", 30.0, asymptotic_fidelity_entropy},
      {5, "secular/diagonalization cross-check", 5.0, secular_cross_check},
      {6, "norm/unitarity suite", 30.0, norm_unitarity},
      {7, "short-time quadratic law", 5.0, short_time_law},
      {8, "relaxation scaling", 20.0, relaxation_scaling},
      {9, "replica-dependent coupling", 30.0, replica_dependent_coupling},
      {10, "brute-force evolution oracle", 1.0, brute_force_evolution},
  };
  return all;
}

CriterionResult run(const Criterion& criterion) {
  const auto start = std::chrono::steady_clock::now();
  Outcome outcome;
  try {
    outcome = criterion.body();
  } catch (const std::exception& ex) {
    outcome = {false, std::string("exception: ") + ex.what()};
  }
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const bool in_budget = seconds <= criterion.budget_seconds;
  if (!in_budget) outcome.second += "; over runtime budget";
  return CriterionResult{criterion.id,  criterion.title, outcome.first && in_budget,
                         outcome.second, seconds,        criterion.budget_seconds};
}

std::string format(const CriterionResult& r) {
  std::ostringstream s;
  s << (r.passed ? "[PASS]" : "[FAIL]") << " #" << r.id << ' ' << r.title << " ("
    << std::fixed << std::setprecision(2) << r.seconds << " s / " << std::setprecision(0)
    << r.budget_seconds << " s): " << r.detail;
  return s.str();
}

std::vector<CriterionResult> check_all(std::ostream& log) {
  std::vector<CriterionResult> results;
  for (const auto& c : criteria()) {
    results.push_back(run(c));
    log << format(results.back()) << '\n' << std::flush;
  }
  return results;
}

}  // namespace qreg::acceptance
