#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "qreg/spectral.hpp"

using namespace qreg;

namespace {

HermitianMatrix from_rows(const Eigen::MatrixXcd& m) { return HermitianMatrix::from_upper(m); }

void check_invariants(const HermitianMatrix& h, const SpectralDecomposition& sd) {
  const auto& a = h.entries();
  const double scale = std::max(1.0, a.norm());
  for (int i = 0; i < sd.dim(); ++i) {
    const Eigen::VectorXcd v = sd.eigenvectors.col(i);
    CHECK((a * v - sd.eigenvalues(i) * v).norm() <= 1e-10 * scale);
    if (i > 0) CHECK(sd.eigenvalues(i - 1) <= sd.eigenvalues(i));
  }
  const Eigen::MatrixXcd gram = sd.eigenvectors.adjoint() * sd.eigenvectors;
  CHECK((gram - Eigen::MatrixXcd::Identity(sd.dim(), sd.dim())).cwiseAbs().maxCoeff() <= 1e-10);
}

}  // namespace

TEST_CASE("identity") {
  const auto h = from_rows(Eigen::MatrixXcd::Identity(5, 5));
  const auto sd = diagonalize(h);
  for (int i = 0; i < 5; ++i) CHECK(std::abs(sd.eigenvalues(i) - 1.0) < 1e-15);
  check_invariants(h, sd);
}

TEST_CASE("resonant and detuned two-level blocks") {
  Eigen::MatrixXcd m(2, 2);
  m << 1, 0.1, 0.1, 1;
  auto sd = diagonalize(from_rows(m));
  CHECK(std::abs(sd.eigenvalues(0) - 0.9) < 1e-14);
  CHECK(std::abs(sd.eigenvalues(1) - 1.1) < 1e-14);

  const double w = 1.5, g = 0.05;
  m << 1, g, g, w;
  sd = diagonalize(from_rows(m));
  const double mid = (1 + w) / 2, half = std::sqrt((1 - w) * (1 - w) / 4 + g * g);
  CHECK(std::abs(sd.eigenvalues(0) - (mid - half)) < 1e-12);
  CHECK(std::abs(sd.eigenvalues(1) - (mid + half)) < 1e-12);
}

TEST_CASE("eigensystem invariants, trace and determinism") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(-0.1, 0.1);
  for (int trial = 0; trial < 10; ++trial) {
    const int n = 1 + trial % 4, nb = 5 + 7 * trial;
    Eigen::MatrixXcd g(nb, n);
    for (Eigen::Index r = 0; r < nb; ++r)
      for (Eigen::Index c = 0; c < n; ++c) g(r, c) = {u(rng), u(rng)};
    const ModelParams p(RegisterShape(n, nb), 1.0, ExplicitCoupling{g});
    const auto h = build_h1(p);
    const auto sd = diagonalize(h);
    check_invariants(h, sd);

    const double expected = n * p.epsilon() +
                            std::accumulate(p.frequencies().begin(), p.frequencies().end(), 0.0);
    CHECK(std::abs(sd.eigenvalues.sum() - expected) <= 1e-9 * std::abs(expected));

    const auto again = diagonalize(h);
    CHECK(std::equal(sd.eigenvalues.begin(), sd.eigenvalues.end(), again.eigenvalues.begin()));
  }
}

TEST_CASE("secular roots of the resonant Jaynes-Cummings model") {
  const ModelParams p(RegisterShape(1, 1), 1.0, UniformCoupling{0.1}, ExplicitDispersion{{1.0}});
  const auto r = secular_roots(p);
  REQUIRE(r.size() == 2);
  CHECK(std::abs(r[0] - 0.9) < 1e-12);
  CHECK(std::abs(r[1] - 1.1) < 1e-12);
}

TEST_CASE("N qubits behave as one with coupling sqrt(N) g") {
  const auto four = secular_roots(ModelParams(RegisterShape(4, 30), 1.0, UniformCoupling{0.01}));
  const auto one = secular_roots(ModelParams(RegisterShape(1, 30), 1.0, UniformCoupling{0.02}));
  REQUIRE(four.size() == one.size());
  for (std::size_t i = 0; i < one.size(); ++i) CHECK(std::abs(four[i] - one[i]) <= 1e-13);
}

TEST_CASE("secular roots match the symmetric-sector eigenvalues") {
  for (auto [n, nb, g] : {std::tuple{2, 3, 0.05}, {2, 50, 0.01}, {3, 20, 0.04}}) {
    const ModelParams p(RegisterShape(n, nb), 1.0, UniformCoupling{g});
    const auto roots = secular_roots(p);
    REQUIRE(roots.size() == static_cast<std::size_t>(nb + 1));
    const auto split = split_by_symmetry(diagonalize(build_h1(p)), n);
    REQUIRE(split.symmetric.size() == roots.size());
    REQUIRE(split.antisymmetric.size() == static_cast<std::size_t>(n - 1));
    for (std::size_t i = 0; i < roots.size(); ++i) CHECK(std::abs(roots[i] - split.symmetric[i]) < 1e-8);
    for (double e : split.antisymmetric) CHECK(std::abs(e - 1.0) < 1e-12);

    // strict interlacing with the poles
    CHECK(roots.front() < p.frequency(1));
    for (int k = 1; k < nb; ++k) {
      CHECK(p.frequency(k) < roots[k]);
      CHECK(roots[k] < p.frequency(k + 1));
    }
    CHECK(roots.back() > p.frequency(nb));
  }
}

TEST_CASE("secular equation derivative is positive") {
  const SecularEquation eq(ModelParams(RegisterShape(2, 10), 1.0, UniformCoupling{0.05}));
  for (double e : {-3.0, 0.1, 0.9, 2.0, 7.0}) CHECK(eq.derivative(e) > 0);
  const double e = 1.234, h = 1e-6;
  CHECK(std::abs((eq(e + h) - eq(e - h)) / (2 * h) - eq.derivative(e)) < 1e-5 * eq.derivative(e));
}

TEST_CASE("degenerate and uncoupled modes") {
  SUBCASE("degenerate frequencies merge into one pole") {
    const ModelParams p(RegisterShape(2, 4), 1.0, UniformCoupling{0.05},
                        ExplicitDispersion{{0.5, 1.2, 1.2, 2.0}});
    const SecularEquation eq(p);
    CHECK(eq.poles().size() == 3);
    const auto roots = eq.roots();
    REQUIRE(roots.size() == 5);
    const auto split = split_by_symmetry(diagonalize(build_h1(p)), 2);
    REQUIRE(split.symmetric.size() == 5);
    for (std::size_t i = 0; i < roots.size(); ++i) CHECK(std::abs(roots[i] - split.symmetric[i]) < 1e-8);
    CHECK(std::count_if(roots.begin(), roots.end(), [](double r) { return r == 1.2; }) == 1);
  }
  SUBCASE("zero coupling leaves the mode frequency as a root") {
    const ModelParams p(RegisterShape(1, 3), 1.0, UniformCoupling{0.0});
    const auto roots = secular_roots(p);
    REQUIRE(roots.size() == 4);
    std::vector<double> expected{1.0, p.frequency(1), p.frequency(2), p.frequency(3)};
    std::sort(expected.begin(), expected.end());
    for (std::size_t i = 0; i < 4; ++i) CHECK(std::abs(roots[i] - expected[i]) < 1e-12);
  }
}

TEST_CASE("secular equation needs uniform coupling") {
  CHECK_THROWS_AS(SecularEquation(ModelParams(RegisterShape(2, 5), 1.0, CosineCoupling{0.01, 1.0})),
                  std::invalid_argument);
}
