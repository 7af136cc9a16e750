#include <doctest.h>

#include <cmath>
#include <numbers>
#include <numeric>
#include <random>

#include <Eigen/Dense>

#include "qreg/model.hpp"

using namespace qreg;

namespace {

ModelParams jc(double eps, double omega, double g) {
  return ModelParams(RegisterShape(1, 1), eps, UniformCoupling{g}, ExplicitDispersion{{omega}});
}

bool bit_hermitian(const Eigen::MatrixXcd& m) {
  for (Eigen::Index r = 0; r < m.rows(); ++r)
    for (Eigen::Index c = 0; c < m.cols(); ++c)
      if (m(r, c) != std::conj(m(c, r))) return false;
  return true;
}

}  // namespace

TEST_CASE("Jaynes-Cummings matrix") {
  const auto h = build_h1(jc(1, 1, 0.1)).entries();
  REQUIRE(h.rows() == 2);
  CHECK(h(0, 0) == 1.0);
  CHECK(h(1, 1) == 1.0);
  CHECK(h(0, 1) == 0.1);
  CHECK(h(1, 0) == 0.1);
}

TEST_CASE("linear dispersion") {
  const ModelParams p(RegisterShape(2, 4), 1, UniformCoupling{0.01});
  REQUIRE(p.frequencies().size() == 4);
  for (int n = 1; n <= 4; ++n) CHECK(p.frequency(n) == doctest::Approx(2 * std::numbers::pi * n / 4).epsilon(1e-15));
}

TEST_CASE("uniform coupling structure") {
  const ModelParams p(RegisterShape(3, 5), 0.7, UniformCoupling{0.02});
  const auto h = build_h1(p).entries();
  CHECK((h.topLeftCorner(3, 3) - 0.7 * Eigen::MatrixXcd::Identity(3, 3)).norm() == 0.0);
  const Eigen::MatrixXcd block = h.bottomLeftCorner(5, 3);
  CHECK(Eigen::FullPivLU<Eigen::MatrixXcd>(block).rank() == 1);
  for (int n = 1; n <= 5; ++n)
    for (int a = 1; a <= 3; ++a) CHECK(coupling_value(p, n, a) == std::complex<double>(0.02));
  for (int n = 0; n < 5; ++n) {
    CHECK(h(3 + n, 3 + n).real() == p.frequency(n + 1));
    for (int m = 0; m < 5; ++m)
      if (m != n) CHECK(h(3 + n, 3 + m) == 0.0);
  }
}

TEST_CASE("explicit coupling layout") {
  Eigen::MatrixXcd g(2, 2);  // rows are modes
  g << std::complex<double>(0.1, 0.02), 0.2, 0.3, std::complex<double>(0.4, -0.05);
  const ModelParams p(RegisterShape(2, 2), 1.0, ExplicitCoupling{g}, ExplicitDispersion{{0.5, 1.5}});

  Eigen::MatrixXcd expected(4, 4);
  const auto c = [](std::complex<double> z) { return std::conj(z); };
  expected << 1.0, 0.0, c(g(0, 0)), c(g(1, 0)),
              0.0, 1.0, c(g(0, 1)), c(g(1, 1)),
              g(0, 0), g(0, 1), 0.5, 0.0,
              g(1, 0), g(1, 1), 0.0, 1.5;
  CHECK(build_h1(p).entries() == expected);
  CHECK(coupling_value(p, 2, 1) == g(1, 0));
}

TEST_CASE("explicit coupling shape is validated") {
  CHECK_THROWS_AS(ModelParams(RegisterShape(2, 3), 1.0, ExplicitCoupling{Eigen::MatrixXcd::Zero(2, 3)}),
                  std::invalid_argument);
  CHECK_THROWS_AS(ModelParams(RegisterShape(2, 3), 1.0, UniformCoupling{0.1}, ExplicitDispersion{{1, 2}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(ModelParams(RegisterShape(2, 3), 1.0, CosineCoupling{0.1, 0.0}), std::invalid_argument);
}

TEST_CASE("Hamiltonian is exactly Hermitian") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(-0.1, 0.1);
  for (int trial = 0; trial < 20; ++trial) {
    Eigen::MatrixXcd g(6, 3);
    for (Eigen::Index r = 0; r < g.rows(); ++r)
      for (Eigen::Index c = 0; c < g.cols(); ++c) g(r, c) = {u(rng), trial % 2 ? u(rng) : 0.0};
    const auto h = build_h1(ModelParams(RegisterShape(3, 6), 1.0, ExplicitCoupling{g})).entries();
    CHECK(bit_hermitian(h));
  }
  CHECK(bit_hermitian(build_h1(ModelParams(RegisterShape(3, 6), 1.0, CosineCoupling{0.01, 2.0})).entries()));
}

TEST_CASE("momentum states are decoupled under uniform coupling") {
  for (int n = 2; n <= 6; ++n) {
    const ModelParams p(RegisterShape(n, 40), 1.0, UniformCoupling{0.03});
    const auto h = build_h1(p).entries();
    for (int k = 1; k < n; ++k) {
      Eigen::VectorXcd v = Eigen::VectorXcd::Zero(n + 40);
      v.head(n) = momentum_state(n, k).amplitudes();
      CHECK((h * v - p.epsilon() * v).norm() <= 1e-12);
    }
  }
}

TEST_CASE("uniform coupling is permutation invariant") {
  const int n = 4;
  const ModelParams p(RegisterShape(n, 7), 1.0, UniformCoupling{0.05});
  const auto h = build_h1(p).entries();
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    Eigen::PermutationMatrix<Eigen::Dynamic> pm(n + 7);
    pm.setIdentity();
    for (int i = 0; i < n; ++i) pm.indices()(i) = perm[i];
    const Eigen::MatrixXcd permuted = pm * h * pm.transpose();
    REQUIRE(permuted == h);
  } while (std::next_permutation(perm.begin(), perm.end()));
}

TEST_CASE("cosine coupling") {
  using std::numbers::pi;
  // two modes so omega_1 = pi; site coordinate of qubit 2 is 1
  const ModelParams p(RegisterShape(2, 2), 1.0, CosineCoupling{0.01, 1.0});
  CHECK(coupling_value(p, 1, 1).real() == doctest::Approx(0.01));
  CHECK(coupling_value(p, 1, 2).real() == doctest::Approx(0.01 * std::cos(pi)));
  CHECK(coupling_value(p, 2, 2).real() == doctest::Approx(0.01 * std::cos(2 * pi)));

  const ModelParams wide(RegisterShape(2, 200), 1.0, CosineCoupling{0.01, 1e8});
  for (int n = 1; n <= 200; ++n)
    for (int a = 1; a <= 2; ++a) CHECK(std::abs(coupling_value(wide, n, a) - 0.01) < 1e-6);
}
