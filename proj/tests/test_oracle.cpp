#include <doctest.h>

#include <cmath>
#include <complex>

#include "qreg/oracle/propagator.hpp"

using namespace qreg::oracle;

TEST_CASE("propagator of a diagonal matrix") {
  Eigen::MatrixXcd h = Eigen::MatrixXcd::Zero(3, 3);
  h.diagonal() << 0.5, -2.0, 7.0;
  const auto u = taylor_propagator(h, 3.0);
  const std::complex<double> i(0, 1);
  for (int k = 0; k < 3; ++k) CHECK(std::abs(u(k, k) - std::exp(-i * h(k, k) * 3.0)) < 1e-13);
  CHECK(std::abs(u(0, 1)) < 1e-15);
}

TEST_CASE("propagator of a Pauli-x rotation") {
  Eigen::MatrixXcd h(2, 2);
  h << 0, 0.3, 0.3, 0;
  const double t = 4.0;
  const auto u = taylor_propagator(h, t);
  const std::complex<double> i(0, 1);
  CHECK(std::abs(u(0, 0) - std::cos(0.3 * t)) < 1e-13);
  CHECK(std::abs(u(0, 1) + i * std::sin(0.3 * t)) < 1e-13);
}

TEST_CASE("stepping agrees with one long propagator") {
  Eigen::MatrixXcd h(3, 3);
  h << 1, 0.2, 0, 0.2, 0.5, std::complex<double>(0, 0.1), 0, std::complex<double>(0, -0.1), 2;
  Eigen::VectorXcd c0(3);
  c0 << 1, 0, 0;
  const Eigen::VectorXcd a = step_evolve(h, c0, 37.0, 0.5);
  const Eigen::VectorXcd b = taylor_propagator(h, 37.0) * c0;
  CHECK((a - b).norm() < 1e-11);
  CHECK(std::abs(a.norm() - 1.0) < 1e-12);
}

TEST_CASE("short-time curvature of a Rabi problem") {
  // F(t) = cos^2(g t) = 1 - g^2 t^2 + ..., so the coefficient is g^2
  Eigen::MatrixXcd h(2, 2);
  h << 1, 0.05, 0.05, 1;
  Eigen::VectorXcd c0(2);
  c0 << 1, 0;
  CHECK(std::abs(short_time_curvature(h, c0, 1) - 0.0025) < 1e-9);
  CHECK(std::abs(survival_fidelity(h, c0, 1, 10.0) - std::pow(std::cos(0.5), 2)) < 1e-12);
}
