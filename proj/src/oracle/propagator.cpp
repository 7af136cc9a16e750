#include "qreg/oracle/propagator.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>

namespace qreg::oracle {

Eigen::MatrixXcd taylor_propagator(const Eigen::MatrixXcd& h, double t) {
  if (h.rows() != h.cols()) throw std::invalid_argument("propagator needs a square matrix");
  const auto d = h.rows();
  const std::complex<double> minus_i(0.0, -1.0);

  // Scale so that ||A||_1 <= 1/4, then square back.
  const double norm = h.cwiseAbs().colwise().sum().maxCoeff() * std::abs(t);
  int squarings = 0;
  if (norm > 0.25) squarings = static_cast<int>(std::ceil(std::log2(norm / 0.25)));
  const Eigen::MatrixXcd a = (minus_i * t / std::ldexp(1.0, squarings)) * h;

  Eigen::MatrixXcd u = Eigen::MatrixXcd::Identity(d, d);
  Eigen::MatrixXcd term = Eigen::MatrixXcd::Identity(d, d);
  for (int k = 1; k <= 40; ++k) {
    term = (a * term) / static_cast<double>(k);
    u += term;
    if (term.cwiseAbs().maxCoeff() < 1e-18) break;
  }
  for (int s = 0; s < squarings; ++s) u = u * u;
  return u;
}

Eigen::VectorXcd step_evolve(const Eigen::MatrixXcd& h, const Eigen::VectorXcd& c0, double t,
                             double max_step) {
  if (!(max_step > 0.0)) throw std::invalid_argument("max_step must be positive");
  const auto n_steps = static_cast<long>(std::ceil(std::abs(t) / max_step));
  if (n_steps == 0) return c0;
  const Eigen::MatrixXcd u = taylor_propagator(h, t / static_cast<double>(n_steps));
  Eigen::VectorXcd c = c0;
  for (long s = 0; s < n_steps; ++s) c = u * c;
  return c;
}

double survival_fidelity(const Eigen::MatrixXcd& h, const Eigen::VectorXcd& c0, int n_qubits,
                         double t) {
  const Eigen::VectorXcd ct = taylor_propagator(h, t) * c0;
  return std::norm(c0.head(n_qubits).dot(ct.head(n_qubits)));
}

double short_time_curvature(const Eigen::MatrixXcd& h, const Eigen::VectorXcd& c0, int n_qubits,
                            double step) {
  const double f0 = survival_fidelity(h, c0, n_qubits, 0.0);
  auto coefficient = [&](double tau) {
    // (F(tau) - 2F(0) + F(-tau)) / tau^2 = F''(0) + O(tau^2)
    const double fp = survival_fidelity(h, c0, n_qubits, tau);
    const double fm = survival_fidelity(h, c0, n_qubits, -tau);
    return -(fp - 2.0 * f0 + fm) / (2.0 * tau * tau);
  };
  const double coarse = coefficient(step);
  const double fine = coefficient(0.5 * step);
  return (4.0 * fine - coarse) / 3.0;
}

}  // namespace qreg::oracle
