#pragma once

// Reference time evolution that never touches an eigendecomposition: dense
// Taylor series with scaling and squaring. Used to cross-check the spectral
// path in tests and in the acceptance runner.

#include <Eigen/Core>

namespace qreg::oracle {

/// exp(-i H t).
Eigen::MatrixXcd taylor_propagator(const Eigen::MatrixXcd& h, double t);

/// exp(-i H t) c0 by repeated application of exp(-i H dt), dt <= max_step.
Eigen::VectorXcd step_evolve(const Eigen::MatrixXcd& h, const Eigen::VectorXcd& c0, double t,
                             double max_step = 1.0);

/// Survival fidelity |sum_alpha conj(C_alpha(0)) C_alpha(t)|^2 over the first
/// `n_qubits` entries, evolved with taylor_propagator.
double survival_fidelity(const Eigen::MatrixXcd& h, const Eigen::VectorXcd& c0, int n_qubits,
                         double t);

/// -F''(0)/2 from Richardson-extrapolated central differences of the survival
/// fidelity (F is even in t, so F(t) = 1 - c t^2 + O(t^4)).
double short_time_curvature(const Eigen::MatrixXcd& h, const Eigen::VectorXcd& c0, int n_qubits,
                            double step = 1e-2);

}  // namespace qreg::oracle
