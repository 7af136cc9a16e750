#include "qreg/model.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace qreg {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};

std::vector<double> resolve_frequencies(const RegisterShape& shape, const Dispersion& dispersion) {
  const int nb = shape.n_modes();
  return std::visit(
      overloaded{
          [nb](const LinearDispersion&) {
            std::vector<double> omegas(static_cast<std::size_t>(nb));
            for (int n = 1; n <= nb; ++n) omegas[n - 1] = 2.0 * std::numbers::pi * n / nb;
            return omegas;
          },
          [nb](const ExplicitDispersion& d) {
            if (static_cast<int>(d.omegas.size()) != nb) {
              throw std::invalid_argument("explicit dispersion must list one frequency per mode");
            }
            for (double w : d.omegas) {
              if (!std::isfinite(w) || w <= 0.0) {
                throw std::invalid_argument("mode frequencies must be positive and finite");
              }
            }
            return d.omegas;
          },
      },
      dispersion);
}

void validate_coupling(const RegisterShape& shape, const CouplingSpec& coupling) {
  std::visit(overloaded{
                 [](const UniformCoupling& c) {
                   if (!std::isfinite(c.g0)) throw std::invalid_argument("g0 must be finite");
                 },
                 [](const CosineCoupling& c) {
                   if (!std::isfinite(c.g0)) throw std::invalid_argument("g0 must be finite");
                   if (!std::isfinite(c.xi) || c.xi <= 0.0) {
                     throw std::invalid_argument("xi must be positive and finite");
                   }
                 },
                 [&shape](const ExplicitCoupling& c) {
                   if (c.g.rows() != shape.n_modes() || c.g.cols() != shape.n_qubits()) {
                     throw std::invalid_argument("explicit coupling matrix must be N_b x N");
                   }
                   if (!c.g.allFinite()) throw std::invalid_argument("couplings must be finite");
                 },
             },
             coupling);
}

}  // namespace

ModelParams::ModelParams(RegisterShape shape, double epsilon, CouplingSpec coupling,
                         Dispersion dispersion)
    : shape_(shape),
      epsilon_(epsilon),
      coupling_(std::move(coupling)),
      dispersion_(std::move(dispersion)) {
  if (!std::isfinite(epsilon_) || epsilon_ <= 0.0) {
    throw std::invalid_argument("epsilon must be positive and finite");
  }
  validate_coupling(shape_, coupling_);
  frequencies_ = resolve_frequencies(shape_, dispersion_);
}

std::complex<double> coupling_value(const ModelParams& params, int mode, int qubit) {
  const auto& shape = params.shape();
  if (mode < 1 || mode > shape.n_modes() || qubit < 1 || qubit > shape.n_qubits()) {
    throw std::out_of_range("coupling_value: index out of range");
  }
  return std::visit(overloaded{
                        [](const UniformCoupling& c) { return std::complex<double>(c.g0); },
                        [&](const CosineCoupling& c) {
                          const double site = qubit - 1;
                          return std::complex<double>(
                              c.g0 * std::cos(params.frequency(mode) * site / c.xi));
                        },
                        [&](const ExplicitCoupling& c) { return c.g(mode - 1, qubit - 1); },
                    },
                    params.coupling());
}

HermitianMatrix HermitianMatrix::from_upper(const Eigen::MatrixXcd& upper) {
  if (upper.rows() != upper.cols() || upper.rows() == 0) {
    throw std::invalid_argument("Hermitian matrix must be square and nonempty");
  }
  const auto d = upper.rows();
  Eigen::MatrixXcd full(d, d);
  for (Eigen::Index j = 0; j < d; ++j) {
    full(j, j) = upper(j, j).real();
    for (Eigen::Index i = 0; i < j; ++i) {
      full(i, j) = upper(i, j);
      full(j, i) = std::conj(upper(i, j));
    }
  }
  return HermitianMatrix(std::move(full));
}

HermitianMatrix build_h1(const ModelParams& params) {
  const int n = params.shape().n_qubits();
  const int nb = params.shape().n_modes();
  const int d = n + nb;

  // Upper triangle only: spin rows couple to mode columns through conj(g).
  Eigen::MatrixXcd upper = Eigen::MatrixXcd::Zero(d, d);
  for (int alpha = 0; alpha < n; ++alpha) upper(alpha, alpha) = params.epsilon();
  for (int m = 0; m < nb; ++m) {
    upper(n + m, n + m) = params.frequencies()[m];
    for (int alpha = 0; alpha < n; ++alpha) {
      upper(alpha, n + m) = std::conj(coupling_value(params, m + 1, alpha + 1));
    }
  }
  return HermitianMatrix::from_upper(upper);
}

}  // namespace qreg
