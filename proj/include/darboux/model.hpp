#pragma once

#include <cmath>
#include <stdexcept>
#include <vector>

namespace darboux {

/// Physical parameters of one oscillator instance. lambda = 0 is the flat
/// harmonic oscillator; lambda > 0 deforms it and bounds the spectrum by
/// omega^2 / (2 lambda).
struct ModelParams {
  double lambda = 0.0;
  double omega = 1.0;
  double hbar = 1.0;
  int dim = 1;

  void validate() const {
    if (!(lambda >= 0.0)) throw std::domain_error("ModelParams: lambda must be >= 0");
    if (!(omega > 0.0)) throw std::domain_error("ModelParams: omega must be > 0");
    if (!(hbar > 0.0)) throw std::domain_error("ModelParams: hbar must be > 0");
    if (dim < 1) throw std::domain_error("ModelParams: dim must be >= 1");
  }
};

/// Bound-state labels: radial n, angular l and the full non-increasing
/// mu-chain mu_1 = l >= mu_2 >= ... >= mu_{N-1} = |m|.
struct QuantumNumbers {
  int n = 0;
  int l = 0;
  std::vector<int> mu_chain;  // empty for N = 1

  void validate(int dim) const {
    if (n < 0) throw std::domain_error("QuantumNumbers: n must be >= 0");
    if (dim == 1) {
      if (l != 0 || !mu_chain.empty())
        throw std::domain_error("QuantumNumbers: 1D states carry only n");
      return;
    }
    if (l < 0) throw std::domain_error("QuantumNumbers: l must be >= 0");
    if (mu_chain.size() != static_cast<size_t>(dim - 1))
      throw std::domain_error("QuantumNumbers: mu_chain must have dim-1 entries");
    if (mu_chain.front() != l)
      throw std::domain_error("QuantumNumbers: mu_1 must equal l");
    for (size_t i = 0; i < mu_chain.size(); ++i) {
      if (mu_chain[i] < 0)
        throw std::domain_error("QuantumNumbers: mu entries must be >= 0");
      if (i > 0 && mu_chain[i] > mu_chain[i - 1])
        throw std::domain_error("QuantumNumbers: mu_chain must be non-increasing");
    }
  }

  static QuantumNumbers d1(int n) { return {n, 0, {}}; }
  static QuantumNumbers d3(int n, int l, int m) {
    return {n, l, {l, std::abs(m)}};
  }
};

/// nu = n + N/2 for N = 1, nu = 2n + l + N/2 otherwise; energies depend on
/// the quantum numbers only through this combination.
inline double principal_nu(const ModelParams& params, const QuantumNumbers& q) {
  params.validate();
  q.validate(params.dim);
  if (params.dim == 1) return q.n + 0.5;
  return 2.0 * q.n + q.l + 0.5 * params.dim;
}

/// Bound-state energy. Evaluated in the cancellation-free form
/// E = hbar nu omega^2 / (sqrt(hbar^2 lambda^2 nu^2 + omega^2) + hbar lambda nu).
inline double energy(const ModelParams& params, const QuantumNumbers& q) {
  const double nu = principal_nu(params, q);
  const double a = params.hbar * params.lambda * nu;
  const double root = std::hypot(a, params.omega);
  return params.hbar * nu * params.omega * params.omega / (root + a);
}

/// Energy-dependent frequency Omega = sqrt(omega^2 - 2 lambda E), computed
/// through the identity Omega = omega^2 / (sqrt(hbar^2 lambda^2 nu^2 + omega^2)
/// + hbar lambda nu) which avoids the subtraction.
inline double frequency(const ModelParams& params, const QuantumNumbers& q) {
  const double nu = principal_nu(params, q);
  const double a = params.hbar * params.lambda * nu;
  const double root = std::hypot(a, params.omega);
  return params.omega * params.omega / (root + a);
}

/// U(r) = omega^2 r^2 / (2 (1 + lambda r^2)); saturates at omega^2/(2 lambda).
inline double potential(const ModelParams& params, double r) {
  params.validate();
  if (!(r >= 0.0)) throw std::domain_error("potential: requires r >= 0");
  const double r2 = r * r;
  return 0.5 * params.omega * params.omega * r2 / (1.0 + params.lambda * r2);
}

/// U_eff(r) = L^2 / (2 r^2 (1 + lambda r^2)) + U(r).
inline double effective_potential(const ModelParams& params, double L2, double r) {
  params.validate();
  if (!(L2 >= 0.0)) throw std::domain_error("effective_potential: requires L2 >= 0");
  if (!(r > 0.0) && L2 > 0.0)
    throw std::domain_error("effective_potential: diverges at r = 0 for L2 > 0");
  const double r2 = r * r;
  const double conf = 1.0 + params.lambda * r2;
  const double centrifugal = (L2 > 0.0) ? 0.5 * L2 / (r2 * conf) : 0.0;
  return centrifugal + 0.5 * params.omega * params.omega * r2 / conf;
}

/// Scalar curvature of the underlying metric; non-positive, minimal at the
/// origin where R(0) = -2 lambda N (N-1), vanishing as r -> infinity.
inline double scalar_curvature(const ModelParams& params, double r) {
  params.validate();
  if (!(r >= 0.0)) throw std::domain_error("scalar_curvature: requires r >= 0");
  const int N = params.dim;
  if (N == 1) return 0.0;
  const double lr2 = params.lambda * r * r;
  const double conf = 1.0 + lr2;
  return -params.lambda * (N - 1) * (2.0 * N + 3.0 * (N - 2) * lr2) /
         (conf * conf * conf);
}

}  // namespace darboux
