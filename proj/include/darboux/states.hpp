#pragma once

#include <cmath>
#include <stdexcept>
#include <vector>

#include "darboux/model.hpp"
#include "darboux/specfun.hpp"

namespace darboux {

/// 1D eigenstate: a Gaussian-times-Hermite profile at the energy-dependent
/// frequency, carrying the extra sqrt(1 + lambda x^2) conformal factor.
class State1D {
 public:
  State1D(const ModelParams& params, int n)
      : params_(params), n_(n) {
    if (params.dim != 1) throw std::domain_error("State1D: requires dim = 1");
    const QuantumNumbers q = QuantumNumbers::d1(n);
    omega_n_ = frequency(params, q);
    const double beta = params.lambda / omega_n_;
    // norm^2 = sqrt(Omega/pi) / (2^n n!) / (1 + (n + 1/2) beta)
    log_norm_sq_ = 0.5 * std::log(omega_n_ / M_PI) - n * std::log(2.0) -
                   ln_gamma(n + 1.0) - std::log1p((n + 0.5) * beta);
  }

  const ModelParams& params() const { return params_; }
  int n() const { return n_; }
  double omega_n() const { return omega_n_; }
  double log_norm_sq() const { return log_norm_sq_; }
  double norm() const { return std::exp(0.5 * log_norm_sq_); }

  SignedLog psi_log(double x) const {
    const double z = std::sqrt(omega_n_) * x;
    SignedLog h = eval_poly_log_scaled(PolyFamily::hermite(n_), z);
    if (h.sign == 0) return h;
    h.log_abs += 0.5 * log_norm_sq_ +
                 0.5 * std::log1p(params_.lambda * x * x) - 0.5 * z * z;
    return h;
  }

  double psi(double x) const { return psi_log(x).value(); }

  /// log of the probability density; -inf at Hermite zeros.
  double log_rho(double x) const {
    const SignedLog p = psi_log(x);
    return p.sign == 0 ? -std::numeric_limits<double>::infinity()
                       : 2.0 * p.log_abs;
  }

  double rho(double x) const {
    const double lr = log_rho(x);
    return std::isinf(lr) ? 0.0 : std::exp(lr);
  }

 private:
  ModelParams params_;
  int n_;
  double omega_n_;
  double log_norm_sq_;
};

/// Radial factor of an N-dimensional eigenstate (N >= 2),
/// R(r) = N_{n,l} sqrt(1 + lambda r^2) r^l exp(-Omega r^2/2) L_n^{l-1+N/2}(Omega r^2).
class RadialState {
 public:
  RadialState(const ModelParams& params, int n, int l)
      : params_(params), n_(n), l_(l) {
    if (params.dim < 2) throw std::domain_error("RadialState: requires dim >= 2");
    if (l < 0) throw std::domain_error("RadialState: requires l >= 0");
    // only n and l matter for the radial part; chain (l, 0, ..., 0) is valid
    QuantumNumbers q{n, l, std::vector<int>(params.dim - 1, 0)};
    q.mu_chain.front() = l;
    omega_nl_ = frequency(params, q);
    const double half_n = 0.5 * params.dim;
    const double nu = 2.0 * n + l + half_n;
    const double beta = params.lambda / omega_nl_;
    log_norm_sq_ = std::log(2.0) + ln_gamma(n + 1.0) -
                   ln_gamma(n + l + half_n) +
                   (l + half_n) * std::log(omega_nl_) -
                   std::log1p(nu * beta);
  }

  const ModelParams& params() const { return params_; }
  int n() const { return n_; }
  int l() const { return l_; }
  double omega_nl() const { return omega_nl_; }
  double log_norm_sq() const { return log_norm_sq_; }
  double laguerre_alpha() const { return l_ - 1.0 + 0.5 * params_.dim; }

  SignedLog radial_log(double r) const {
    if (!(r >= 0.0)) throw std::domain_error("RadialState: requires r >= 0");
    if (r == 0.0 && l_ > 0) return {};
    const double z = omega_nl_ * r * r;
    SignedLog lag =
        eval_poly_log_scaled(PolyFamily::laguerre(n_, laguerre_alpha()), z);
    if (lag.sign == 0) return lag;
    lag.log_abs += 0.5 * log_norm_sq_ +
                   0.5 * std::log1p(params_.lambda * r * r) +
                   l_ * ((r == 0.0) ? 0.0 : std::log(r)) - 0.5 * z;
    return lag;
  }

  double radial(double r) const { return radial_log(r).value(); }

  double log_density(double r) const {
    const SignedLog p = radial_log(r);
    return p.sign == 0 ? -std::numeric_limits<double>::infinity()
                       : 2.0 * p.log_abs;
  }

  double density(double r) const {
    const double ld = log_density(r);
    return std::isinf(ld) ? 0.0 : std::exp(ld);
  }

 private:
  ModelParams params_;
  int n_, l_;
  double omega_nl_;
  double log_norm_sq_;
};

/// Squared normalization constant M^2 of the hyperspherical harmonic labeled
/// by the mu-chain, evaluated in log space.
inline double angular_norm_sq(int dim, const std::vector<int>& mu_chain) {
  if (dim < 2) throw std::domain_error("angular_norm_sq: requires dim >= 2");
  QuantumNumbers q{0, mu_chain.empty() ? 0 : mu_chain.front(), mu_chain};
  q.validate(dim);
  double log_m2 = -std::log(2.0 * M_PI);
  for (int k = 1; k <= dim - 2; ++k) {
    const double mu_k = mu_chain[k - 1];
    const double mu_k1 = mu_chain[k];
    log_m2 += ln_gamma(0.5 * (dim - k + 1) + mu_k1) +
              ln_gamma(mu_k - mu_k1 + 1.0) +
              std::log(0.5 * (dim - k - 1) + mu_k) +
              ln_gamma(dim - k + 2.0 * mu_k1 - 1.0);
    log_m2 -= 0.5 * std::log(M_PI) + ln_gamma(0.5 * (dim - k) + mu_k1) +
              std::log(0.5 * (dim - k - 1) + mu_k1) +
              ln_gamma(dim - k + mu_k + mu_k1 - 1.0);
  }
  return std::exp(log_m2);
}

/// |Y_{lm}(theta, phi)|^2 for N = 3 (phi-independent), built from the
/// Gegenbauer form C_{l-|m|}^{|m|+1/2}(cos theta) (sin theta)^{|m|}.
inline double y_squared_3d(int l, int m, double theta) {
  if (l < 0 || std::abs(m) > l)
    throw std::domain_error("y_squared_3d: requires |m| <= l");
  const int mm = std::abs(m);
  const double m2 = angular_norm_sq(3, {l, mm});
  const double c =
      eval_poly(PolyFamily::gegenbauer(l - mm, mm + 0.5), std::cos(theta));
  const double s = std::sin(theta);
  return m2 * c * c * std::pow(s * s, mm);
}

}  // namespace darboux
