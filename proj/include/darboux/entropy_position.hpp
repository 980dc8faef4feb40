#pragma once

#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "darboux/model.hpp"
#include "darboux/quadrature.hpp"
#include "darboux/specfun.hpp"
#include "darboux/states.hpp"

namespace darboux {

/// One entropy value (nats) together with the named partial terms it was
/// assembled from, so regressions can be localized to a specific term.
struct EntropyReport {
  double value = 0.0;
  double err_est = 0.0;
  std::vector<std::pair<std::string, double>> breakdown;

  double breakdown_sum() const {
    double s = 0.0;
    for (const auto& [name, v] : breakdown) s += v;
    return s;
  }
};

/// Closed form of the weighted Hermite moments
/// integral z^k H_n^2 exp(-z^2) dz for k in {0, 2, 4}; odd k vanishes.
inline double hermite_moment(int n, int k) {
  if (n < 0) throw std::domain_error("hermite_moment: requires n >= 0");
  const double log_norm =
      0.5 * std::log(M_PI) + n * std::log(2.0) + ln_gamma(n + 1.0);
  switch (k) {
    case 1:
    case 3:
      return 0.0;
    case 0:
      return std::exp(log_norm);
    case 2:
      return std::exp(log_norm) * (n + 0.5);
    case 4:
      return std::exp(log_norm) * (1.5 * n * n + 1.5 * n + 0.75);
    default:
      throw std::domain_error("hermite_moment: unsupported moment order");
  }
}

namespace detail {

// Generalized binomial coefficient C(x, k) for real x, integer k >= 0,
// computed as the falling-factorial product; exact zeros for integer
// 0 <= x < k fall out naturally.
inline double generalized_binomial(double x, int k) {
  if (k < 0) return 0.0;
  double result = 1.0;
  for (int j = 1; j <= k; ++j) result *= (x - k + j) / j;
  return result;
}

}  // namespace detail

/// integral z^mu L_n^alpha(z) L_m^beta(z) exp(-z) dz via the finite
/// binomial sum.
inline double laguerre_cross_moment(int n, int m, double alpha, double beta,
                                    double mu) {
  if (n < 0 || m < 0)
    throw std::domain_error("laguerre_cross_moment: requires n, m >= 0");
  if (!(mu > -1.0) || !(alpha > -1.0) || !(beta > -1.0))
    throw std::domain_error("laguerre_cross_moment: requires mu, alpha, beta > -1");
  double sum = 0.0;
  for (int k = 0; k <= std::min(n, m); ++k) {
    sum += detail::generalized_binomial(mu - alpha, n - k) *
           detail::generalized_binomial(mu - beta, m - k) *
           detail::generalized_binomial(mu + k, k);
  }
  const double sign = ((n + m) % 2 == 0) ? 1.0 : -1.0;
  return sign * std::exp(ln_gamma(mu + 1.0)) * sum;
}

namespace detail {

// (1 / (sqrt(pi) 2^n n!)) * integral (1 + a z^2) e^{-z^2} H_n^2
//                                    log((1 + a z^2) H_n^2) dz,
// evaluated entirely in log space so n up to 200 stays finite.
inline IntegralResult hermite_entropy_integral_scaled(int n, double a,
                                                      const QuadratureSpec& spec) {
  const double log_c =
      0.5 * std::log(M_PI) + n * std::log(2.0) + ln_gamma(n + 1.0);
  const PolyFamily fam = PolyFamily::hermite(n);
  auto integrand = [&](double z) {
    const SignedLog h = eval_poly_log_scaled(fam, z);
    if (h.sign == 0) return 0.0;  // 0 log 0 := 0 at Hermite zeros
    const double log1paz2 = std::log1p(a * z * z);
    const double exponent = 2.0 * h.log_abs + log1paz2 - z * z - log_c;
    const double weight = std::exp(exponent);
    if (weight == 0.0) return 0.0;
    return weight * (log1paz2 + 2.0 * h.log_abs);
  };
  // even integrand
  const double inf = std::numeric_limits<double>::infinity();
  IntegralResult half = integrate(integrand, 0.0, inf, spec);
  return {2.0 * half.value, 2.0 * half.err_est};
}

}  // namespace detail

/// The entropy integral with the (1 + alpha z^2) conformal weight, in its
/// raw (unscaled) normalization. Overflows to inf for very large n; the
/// entropy assembly below uses the scaled form internally.
inline double integral_I_alpha(int n, double alpha, const QuadratureSpec& spec = {}) {
  if (n < 0) throw std::domain_error("integral_I_alpha: requires n >= 0");
  if (!(alpha >= 0.0)) throw std::domain_error("integral_I_alpha: requires alpha >= 0");
  const double log_c =
      0.5 * std::log(M_PI) + n * std::log(2.0) + ln_gamma(n + 1.0);
  return detail::hermite_entropy_integral_scaled(n, alpha, spec).value *
         std::exp(log_c);
}

/// Position-space Shannon entropy of the 1D state (n, lambda) assembled from
/// the closed-form moments plus one numerical Hermite-log integral.
inline EntropyReport entropy_position_1d(const ModelParams& params, int n,
                                         const QuadratureSpec& spec = {}) {
  if (params.dim != 1)
    throw std::domain_error("entropy_position_1d: requires dim = 1");
  const double omega_n = frequency(params, QuantumNumbers::d1(n));
  const double beta = params.lambda / omega_n;
  const double denom = 1.0 + (n + 0.5) * beta;
  const double log_c =
      0.5 * std::log(M_PI) + n * std::log(2.0) + ln_gamma(n + 1.0);

  const IntegralResult iscaled =
      detail::hermite_entropy_integral_scaled(n, beta, spec);

  EntropyReport report;
  report.breakdown = {
      {"log_frequency", -0.5 * std::log(omega_n)},
      {"log_hermite_norm", log_c},
      {"log_conformal_norm", std::log(denom)},
      {"moment_term",
       ((n + 0.5) + beta * (1.5 * n * n + 1.5 * n + 0.75)) / denom},
      {"integral_term", -iscaled.value / denom},
  };
  report.value = report.breakdown_sum();
  report.err_est = iscaled.err_est / denom;
  return report;
}

namespace detail {

// The six radial log-integrals of the N-D entropy, each already scaled by
// n! / Gamma(n + alpha + 1) so that the pure-weight integral is 1.
struct RadialLogIntegrals {
  double j1 = 0.0, j1_tilde = 0.0;
  double j2 = 0.0, j2_tilde = 0.0;
  double j3 = 0.0, j3_tilde = 0.0;
  double err = 0.0;
};

inline RadialLogIntegrals laguerre_entropy_integrals(int n, double alpha_lag,
                                                     int l, double beta,
                                                     const QuadratureSpec& spec) {
  const double log_c = ln_gamma(n + alpha_lag + 1.0) - ln_gamma(n + 1.0);
  const PolyFamily fam = PolyFamily::laguerre(n, alpha_lag);
  RadialLogIntegrals out;

  // factor(z, log-of-Laguerre^2) selects which logarithm is integrated;
  // extra_z adds one power of z for the tilde variants.
  auto run = [&](auto factor, bool extra_z) {
    auto integrand = [&](double z) {
      if (z <= 0.0) return 0.0;
      const SignedLog lag = eval_poly_log_scaled(fam, z);
      if (lag.sign == 0) return 0.0;  // 0 log 0 := 0
      double exponent = 2.0 * lag.log_abs + alpha_lag * std::log(z) - z - log_c;
      if (extra_z) exponent += std::log(z);
      const double weight = std::exp(exponent);
      if (weight == 0.0) return 0.0;
      return weight * factor(z, 2.0 * lag.log_abs);
    };
    const double inf = std::numeric_limits<double>::infinity();
    return integrate(integrand, 0.0, inf, spec);
  };

  if (l > 0) {
    auto lt = [l](double z, double) { return l * std::log(z); };
    const IntegralResult r1 = run(lt, false);
    const IntegralResult r1t = run(lt, true);
    out.j1 = r1.value;
    out.j1_tilde = r1t.value;
    out.err += r1.err_est + r1t.err_est;
  }
  {
    auto lt = [](double, double log_lag_sq) { return log_lag_sq; };
    const IntegralResult r2 = run(lt, false);
    const IntegralResult r2t = run(lt, true);
    out.j2 = r2.value;
    out.j2_tilde = r2t.value;
    out.err += r2.err_est + r2t.err_est;
  }
  if (beta > 0.0) {
    auto lt = [beta](double z, double) { return std::log1p(beta * z); };
    const IntegralResult r3 = run(lt, false);
    const IntegralResult r3t = run(lt, true);
    out.j3 = r3.value;
    out.j3_tilde = r3t.value;
    out.err += r3.err_est + r3t.err_est;
  }
  return out;
}

}  // namespace detail

/// Radial plus prefactor part of the N-D position entropy (everything except
/// the angular term). Requires dim >= 2.
inline EntropyReport entropy_position_radial(const ModelParams& params, int n,
                                             int l,
                                             const QuadratureSpec& spec = {}) {
  if (params.dim < 2)
    throw std::domain_error("entropy_position_radial: requires dim >= 2");
  const RadialState state(params, n, l);
  const int N = params.dim;
  const double omega = state.omega_nl();
  const double beta = params.lambda / omega;
  const double nu = 2.0 * n + l + 0.5 * N;
  const double denom = 1.0 + nu * beta;
  const double alpha_lag = state.laguerre_alpha();
  const double log_ratio = std::log(2.0) + ln_gamma(n + 1.0) -
                           ln_gamma(n + l + 0.5 * N);

  const detail::RadialLogIntegrals J =
      detail::laguerre_entropy_integrals(n, alpha_lag, l, beta, spec);
  const double integral_sum = J.j1 + beta * J.j1_tilde + J.j2 +
                              beta * J.j2_tilde + J.j3 + beta * J.j3_tilde;

  const double moment_poly = 6.0 * n * n + 6.0 * l * n + 3.0 * n * N + l +
                             l * l + l * N + 0.5 * N + 0.25 * N * N;

  EntropyReport report;
  report.breakdown = {
      {"log_frequency", -0.5 * N * std::log(omega)},
      {"log_radial_norm", -log_ratio},
      {"log_conformal_norm", std::log(denom)},
      {"integral_term", -integral_sum / denom},
      {"moment_term", (nu + beta * moment_poly) / denom},
  };
  report.value = report.breakdown_sum();
  report.err_est = J.err / denom;
  return report;
}

/// Angular entropy J_Y = integral |Y|^2 log |Y|^2 over the unit sphere.
/// Closed for l = 0 in any dimension; Gegenbauer-integral form for N = 3.
inline double angular_entropy_JY(int dim, const std::vector<int>& mu_chain,
                                 const QuadratureSpec& spec = {}) {
  if (dim < 2) throw std::domain_error("angular_entropy_JY: requires dim >= 2");
  QuantumNumbers q{0, mu_chain.empty() ? 0 : mu_chain.front(), mu_chain};
  q.validate(dim);
  const int l = q.l;

  if (l == 0) {
    // constant density 1/A on the sphere of area A = 2 pi^{N/2} / Gamma(N/2)
    const double log_area = std::log(2.0) + 0.5 * dim * std::log(M_PI) -
                            ln_gamma(0.5 * dim);
    return -log_area;
  }
  if (dim != 3)
    throw std::domain_error(
        "angular_entropy_JY: general l > 0 supported only for dim = 3");

  const int m = mu_chain.back();
  // |Y|^2 = K (1 - z^2)^m C^2 with C = C_{l-m}^{m+1/2}, z = cos(theta), and
  // K = (2l+1)(l-m)! ((2m)!)^2 / (4 pi 2^{2m} (l+m)! (m!)^2).
  const double log_k = std::log(2.0 * l + 1.0) + ln_gamma(l - m + 1.0) +
                       2.0 * ln_gamma(2.0 * m + 1.0) -
                       std::log(4.0 * M_PI) - 2.0 * m * std::log(2.0) -
                       ln_gamma(l + m + 1.0) - 2.0 * ln_gamma(m + 1.0);
  const PolyFamily fam = PolyFamily::gegenbauer(l - m, m + 0.5);

  auto kernel = [&](auto factor) {
    auto integrand = [&](double z) {
      const double one_minus = 1.0 - z * z;
      if (one_minus <= 0.0) return 0.0;
      const double c = eval_poly(fam, z);
      if (c == 0.0) return 0.0;
      const double weight = c * c * std::pow(one_minus, m);
      if (weight == 0.0) return 0.0;
      return weight * factor(one_minus, c);
    };
    return integrate(integrand, -1.0, 1.0, spec);
  };

  const IntegralResult jy1 =
      kernel([&](double one_minus, double) { return m * std::log(one_minus); });
  const IntegralResult jy2 =
      kernel([&](double, double c) { return std::log(c * c); });

  return log_k + 2.0 * M_PI * std::exp(log_k) * (jy1.value + jy2.value);
}

/// Full N-D position entropy: radial part minus the angular term.
inline EntropyReport entropy_position_nd(const ModelParams& params,
                                         const QuantumNumbers& q,
                                         const QuadratureSpec& spec = {}) {
  q.validate(params.dim);
  EntropyReport report = entropy_position_radial(params, q.n, q.l, spec);
  const double jy = angular_entropy_JY(params.dim, q.mu_chain, spec);
  report.breakdown.emplace_back("angular_term", -jy);
  report.value = report.breakdown_sum();
  return report;
}

}  // namespace darboux
