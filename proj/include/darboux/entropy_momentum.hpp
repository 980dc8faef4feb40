#pragma once

#include <cmath>
#include <stdexcept>

#include "darboux/entropy_position.hpp"
#include "darboux/model.hpp"
#include "darboux/transform.hpp"

namespace darboux {

/// Both entropies of one state plus the entropic uncertainty bound
/// N (1 + log pi) and the margin above it.
struct UncertaintyReport {
  double s_rho = 0.0;
  double s_gamma = 0.0;
  double total = 0.0;
  double bbm_bound = 0.0;
  double margin = 0.0;
  double err_est = 0.0;
  bool saturated = false;  // margin below 1e-3
};

namespace detail {

inline double neg_x_log_x(double x) {
  return (x > 0.0) ? -x * std::log(x) : 0.0;
}

}  // namespace detail

/// S_gamma = -integral gamma log gamma dp for the 1D state, with gamma from
/// the cached cosine/sine transform and an automatic momentum window.
inline EntropyReport entropy_momentum_1d(const ModelParams& params, int n,
                                         const TransformSpec& tspec = {}) {
  if (params.dim != 1)
    throw std::domain_error("entropy_momentum_1d: requires dim = 1");
  const double omega_n = frequency(params, QuantumNumbers::d1(n));
  const double p0 = detail::default_p_window(params, omega_n, n);
  auto [plan, p_max] = detail::auto_window(
      [&](double p_ref) { return FourierPlan1D(params, n, tspec, p_ref); }, p0,
      tspec.max_p);

  auto integrand = [&](double p) { return detail::neg_x_log_x(plan.density(p)); };
  const IntegralResult half = integrate(integrand, 0.0, p_max, tspec.quad);

  EntropyReport report;
  report.breakdown = {{"momentum_integral", 2.0 * half.value}};
  report.value = report.breakdown_sum();
  report.err_est = 2.0 * half.err_est;
  return report;
}

/// 3D momentum entropy: radial spherical-Bessel-transform entropy minus the
/// same angular term as in position space.
inline EntropyReport entropy_momentum_3d(const ModelParams& params, int n,
                                         int l, const std::vector<int>& mu_chain,
                                         const TransformSpec& tspec = {}) {
  if (params.dim != 3)
    throw std::domain_error("entropy_momentum_3d: requires dim = 3");
  QuantumNumbers q{n, l, mu_chain};
  q.validate(3);

  const RadialState state(params, n, l);
  const double p0 = detail::default_p_window(params, state.omega_nl(), 2 * n + l);
  auto [plan, p_max] = detail::auto_window(
      [&](double p_ref) { return HankelPlan3D(params, n, l, tspec, p_ref); },
      p0, tspec.max_p);

  auto integrand = [&](double p) {
    const double g = plan.radial_density(p);
    return (g > 0.0) ? -g * std::log(g) * p * p : 0.0;
  };
  const IntegralResult radial = integrate(integrand, 0.0, p_max, tspec.quad);
  const double jy = angular_entropy_JY(3, mu_chain, tspec.quad);

  EntropyReport report;
  report.breakdown = {{"radial_momentum_integral", radial.value},
                      {"angular_term", -jy}};
  report.value = report.breakdown_sum();
  report.err_est = radial.err_est;
  return report;
}

/// Position + momentum entropy of one state against the entropic bound.
inline UncertaintyReport uncertainty_check(const ModelParams& params,
                                           const QuantumNumbers& q,
                                           const QuadratureSpec& spec = {},
                                           const TransformSpec& tspec = {}) {
  q.validate(params.dim);
  EntropyReport position, momentum;
  if (params.dim == 1) {
    position = entropy_position_1d(params, q.n, spec);
    momentum = entropy_momentum_1d(params, q.n, tspec);
  } else if (params.dim == 3) {
    position = entropy_position_nd(params, q, spec);
    momentum = entropy_momentum_3d(params, q.n, q.l, q.mu_chain, tspec);
  } else {
    throw std::domain_error(
        "uncertainty_check: momentum entropies supported for dim 1 and 3");
  }

  UncertaintyReport report;
  report.s_rho = position.value;
  report.s_gamma = momentum.value;
  report.total = report.s_rho + report.s_gamma;
  report.bbm_bound = params.dim * (1.0 + std::log(M_PI));
  report.margin = report.total - report.bbm_bound;
  report.err_est = position.err_est + momentum.err_est;
  report.saturated = report.margin < 1e-3;
  return report;
}

}  // namespace darboux
