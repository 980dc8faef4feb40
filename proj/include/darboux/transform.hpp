#pragma once

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "darboux/model.hpp"
#include "darboux/quadrature.hpp"
#include "darboux/specfun.hpp"
#include "darboux/states.hpp"

namespace darboux {

/// Controls for the oscillatory transforms: the adaptive spec used by
/// surrounding entropy integrals, the envelope threshold that fixes the
/// radial cutoff, and the Gauss-Legendre order per panel.
struct TransformSpec {
  QuadratureSpec quad;
  double r_max_policy = 1e-18;
  int panel_rule_order = 31;
  double max_p = 0.0;  // 0 = auto window

  void validate() const {
    quad.validate();
    if (panel_rule_order < 7 || panel_rule_order % 2 == 0)
      throw std::domain_error("TransformSpec: panel_rule_order must be odd and >= 7");
    if (!(r_max_policy > 0.0))
      throw std::domain_error("TransformSpec: r_max_policy must be positive");
  }
};

/// (abscissa, value) pairs plus the labels needed to interpret them.
struct SampledCurve {
  std::vector<double> abscissae;
  std::vector<double> values;
  struct Meta {
    ModelParams params;
    QuantumNumbers q;
    std::string space;  // "position" or "momentum"
    double err_est = 0.0;
  } meta;
};

namespace detail {

// Panels of fixed width covering (0, cutoff), with precomputed Gauss-Legendre
// nodes and weight * f(node) products. Because the wavefunction factor does
// not depend on p, each transform evaluation reduces to a dot product with
// the oscillatory kernel.
struct PanelGrid {
  std::vector<double> nodes;
  std::vector<double> weighted_values;  // w_i * f(x_i)
};

inline double panel_width(double p_ref) {
  return std::min(M_PI / (2.0 * std::max(p_ref, 1.0)), 0.5);
}

template <class F>
PanelGrid build_panel_grid(const F& f, double cutoff, double p_ref, int order) {
  const GaussLegendreRule rule = gauss_legendre(order);
  const double width = panel_width(p_ref);
  const int panels = std::max(1, static_cast<int>(std::ceil(cutoff / width)));
  PanelGrid grid;
  grid.nodes.reserve(panels * order);
  grid.weighted_values.reserve(panels * order);
  for (int k = 0; k < panels; ++k) {
    const double a = k * width;
    const double b = std::min(cutoff, a + width);
    const double c = 0.5 * (a + b), h = 0.5 * (b - a);
    for (int i = 0; i < order; ++i) {
      const double x = c + h * rule.nodes[i];
      grid.nodes.push_back(x);
      grid.weighted_values.push_back(h * rule.weights[i] * f(x));
    }
  }
  return grid;
}

template <class F>
double envelope_cutoff(const F& abs_f, double threshold) {
  double cut = 8.0;
  for (int i = 0; i < 48; ++i) {
    if (abs_f(cut) < threshold && abs_f(1.37 * cut) < threshold) return cut;
    cut *= 2.0;
  }
  throw std::runtime_error("transform: envelope cutoff search failed");
}

}  // namespace detail

/// Cached 1D Fourier transform of one eigenstate. The parity of the state
/// reduces the complex transform to a single real cosine (even n) or sine
/// (odd n) transform over the half line.
class FourierPlan1D {
 public:
  FourierPlan1D(const ModelParams& params, int n, const TransformSpec& tspec,
                double p_ref)
      : state_(params, n), odd_(n % 2 != 0) {
    tspec.validate();
    const double cutoff = detail::envelope_cutoff(
        [&](double x) { return std::abs(state_.psi(x)) * (1.0 + x); },
        tspec.r_max_policy);
    grid_ = detail::build_panel_grid([&](double x) { return state_.psi(x); },
                                     cutoff, p_ref, tspec.panel_rule_order);
    p_ref_ = p_ref;
  }

  /// |psi~(p)| up to sign: sqrt(2/pi) * integral_0^inf psi(x) trig(p x) dx.
  double amplitude(double p) const {
    const double ap = std::abs(p);
    double acc = 0.0;
    const size_t count = grid_.nodes.size();
    if (odd_) {
      for (size_t i = 0; i < count; ++i)
        acc += grid_.weighted_values[i] * std::sin(ap * grid_.nodes[i]);
    } else {
      for (size_t i = 0; i < count; ++i)
        acc += grid_.weighted_values[i] * std::cos(ap * grid_.nodes[i]);
    }
    return std::sqrt(2.0 / M_PI) * acc;
  }

  double density(double p) const {
    const double a = amplitude(p);
    return a * a;
  }

  double p_ref() const { return p_ref_; }
  const State1D& state() const { return state_; }

 private:
  State1D state_;
  bool odd_;
  detail::PanelGrid grid_;
  double p_ref_;
};

/// Cached order-l spherical-Bessel transform of one radial eigenstate.
class HankelPlan3D {
 public:
  HankelPlan3D(const ModelParams& params, int n, int l,
               const TransformSpec& tspec, double p_ref)
      : state_(params, n, l), l_(l) {
    if (params.dim != 3)
      throw std::domain_error("HankelPlan3D: requires dim = 3");
    tspec.validate();
    const double cutoff = detail::envelope_cutoff(
        [&](double r) { return std::abs(state_.radial(r)) * (1.0 + r) * (1.0 + r); },
        tspec.r_max_policy);
    grid_ = detail::build_panel_grid(
        [&](double r) { return state_.radial(r) * r * r; }, cutoff, p_ref,
        tspec.panel_rule_order);
    p_ref_ = p_ref;
  }

  /// K(p) = sqrt(2/pi) * integral_0^inf j_l(p r) R(r) r^2 dr.
  double amplitude(double p) const {
    if (!(p >= 0.0)) throw std::domain_error("HankelPlan3D: requires p >= 0");
    double acc = 0.0;
    const size_t count = grid_.nodes.size();
    for (size_t i = 0; i < count; ++i)
      acc += grid_.weighted_values[i] * spherical_bessel(l_, p * grid_.nodes[i]);
    return std::sqrt(2.0 / M_PI) * acc;
  }

  double radial_density(double p) const {
    const double a = amplitude(p);
    return a * a;
  }

  double density(double p) const { return radial_density(p); }

  double p_ref() const { return p_ref_; }
  const RadialState& state() const { return state_; }

 private:
  RadialState state_;
  int l_;
  detail::PanelGrid grid_;
  double p_ref_;
};

namespace detail {

inline double default_p_window(const ModelParams& params, double omega_state,
                               int n) {
  // Gaussian-like momentum decay at width ~ sqrt(Omega); pad for the
  // polynomial factor and for narrow states.
  return (6.0 + 2.0 * std::sqrt(2.0 * n + 1.0)) *
             std::sqrt(std::max(omega_state, params.omega)) +
         4.0;
}

// Grow the window until gamma(p) (1 + p^2) drops below 1e-16; rebuilding the
// plan keeps the panel width matched to the largest p in play.
template <class MakePlan>
auto auto_window(const MakePlan& make_plan, double p0, double forced_max) {
  double p_max = (forced_max > 0.0) ? forced_max : p0;
  auto plan = make_plan(p_max);
  if (forced_max > 0.0) return std::make_pair(std::move(plan), p_max);
  for (int i = 0; i < 40; ++i) {
    if (plan.density(p_max) * (1.0 + p_max * p_max) < 1e-16)
      return std::make_pair(std::move(plan), p_max);
    p_max *= 1.5;
    plan = make_plan(p_max);
  }
  throw std::runtime_error("transform: momentum window search failed");
}

}  // namespace detail

/// gamma(p) = |psi~(p)|^2 for the 1D state (n, lambda); even in p.
inline double momentum_density_1d(const ModelParams& params, int n, double p,
                                  const TransformSpec& tspec = {}) {
  if (params.dim != 1)
    throw std::domain_error("momentum_density_1d: requires dim = 1");
  const FourierPlan1D plan(params, n, tspec, std::max(std::abs(p), 1.0));
  return plan.density(p);
}

/// Radial momentum amplitude K_{n,l}(p) of the 3D state.
inline double momentum_radial_K(const ModelParams& params, int n, int l,
                                double p, const TransformSpec& tspec = {}) {
  if (params.dim != 3)
    throw std::domain_error("momentum_radial_K: requires dim = 3");
  const HankelPlan3D plan(params, n, l, tspec, std::max(p, 1.0));
  return plan.amplitude(p);
}

/// Evaluate one density curve on a caller-supplied grid. Position curves are
/// rho (1D) or 4 pi r^2 rho_radial (3D); momentum curves are gamma (1D) or
/// 4 pi p^2 gamma_radial (3D).
inline SampledCurve sample_density(const ModelParams& params,
                                   const QuantumNumbers& q,
                                   const std::string& space,
                                   const std::vector<double>& grid,
                                   const TransformSpec& tspec = {}) {
  if (grid.empty()) throw std::domain_error("sample_density: empty grid");
  for (size_t i = 1; i < grid.size(); ++i)
    if (!(grid[i] > grid[i - 1]))
      throw std::domain_error("sample_density: grid must be strictly increasing");
  q.validate(params.dim);
  if (space != "position" && space != "momentum")
    throw std::domain_error("sample_density: space must be position or momentum");

  SampledCurve curve;
  curve.abscissae = grid;
  curve.values.reserve(grid.size());
  curve.meta.params = params;
  curve.meta.q = q;
  curve.meta.space = space;

  if (params.dim == 1) {
    if (space == "position") {
      const State1D state(params, q.n);
      for (double x : grid) curve.values.push_back(state.rho(x));
    } else {
      double p_ref = 1.0;
      for (double p : grid) p_ref = std::max(p_ref, std::abs(p));
      const FourierPlan1D plan(params, q.n, tspec, p_ref);
      for (double p : grid) curve.values.push_back(plan.density(p));
    }
  } else if (params.dim == 3) {
    if (space == "position") {
      const RadialState state(params, q.n, q.l);
      for (double r : grid) {
        if (!(r >= 0.0))
          throw std::domain_error("sample_density: radial grid requires r >= 0");
        curve.values.push_back(4.0 * M_PI * r * r * state.density(r));
      }
    } else {
      double p_ref = 1.0;
      for (double p : grid) {
        if (!(p >= 0.0))
          throw std::domain_error("sample_density: momentum grid requires p >= 0");
        p_ref = std::max(p_ref, p);
      }
      const HankelPlan3D plan(params, q.n, q.l, tspec, p_ref);
      for (double p : grid)
        curve.values.push_back(4.0 * M_PI * p * p * plan.radial_density(p));
    }
  } else {
    throw std::domain_error("sample_density: curves supported for dim 1 and 3");
  }
  return curve;
}

}  // namespace darboux
