#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <queue>
#include <stdexcept>
#include <string>
#include <vector>

namespace darboux {

/// Tolerances and budgets shared by every adaptive integral in the library.
struct QuadratureSpec {
  double rel_tol = 1e-10;
  double abs_tol = 1e-12;
  int max_subdivisions = 4096;
  // integrand envelope below which infinite tails are dropped
  double truncation_threshold = 1e-18;

  void validate() const {
    if (!(rel_tol > 0.0) || !(abs_tol > 0.0) || !(truncation_threshold > 0.0))
      throw std::domain_error("QuadratureSpec: tolerances must be strictly positive");
    if (max_subdivisions < 1)
      throw std::domain_error("QuadratureSpec: max_subdivisions must be >= 1");
  }
};

struct IntegralResult {
  double value = 0.0;
  double err_est = 0.0;
};

/// Thrown when the subdivision budget is exhausted; carries the best estimate.
class ConvergenceError : public std::runtime_error {
 public:
  ConvergenceError(const std::string& what, double best_value, double err_est)
      : std::runtime_error(what), best_value(best_value), err_est(err_est) {}
  double best_value;
  double err_est;
};

namespace detail {

// 15-point Kronrod extension of the 7-point Gauss rule (QUADPACK constants).
inline constexpr double kGK15Nodes[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
inline constexpr double kGK15KronrodW[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
inline constexpr double kGK15GaussW[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Panel {
  double a, b;
  double value;
  double err;
  bool operator<(const Panel& other) const { return err < other.err; }
};

template <class F>
Panel gk15(const F& f, double a, double b) {
  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);

  double fv[15];
  for (int i = 0; i < 7; ++i) {
    fv[i] = f(c - h * kGK15Nodes[i]);
    fv[14 - i] = f(c + h * kGK15Nodes[i]);
  }
  fv[7] = f(c);

  double resk = 0.0, resabs = 0.0;
  for (int i = 0; i < 8; ++i) {
    const double s = (i == 7) ? fv[7] : fv[i] + fv[14 - i];
    resk += kGK15KronrodW[i] * s;
    resabs += kGK15KronrodW[i] * ((i == 7) ? std::abs(fv[7])
                                           : std::abs(fv[i]) + std::abs(fv[14 - i]));
  }
  double resg = kGK15GaussW[3] * fv[7];
  for (int i = 0; i < 3; ++i)
    resg += kGK15GaussW[i] * (fv[2 * i + 1] + fv[13 - 2 * i]);

  const double mean = 0.5 * resk;
  double resasc = kGK15KronrodW[7] * std::abs(fv[7] - mean);
  for (int i = 0; i < 7; ++i)
    resasc += kGK15KronrodW[i] *
              (std::abs(fv[i] - mean) + std::abs(fv[14 - i] - mean));

  double err = std::abs(resk - resg) * h;
  const double scale = resasc * h;
  if (scale > 0.0 && err > 0.0)
    err = scale * std::min(1.0, std::pow(200.0 * err / scale, 1.5));
  const double round_off = 50.0 * std::numeric_limits<double>::epsilon() * resabs * h;
  err = std::max(err, round_off);

  return Panel{a, b, resk * h, err};
}

// Pick a finite cutoff for an infinite endpoint: double outward from |z| = 8
// until the integrand envelope drops below the truncation threshold. Two probe
// points guard against landing on an isolated zero.
template <class F>
double truncate_endpoint(const F& f, double from, double direction,
                         const QuadratureSpec& spec) {
  double cut = std::max(8.0, std::abs(from) + 1.0);
  for (int i = 0; i < 64; ++i) {
    const double z1 = direction * cut;
    const double z2 = direction * cut * 1.37;
    if (std::abs(f(z1)) < spec.truncation_threshold &&
        std::abs(f(z2)) < spec.truncation_threshold)
      return direction * cut;
    cut *= 2.0;
  }
  throw ConvergenceError("integrate: could not truncate infinite tail", 0.0,
                         std::numeric_limits<double>::infinity());
}

}  // namespace detail

/// Globally adaptive Gauss-Kronrod integration of f over (a, b). Infinite
/// endpoints are replaced by finite cutoffs found from the envelope rule.
template <class F>
IntegralResult integrate(const F& f, double a, double b,
                         const QuadratureSpec& spec = {}) {
  spec.validate();
  if (std::isinf(a)) a = detail::truncate_endpoint(f, std::isinf(b) ? 0.0 : b, -1.0, spec);
  if (std::isinf(b)) b = detail::truncate_endpoint(f, a, +1.0, spec);
  if (a == b) return {0.0, 0.0};

  std::priority_queue<detail::Panel> panels;
  detail::Panel whole = detail::gk15(f, a, b);
  double total_value = whole.value;
  double total_err = whole.err;
  panels.push(whole);
  int subdivisions = 1;

  auto tolerance = [&] {
    return std::max(spec.abs_tol, spec.rel_tol * std::abs(total_value));
  };

  while (total_err > tolerance() && subdivisions < spec.max_subdivisions) {
    detail::Panel worst = panels.top();
    panels.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    if (mid <= worst.a || mid >= worst.b) {
      // interval at machine resolution; keep its estimate
      panels.push(worst);
      break;
    }
    detail::Panel left = detail::gk15(f, worst.a, mid);
    detail::Panel right = detail::gk15(f, mid, worst.b);
    total_value += left.value + right.value - worst.value;
    total_err += left.err + right.err - worst.err;
    panels.push(left);
    panels.push(right);
    ++subdivisions;
  }

  if (total_err > tolerance() && subdivisions >= spec.max_subdivisions)
    throw ConvergenceError("integrate: subdivision budget exhausted",
                           total_value, total_err);
  return {total_value, total_err};
}

/// Gauss-Legendre nodes and weights on [-1, 1], computed by Newton iteration.
struct GaussLegendreRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

inline GaussLegendreRule gauss_legendre(int order) {
  if (order < 1) throw std::domain_error("gauss_legendre: order must be >= 1");
  GaussLegendreRule rule;
  rule.nodes.resize(order);
  rule.weights.resize(order);
  const int half = (order + 1) / 2;
  for (int i = 0; i < half; ++i) {
    double x = std::cos(M_PI * (i + 0.75) / (order + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= order; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = order * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    rule.nodes[i] = -x;
    rule.nodes[order - 1 - i] = x;
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    rule.weights[i] = w;
    rule.weights[order - 1 - i] = w;
  }
  return rule;
}

}  // namespace darboux
