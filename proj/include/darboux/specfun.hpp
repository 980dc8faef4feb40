#pragma once

#include <cmath>
#include <stdexcept>

#include "darboux/quadrature.hpp"

namespace darboux {

inline constexpr int kMaxPolyDegree = 200;
inline constexpr int kMaxBesselOrder = 100;

enum class PolyKind { Hermite, AssociatedLaguerre, Gegenbauer };

/// One member of the three orthogonal-polynomial families used here:
/// H_n, L_n^alpha (alpha > -1) or C_n^alpha (alpha > -1/2).
struct PolyFamily {
  PolyKind kind;
  int degree;
  double alpha = 0.0;  // ignored for Hermite

  void validate() const {
    if (degree < 0 || degree > kMaxPolyDegree)
      throw std::domain_error("PolyFamily: degree out of range");
    if (kind == PolyKind::AssociatedLaguerre && !(alpha > -1.0))
      throw std::domain_error("PolyFamily: Laguerre requires alpha > -1");
    if (kind == PolyKind::Gegenbauer && !(alpha > -0.5))
      throw std::domain_error("PolyFamily: Gegenbauer requires alpha > -1/2");
  }

  static PolyFamily hermite(int n) { return {PolyKind::Hermite, n, 0.0}; }
  static PolyFamily laguerre(int n, double alpha) {
    return {PolyKind::AssociatedLaguerre, n, alpha};
  }
  static PolyFamily gegenbauer(int n, double alpha) {
    return {PolyKind::Gegenbauer, n, alpha};
  }
};

/// sign * exp(log_abs); sign == 0 means an exact zero (log_abs = -inf).
struct SignedLog {
  int sign = 0;
  double log_abs = -std::numeric_limits<double>::infinity();

  double value() const { return sign == 0 ? 0.0 : sign * std::exp(log_abs); }
};

namespace detail {

// p_{k+1} = (A_k z + B_k) p_k + C_k p_{k-1}, started from p_0, p_1.
template <class Step>
double recur(int n, double p0, double p1, const Step& step) {
  if (n == 0) return p0;
  double prev = p0, cur = p1;
  for (int k = 1; k < n; ++k) {
    const double next = step(k, prev, cur);
    prev = cur;
    cur = next;
  }
  return cur;
}

template <class Step>
SignedLog recur_log_scaled(int n, double p0, double p1, const Step& step) {
  double scale = 0.0;  // accumulated log of removed magnitude
  double prev = p0, cur = p1;
  if (n == 0) cur = p0;
  for (int k = 1; k < n; ++k) {
    const double next = step(k, prev, cur);
    prev = cur;
    cur = next;
    const double mag = std::max(std::abs(prev), std::abs(cur));
    if (mag > 1e150) {
      prev /= mag;
      cur /= mag;
      scale += std::log(mag);
    }
  }
  if (cur == 0.0) return {};
  return {cur > 0.0 ? +1 : -1, std::log(std::abs(cur)) + scale};
}

}  // namespace detail

/// Three-term-recurrence evaluation of H_n, L_n^alpha or C_n^alpha at z.
inline double eval_poly(const PolyFamily& family, double z) {
  family.validate();
  const int n = family.degree;
  const double a = family.alpha;
  switch (family.kind) {
    case PolyKind::Hermite:
      return detail::recur(n, 1.0, 2.0 * z, [z](int k, double pm, double p) {
        return 2.0 * z * p - 2.0 * k * pm;
      });
    case PolyKind::AssociatedLaguerre:
      return detail::recur(n, 1.0, 1.0 + a - z, [z, a](int k, double pm, double p) {
        return ((2.0 * k + 1.0 + a - z) * p - (k + a) * pm) / (k + 1.0);
      });
    case PolyKind::Gegenbauer:
      return detail::recur(n, 1.0, 2.0 * a * z, [z, a](int k, double pm, double p) {
        return (2.0 * (k + a) * z * p - (k + 2.0 * a - 1.0) * pm) / (k + 1.0);
      });
  }
  throw std::logic_error("eval_poly: unreachable");
}

/// Overflow-safe variant: runs the same recurrence with on-the-fly rescaling.
inline SignedLog eval_poly_log_scaled(const PolyFamily& family, double z) {
  family.validate();
  const int n = family.degree;
  const double a = family.alpha;
  switch (family.kind) {
    case PolyKind::Hermite:
      return detail::recur_log_scaled(n, 1.0, 2.0 * z,
                                      [z](int k, double pm, double p) {
                                        return 2.0 * z * p - 2.0 * k * pm;
                                      });
    case PolyKind::AssociatedLaguerre:
      return detail::recur_log_scaled(
          n, 1.0, 1.0 + a - z, [z, a](int k, double pm, double p) {
            return ((2.0 * k + 1.0 + a - z) * p - (k + a) * pm) / (k + 1.0);
          });
    case PolyKind::Gegenbauer:
      return detail::recur_log_scaled(
          n, 1.0, 2.0 * a * z, [z, a](int k, double pm, double p) {
            return (2.0 * (k + a) * z * p - (k + 2.0 * a - 1.0) * pm) / (k + 1.0);
          });
  }
  throw std::logic_error("eval_poly_log_scaled: unreachable");
}

inline double ln_gamma(double x) {
  if (!(x > 0.0)) throw std::domain_error("ln_gamma: requires x > 0");
  return std::lgamma(x);
}

namespace detail {

inline double sph_bessel_series(int l, double z) {
  // j_l(z) = z^l / (2l+1)!! * sum_k (-z^2/2)^k / (k! (2l+3)(2l+5)...(2l+2k+1))
  double log_prefactor = l * std::log(z);
  for (int k = 1; k <= l; ++k) log_prefactor -= std::log(2.0 * k + 1.0);
  double term = 1.0, sum = 1.0;
  const double z2 = z * z;
  for (int k = 1; k < 64; ++k) {
    term *= -z2 / (2.0 * k * (2.0 * l + 2.0 * k + 1.0));
    sum += term;
    if (std::abs(term) < 1e-18 * std::abs(sum)) break;
  }
  return std::exp(log_prefactor) * sum;
}

}  // namespace detail

/// Spherical Bessel function j_l(z) for z >= 0, l <= 100. Series near the
/// origin, upward recurrence for z > l, Miller downward recurrence otherwise.
inline double spherical_bessel(int l, double z) {
  if (l < 0 || l > kMaxBesselOrder)
    throw std::domain_error("spherical_bessel: order out of range");
  if (!(z >= 0.0)) throw std::domain_error("spherical_bessel: requires z >= 0");
  if (z == 0.0) return l == 0 ? 1.0 : 0.0;
  if (z < 0.5 || z * z < 0.1 * (2.0 * l + 3.0))
    return detail::sph_bessel_series(l, z);

  const double j0 = std::sin(z) / z;
  if (l == 0) return j0;
  const double j1 = j0 / z - std::cos(z) / z;
  if (l == 1) return j1;

  if (z > static_cast<double>(l)) {
    // upward recurrence is stable here
    double jm = j0, jc = j1;
    for (int k = 1; k < l; ++k) {
      const double jn = (2.0 * k + 1.0) / z * jc - jm;
      jm = jc;
      jc = jn;
    }
    return jc;
  }

  // downward recurrence from a padded start order, normalized through j_0
  const int start = l + 16 + static_cast<int>(std::sqrt(40.0 * l));
  double jp = 0.0, jc = 1e-30, target = 0.0;
  for (int k = start; k >= 1; --k) {
    const double jm = (2.0 * k + 1.0) / z * jc - jp;
    jp = jc;
    jc = jm;
    if (k - 1 == l) target = jc;
    const double mag = std::abs(jc);
    if (mag > 1e250) {
      jc /= mag;
      jp /= mag;
      target /= mag;
    }
  }
  return target * (j0 / jc);
}

}  // namespace darboux
