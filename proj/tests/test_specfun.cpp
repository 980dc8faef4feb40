#include <boost/multiprecision/cpp_int.hpp>
#include <cmath>
#include <limits>
#include <vector>

#include "darboux/quadrature.hpp"
#include "darboux/specfun.hpp"
#include "doctest.h"

using namespace darboux;

namespace {

const double kInf = std::numeric_limits<double>::infinity();

// Exact-integer Hermite recurrence at integer argument, used as the
// independent oracle for the log-scaled evaluator.
boost::multiprecision::cpp_int hermite_exact(int n, long z) {
  using boost::multiprecision::cpp_int;
  cpp_int prev = 1, cur = 2 * z;
  if (n == 0) return prev;
  for (int k = 1; k < n; ++k) {
    const cpp_int next = 2 * z * cur - 2 * k * prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

}  // namespace

TEST_CASE("eval_poly closed-form spot checks") {
  CHECK(eval_poly(PolyFamily::hermite(0), 3.7) == 1.0);
  CHECK(eval_poly(PolyFamily::hermite(3), 2.0) == doctest::Approx(40.0));
  CHECK(eval_poly(PolyFamily::laguerre(1, 0.5), 2.0) == doctest::Approx(-0.5));
  CHECK(eval_poly(PolyFamily::gegenbauer(1, 1.5), 0.4) == doctest::Approx(1.2));
}

TEST_CASE("eval_poly rejects invalid families") {
  CHECK_THROWS_AS(eval_poly(PolyFamily::laguerre(2, -1.5), 1.0), std::domain_error);
  CHECK_THROWS_AS(eval_poly(PolyFamily::gegenbauer(2, -0.7), 0.1), std::domain_error);
  CHECK_THROWS_AS(eval_poly(PolyFamily::hermite(-1), 0.0), std::domain_error);
  CHECK_THROWS_AS(eval_poly(PolyFamily::hermite(kMaxPolyDegree + 1), 0.0),
                  std::domain_error);
}

TEST_CASE("eval_poly_log_scaled basics") {
  const SignedLog h0 = eval_poly_log_scaled(PolyFamily::hermite(0), 5.0);
  CHECK(h0.sign == 1);
  CHECK(h0.log_abs == doctest::Approx(0.0));

  const SignedLog h3 = eval_poly_log_scaled(PolyFamily::hermite(3), 2.0);
  CHECK(h3.sign == 1);
  CHECK(h3.log_abs == doctest::Approx(std::log(40.0)));
}

TEST_CASE("eval_poly_log_scaled matches the exact-integer oracle at n = 50") {
  const SignedLog got = eval_poly_log_scaled(PolyFamily::hermite(50), 10.0);
  const auto exact = hermite_exact(50, 10);
  const double log_exact =
      std::log(boost::multiprecision::abs(exact).convert_to<double>());
  CHECK(got.sign == (exact < 0 ? -1 : 1));
  CHECK(got.log_abs == doctest::Approx(log_exact).epsilon(1e-10));
}

TEST_CASE("eval_poly and eval_poly_log_scaled agree") {
  for (int n : {0, 1, 2, 5, 12, 19}) {
    for (double z : {-3.3, -0.7, 0.0, 0.4, 1.9, 6.2}) {
      const double direct = eval_poly(PolyFamily::hermite(n), z);
      const SignedLog scaled = eval_poly_log_scaled(PolyFamily::hermite(n), z);
      CHECK(scaled.value() == doctest::Approx(direct).epsilon(1e-12));

      const double lag = eval_poly(PolyFamily::laguerre(n, 0.5), std::abs(z));
      const SignedLog lag_s =
          eval_poly_log_scaled(PolyFamily::laguerre(n, 0.5), std::abs(z));
      CHECK(lag_s.value() == doctest::Approx(lag).epsilon(1e-12));
    }
  }
}

TEST_CASE("ln_gamma") {
  CHECK(ln_gamma(0.5) == doctest::Approx(0.5 * std::log(M_PI)).epsilon(1e-13));
  CHECK(ln_gamma(5.0) == doctest::Approx(std::log(24.0)).epsilon(1e-13));
  const double gamma75 =
      6.5 * 5.5 * 4.5 * 3.5 * 2.5 * 1.5 * 0.5 * std::sqrt(M_PI);
  CHECK(ln_gamma(7.5) == doctest::Approx(std::log(gamma75)).epsilon(1e-13));
  CHECK_THROWS_AS(ln_gamma(0.0), std::domain_error);
  CHECK_THROWS_AS(ln_gamma(-2.0), std::domain_error);
}

TEST_CASE("spherical_bessel closed forms") {
  CHECK(spherical_bessel(0, 0.0) == 1.0);
  CHECK(spherical_bessel(1, 0.0) == 0.0);
  CHECK(spherical_bessel(0, M_PI) == doctest::Approx(0.0).epsilon(1e-12));

  const double z = 1.3;
  const double j2 = (3.0 / (z * z * z) - 1.0 / z) * std::sin(z) -
                    3.0 / (z * z) * std::cos(z);
  CHECK(spherical_bessel(2, z) == doctest::Approx(j2).epsilon(1e-12));
}

TEST_CASE("spherical_bessel recurrence identity") {
  for (double z = 0.1; z <= 50.0; z *= 1.7) {
    for (int l : {1, 2, 5, 10, 25, 60}) {
      const double lhs = spherical_bessel(l - 1, z) + spherical_bessel(l + 1, z);
      const double rhs = (2.0 * l + 1.0) * spherical_bessel(l, z) / z;
      CHECK(lhs == doctest::Approx(rhs).epsilon(1e-10));
    }
  }
}

TEST_CASE("spherical_bessel matches the standard-library oracle") {
  for (double z : {0.05, 0.8, 3.0, 12.0, 77.0, 400.0}) {
    for (int l : {0, 1, 3, 8, 20, 50}) {
      CHECK(spherical_bessel(l, z) ==
            doctest::Approx(std::sph_bessel(unsigned(l), z)).epsilon(1e-10));
    }
  }
}

TEST_CASE("integrate handles the standard cases") {
  const auto exp_decay = integrate([](double z) { return std::exp(-z); }, 0.0, kInf);
  CHECK(exp_decay.value == doctest::Approx(1.0).epsilon(1e-10));

  const auto gaussian =
      integrate([](double z) { return std::exp(-z * z); }, -kInf, kInf);
  CHECK(gaussian.value == doctest::Approx(std::sqrt(M_PI)).epsilon(1e-10));

  const auto log_sing =
      integrate([](double z) { return z > 0.0 ? std::log(z) : 0.0; }, 0.0, 1.0);
  CHECK(log_sing.value == doctest::Approx(-1.0).epsilon(1e-8));
}

TEST_CASE("integrate reports exhaustion with the best estimate") {
  QuadratureSpec tiny;
  tiny.max_subdivisions = 2;
  tiny.rel_tol = 1e-14;
  tiny.abs_tol = 1e-16;
  CHECK_THROWS_AS(
      integrate([](double z) { return z > 0.0 ? std::log(z) * std::cos(40.0 * z) : 0.0; },
                0.0, 1.0, tiny),
      ConvergenceError);
}

TEST_CASE("integrate rejects invalid specs") {
  QuadratureSpec bad;
  bad.rel_tol = 0.0;
  CHECK_THROWS_AS(integrate([](double z) { return z; }, 0.0, 1.0, bad),
                  std::domain_error);
}

TEST_CASE("orthogonality of the three families") {
  QuadratureSpec spec;
  spec.abs_tol = 1e-11;
  // cross terms of unit-norm weighted polynomials must vanish; normalizing
  // first keeps the integrand O(1) so the absolute tolerance is meaningful
  auto check_family = [&](auto weighted, double a, double b) {
    std::vector<double> inv_norm(13);
    for (int n = 0; n <= 12; ++n) {
      const double dn = integrate(
          [&](double z) { return weighted(n, z) * weighted(n, z); }, a, b, spec)
                            .value;
      inv_norm[n] = 1.0 / std::sqrt(dn);
      for (int m = 0; m < n; ++m) {
        const auto cross = integrate(
            [&](double z) {
              return weighted(n, z) * inv_norm[n] * weighted(m, z) * inv_norm[m];
            },
            a, b, spec);
        CHECK(std::abs(cross.value) < 1e-9);
      }
    }
  };
  check_family(
      [](int k, double z) {
        return eval_poly(PolyFamily::hermite(k), z) * std::exp(-0.5 * z * z);
      },
      -kInf, kInf);
  check_family(
      [](int k, double z) {
        return eval_poly(PolyFamily::laguerre(k, 0.5), z) *
               std::pow(z, 0.25) * std::exp(-0.5 * z);
      },
      0.0, kInf);
  check_family(
      [](int k, double z) {
        return eval_poly(PolyFamily::gegenbauer(k, 1.5), z) *
               std::pow(1.0 - z * z, 0.5);
      },
      -1.0, 1.0);
}

TEST_CASE("Hermite squared norm") {
  for (int n = 0; n <= 20; ++n) {
    const auto norm = integrate(
        [&](double z) {
          const double h = eval_poly(PolyFamily::hermite(n), z);
          return h * h * std::exp(-z * z);
        },
        -kInf, kInf);
    const double expected = std::exp(0.5 * std::log(M_PI) + n * std::log(2.0) +
                                     std::lgamma(n + 1.0));
    CHECK(norm.value == doctest::Approx(expected).epsilon(1e-9));
  }
}

TEST_CASE("gauss_legendre integrates polynomials exactly") {
  const auto rule = gauss_legendre(7);
  double sum = 0.0;
  for (int i = 0; i < 7; ++i)
    sum += rule.weights[i] * std::pow(rule.nodes[i], 12);
  CHECK(sum == doctest::Approx(2.0 / 13.0).epsilon(1e-14));
}
