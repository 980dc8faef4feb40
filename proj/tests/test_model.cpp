#include <cmath>
#include <string>

#include "darboux/model.hpp"
#include "darboux/tables.hpp"
#include "doctest.h"

using namespace darboux;

namespace {

const std::string kGoldenDir = DARBOUX_GOLDEN_DIR;

// textbook form with the explicit subtraction, fine at moderate nu
double energy_naive(double lambda, double nu) {
  return -lambda * nu * nu + nu * std::sqrt(lambda * lambda * nu * nu + 1.0);
}

}  // namespace

TEST_CASE("flat limit recovers the harmonic oscillator ladder") {
  ModelParams p{0.0, 1.0, 1.0, 1};
  for (int n = 0; n <= 9; ++n) {
    CHECK(energy(p, QuantumNumbers::d1(n)) == doctest::Approx(n + 0.5).epsilon(1e-15));
    CHECK(frequency(p, QuantumNumbers::d1(n)) == doctest::Approx(1.0).epsilon(1e-15));
  }
  ModelParams p3{0.0, 1.0, 1.0, 3};
  CHECK(energy(p3, QuantumNumbers::d3(2, 1, 0)) ==
        doctest::Approx(2.0 * 2 + 1 + 1.5).epsilon(1e-15));
}

TEST_CASE("energy matches the subtraction form and the golden table") {
  for (double lambda : {0.025, 0.05, 0.1, 1.0}) {
    ModelParams p{lambda, 1.0, 1.0, 1};
    for (int n = 0; n <= 9; ++n) {
      const double nu = n + 0.5;
      CHECK(energy(p, QuantumNumbers::d1(n)) ==
            doctest::Approx(energy_naive(lambda, nu)).epsilon(1e-13));
    }
  }
  const TableGrid golden_e =
      load_golden_table(kGoldenDir + "/table1_energy.csv");
  const TableGrid golden_w =
      load_golden_table(kGoldenDir + "/table1_frequency.csv");
  for (size_t i = 0; i < golden_e.lambdas.size(); ++i) {
    ModelParams p{golden_e.lambdas[i], 1.0, 1.0, 1};
    for (size_t j = 0; j < golden_e.values[i].size(); ++j) {
      const QuantumNumbers q = QuantumNumbers::d1(static_cast<int>(j));
      CHECK(std::abs(energy(p, q) - golden_e.values[i][j]) < 5e-4);
      CHECK(std::abs(frequency(p, q) - golden_w.values[i][j]) < 5e-4);
    }
  }
}

TEST_CASE("spectrum is increasing and bounded by omega^2 / (2 lambda)") {
  ModelParams p{0.1, 1.0, 1.0, 1};
  const double bound = 1.0 / (2.0 * 0.1);
  double prev = -1.0;
  for (int n = 0; n <= 500; ++n) {
    const double e = energy(p, QuantumNumbers::d1(n));
    CHECK(e > prev);
    CHECK(e < bound);
    prev = e;
  }
}

TEST_CASE("frequency obeys omega^2 - 2 lambda E = Omega^2") {
  for (double lambda : {0.01, 0.1, 1.0, 10.0}) {
    ModelParams p{lambda, 1.0, 1.0, 3};
    for (int n : {0, 3, 9, 40}) {
      const QuantumNumbers q = QuantumNumbers::d3(n, 2, 1);
      const double e = energy(p, q);
      const double w = frequency(p, q);
      CHECK(w * w == doctest::Approx(1.0 - 2.0 * lambda * e).epsilon(1e-14));
    }
  }
}

TEST_CASE("energy depends on (n, l) only through 2n + l") {
  ModelParams p{0.07, 1.3, 1.0, 3};
  const double e1 = energy(p, QuantumNumbers::d3(3, 2, 0));  // 2n+l = 8
  const double e2 = energy(p, QuantumNumbers::d3(2, 4, 1));
  const double e3 = energy(p, QuantumNumbers::d3(0, 8, 8));
  CHECK(e1 == e2);  // bitwise: same nu feeds the same arithmetic
  CHECK(e1 == e3);
}

TEST_CASE("small lambda joins continuously to lambda = 0") {
  ModelParams flat{0.0, 1.0, 1.0, 1};
  ModelParams near{1e-12, 1.0, 1.0, 1};
  for (int n : {0, 5, 15}) {
    const QuantumNumbers q = QuantumNumbers::d1(n);
    CHECK(energy(near, q) == doctest::Approx(energy(flat, q)).epsilon(1e-10));
    CHECK(frequency(near, q) == doctest::Approx(frequency(flat, q)).epsilon(1e-10));
  }
}

TEST_CASE("potential saturates and the effective potential adds the barrier") {
  ModelParams p{0.5, 2.0, 1.0, 3};
  CHECK(potential(p, 0.0) == 0.0);
  CHECK(potential(p, 1.0) == doctest::Approx(0.5 * 4.0 / 1.5));
  CHECK(potential(p, 1e6) == doctest::Approx(4.0 / (2.0 * 0.5)).epsilon(1e-9));
  const double r = 0.8;
  const double L2 = 6.0;
  const double conf = 1.0 + 0.5 * r * r;
  CHECK(effective_potential(p, L2, r) ==
        doctest::Approx(0.5 * L2 / (r * r * conf) + potential(p, r)));
  CHECK_THROWS_AS(effective_potential(p, 1.0, 0.0), std::domain_error);
}

TEST_CASE("scalar curvature is non-positive, minimal at the origin, flat far out") {
  ModelParams p{0.3, 1.0, 1.0, 3};
  CHECK(scalar_curvature(p, 0.0) == doctest::Approx(-2.0 * 0.3 * 3 * 2));
  double prev = scalar_curvature(p, 0.0);
  for (double r : {0.5, 1.0, 2.0, 5.0, 20.0}) {
    const double cur = scalar_curvature(p, r);
    CHECK(cur <= 0.0);
    CHECK(cur >= prev);
    prev = cur;
  }
  CHECK(scalar_curvature(p, 1e4) == doctest::Approx(0.0).epsilon(1e-9));
  ModelParams p1{0.3, 1.0, 1.0, 1};
  CHECK(scalar_curvature(p1, 2.0) == 0.0);
}

TEST_CASE("parameter and quantum-number validation") {
  CHECK_THROWS_AS(energy({-0.1, 1.0, 1.0, 1}, QuantumNumbers::d1(0)),
                  std::domain_error);
  CHECK_THROWS_AS(energy({0.1, 0.0, 1.0, 1}, QuantumNumbers::d1(0)),
                  std::domain_error);
  CHECK_THROWS_AS(energy({0.1, 1.0, 1.0, 1}, QuantumNumbers::d1(-1)),
                  std::domain_error);
  CHECK_THROWS_AS(energy({0.1, 1.0, 1.0, 1}, QuantumNumbers::d3(0, 1, 0)),
                  std::domain_error);
  QuantumNumbers bad{1, 2, {2, 1, 3}};  // chain increases at the tail
  CHECK_THROWS_AS(bad.validate(4), std::domain_error);
  QuantumNumbers good{1, 2, {2, 1, 1}};
  CHECK_NOTHROW(good.validate(4));
}
