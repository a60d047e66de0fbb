#include <cmath>
#include <numbers>
#include <random>

#include "doctest.h"
#include "rbeta/lattice.hpp"
#include "test_support.hpp"

using namespace rbeta;

namespace {

// Complete elliptic integral by the trapezoid rule in the angle variable:
//   int_0^inf ds / sqrt((s^2+a)(s^2+b)),  s = tan(theta).
// The integrand is smooth and periodic in theta, so the rule converges
// geometrically. Independent of any AGM.
double quarter_period_quadrature(double a, double b) {
  const int n = 4000;
  const double h = std::numbers::pi / n;
  double sum = 0.0;
  for (int k = 0; k < n; ++k) {
    const double t = k * h;
    const double c = std::cos(t), s = std::sin(t);
    sum += 1.0 / std::sqrt((a * c * c + s * s) * (b * c * c + s * s));
  }
  return 0.5 * sum * h;  // integral over [0, pi) is twice the one over [0, pi/2)
}

}  // namespace

TEST_CASE("agm basics") {
  for (double x : {1e-3, 0.5, 1.0, 7.25, 1e6}) CHECK(agm(x, x) == x);
  // Frozen from a 40-digit reference computation.
  CHECK(agm(1.0, 2.0) == doctest::Approx(1.4567910310469068692).epsilon(1e-15));
  CHECK(agm(1.0, 2.0) == agm(2.0, 1.0));
  CHECK_THROWS_AS(agm(0.0, 1.0), std::domain_error);
  CHECK_THROWS_AS(agm(1.0, -2.0), std::domain_error);
  CHECK_THROWS_AS(agm(std::nan(""), 1.0), std::domain_error);
}

TEST_CASE("agm scaling and sandwich") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(0.01, 100.0);
  for (int i = 0; i < 200; ++i) {
    const double a = u(rng), b = u(rng), k = u(rng);
    CHECK(std::abs(agm(k * a, k * b) - k * agm(a, b)) <= 1e-14 * k * agm(a, b));
    // Iterates of the mean stay nested: b_n <= b_{n+1} <= a_{n+1} <= a_n.
    double x = std::max(a, b), y = std::min(a, b);
    for (int step = 0; step < 10; ++step) {
      const double nx = 0.5 * (x + y), ny = std::sqrt(x * y);
      CHECK(y <= ny);
      CHECK(ny <= nx * (1.0 + 1e-15));
      CHECK(nx <= x);
      x = nx;
      y = ny;
    }
    CHECK(agm(a, b) >= std::min(a, b));
    CHECK(agm(a, b) <= std::max(a, b));
  }
}

TEST_CASE("half-periods for golden beta and beta = 3") {
  const Lattice golden = compute_lattice(derive_params(Beta(testing::kGoldenBeta)));
  const double beta = testing::kGoldenBeta;
  CHECK(std::abs(agm(std::sqrt(beta), 1.0 / std::sqrt(beta)) - 1.05819396894001295703) < 1e-15);
  // Reference values: 40-digit computation through Jacobi sn.
  CHECK(golden.omega1 == doctest::Approx(1.4844124734223864529).epsilon(1e-14));
  CHECK(golden.omega2_im == doctest::Approx(1.0094529099892116078).epsilon(1e-14));

  const Lattice three = compute_lattice(derive_params(Beta(3.0)));
  CHECK(three.omega1 == doctest::Approx(1.4599026317063392046).epsilon(1e-14));
  CHECK(three.omega2_im == doctest::Approx(0.93379866719666934579).epsilon(1e-14));
  CHECK(three.omega2_im ==
        doctest::Approx(std::numbers::pi / (2.0 * agm(std::sqrt(3.0), std::sqrt(8.0 / 3.0))))
            .epsilon(1e-15));
}

TEST_CASE("half-periods agree with direct quadrature") {
  for (double beta : {1.2, 1.5, testing::kGoldenBeta, 3.0, 10.0, 40.0}) {
    const CurveParams p = derive_params(Beta(beta));
    const Lattice lat = compute_lattice(p);
    CAPTURE(beta);
    // omega1 = int_{e1}^inf dt / sqrt(4 (t-e1)(t-e2)(t-e3)), t = e1 + s^2.
    CHECK(lat.omega1 == doctest::Approx(quarter_period_quadrature(p.e1 - p.e2, p.e1 - p.e3))
                            .epsilon(1e-12));
    // omega2_im = int_{-inf}^{e3} dt / sqrt(-4 (t-e1)(t-e2)(t-e3)), t = e3 - s^2.
    CHECK(lat.omega2_im ==
          doctest::Approx(quarter_period_quadrature(p.e1 - p.e3, p.e2 - p.e3)).epsilon(1e-12));
    CHECK(lat.omega1 > 0.0);
    CHECK(lat.omega2_im > 0.0);
  }
}
