#include <cmath>
#include <random>
#include <set>

#include "doctest.h"
#include "rbeta/closed_forms.hpp"
#include "test_support.hpp"

using namespace rbeta;
using rbeta::testing::Setup;

namespace {

// Plain bisection on x^3 - x^2 - x - 1.
double bisect_tribonacci() {
  double lo = 1.0, hi = 2.0;
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (mid * mid * mid - mid * mid - mid - 1.0 > 0.0) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace

TEST_CASE("ascending sequence") {
  const auto s = ascending_sequence(3.0);
  CHECK(s[0] == doctest::Approx(-1.0));
  CHECK(s[1] == doctest::Approx(1.0 - std::sqrt(4.0 / 3.0)));
  CHECK(s[2] == doctest::Approx(1.0 + std::sqrt(4.0 / 3.0)));
  CHECK(s[3] == doctest::Approx(3.0));
  CHECK_THROWS_AS(ascending_sequence(1.0), std::domain_error);
  CHECK_THROWS_AS(ascending_sequence(0.5), std::domain_error);
  CHECK_THROWS_AS(ascending_sequence(INFINITY), std::domain_error);
  std::mt19937_64 rng(8);
  std::uniform_real_distribution<double> u(1.0 + 1e-9, 100.0);
  for (int i = 0; i < 200; ++i) {
    const auto a = ascending_sequence(u(rng));
    CHECK(a[0] < a[1]);
    CHECK(a[1] < a[2]);
    CHECK(a[2] < a[3]);
  }
}

TEST_CASE("tribonacci constant") {
  const double b = tribonacci_b();
  CHECK(std::abs(b - bisect_tribonacci()) < 4e-16);
  CHECK(std::abs(b - 1.839286755214161132551852564653286600424) < 4e-16);
  CHECK(std::abs(b * b * b - b * b - b - 1.0) < 1e-14);
}

TEST_CASE("order-8 radicand") {
  const double b = tribonacci_b();
  CHECK(std::abs(order8_radicand(b)) < 1e-15);
  // Double root: quadratic growth with curvature near 0.78.
  for (double h : {1e-3, 1e-4, 1e-5}) {
    CHECK(order8_radicand(b + h) > 0.0);
    CHECK(order8_radicand(b - h) > 0.0);
    CHECK(order8_radicand(b + h) / (h * h) == doctest::Approx(0.39).epsilon(0.02));
  }
  CHECK(order8_radicand(3.0) == doctest::Approx(3.0 / std::sqrt(2.0) - 0.5 - std::sqrt(2.0)));
  CHECK_THROWS_AS(order8_radicand(1.0), std::domain_error);
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> u(1.001, 50.0);
  for (int i = 0; i < 200; ++i) CHECK(order8_radicand(u(rng)) >= 0.0);
}

TEST_CASE("catalog at beta = 3") {
  const CurveParams p = derive_params(Beta(3.0));
  const RadicalCatalog c = build_catalog(p);
  const double delta = p.delta;
  CHECK(c.gamma_minus_r == doctest::Approx(1.0 - 1.0 / delta));
  CHECK(c.gamma.imag() == doctest::Approx(-3.0 / delta));
  CHECK(c.beta_pm[0] == doctest::Approx(1.0 - std::sqrt(2.0 / 3.0)));
  CHECK(c.beta_pm[1] == doctest::Approx(1.0 + std::sqrt(2.0 / 3.0)));
  CHECK(c.gamma0 == Complex(1.0, -std::sqrt(2.0)));
  CHECK(c.b_const == tribonacci_b());
  CHECK_FALSE(c.near_singular);
  CHECK(build_catalog(derive_params(Beta(1.0 + 1e-7))).near_singular);

  const Complex g41(-2.1651304620876784075, 0.95112190192041299615);
  const Complex g42(-0.38715428774311499095, 0.17007331841787306122);
  const Complex g43(0.048878098079587003847, 0.19845519892717976467);
  const Complex g44(1.1700733184178730612, 4.7507399487579731631);
  CHECK(rbeta::testing::rel_diff(c.gamma41, g41) < 1e-13);
  CHECK(rbeta::testing::rel_diff(c.gamma42, g42) < 1e-13);
  CHECK(rbeta::testing::rel_diff(c.gamma43, g43) < 1e-13);
  CHECK(rbeta::testing::rel_diff(c.gamma44, g44) < 1e-13);
  CHECK(gamma4(p, 43) == c.gamma43);
  CHECK_THROWS_AS(gamma4(p, 40), std::invalid_argument);
  CHECK_THROWS_AS(gamma4(p, 45), std::invalid_argument);
}

TEST_CASE("catalog entries") {
  const RadicalCatalog c = build_catalog(derive_params(Beta(2.5)));
  const auto entries = catalog_entries(c);
  CHECK(entries.size() == 27);
  std::set<std::string> names;
  for (const auto& e : entries) {
    names.insert(e.name);
    CHECK(std::isfinite(e.value.real()));
    CHECK(std::isfinite(e.value.imag()));
  }
  CHECK(names.size() == entries.size());
  CHECK(names.count("gamma_-") == 1);
  CHECK(names.count("gamma^-") == 1);
}

TEST_CASE("orderings and identities over random beta") {
  std::mt19937_64 rng(2024);
  std::uniform_real_distribution<double> u(1.0 + 1e-3, 50.0);
  for (int i = 0; i < 100; ++i) {
    const double beta = u(rng);
    CAPTURE(beta);
    const CurveParams p = derive_params(Beta(beta));
    const RadicalCatalog c = build_catalog(p);
    CHECK(c.gamma_minus_r < c.gamma_plus_r);
    CHECK(c.beta_pm[0] < c.beta_pm[1]);
    CHECK(c.delta_pm[0] < c.delta_pm[1]);
    CHECK(c.beta_pm[0] * c.beta_pm[1] == doctest::Approx(1.0 / beta));
    CHECK(c.gamma_minus_r * c.gamma_plus_r == doctest::Approx(1.0 - 1.0 / p.delta / p.delta));
    // The half-rectangle center value lies on the unit circle.
    CHECK(std::abs(std::abs(c.gamma / beta) - 1.0) < 1e-12);
    // Structural relation between gamma41 and gamma42.
    const double h = std::sqrt((beta + 1.0) / 2.0);
    const Complex lhs = (c.gamma41 + 1.0) / (1.0 - h) + std::conj((c.gamma42 + 1.0) / (1.0 - h));
    const Complex rhs(2.0 * (1.0 - 1.0 / beta), -2.0 * std::sqrt(1.0 - 1.0 / (beta * beta)));
    CHECK(std::abs(lhs - rhs) < 1e-9 * (1.0 + std::abs(rhs)));
  }
}

TEST_CASE("grid table: structure") {
  const CurveParams p = derive_params(Beta(3.0));
  const ClosedFormTable t = grid_table(p);
  for (int m : {0, 8})
    for (int n : {0, 8}) CHECK(t.at(m, n).value.is_pole());
  int poles = 0;
  for (int m = 0; m < 9; ++m)
    for (int n = 0; n < 9; ++n) {
      const auto& e = t.at(m, n);
      if (e.value.is_pole()) {
        ++poles;
        CHECK(e.symbol == "inf");
        continue;
      }
      // Reflections in both axes conjugate; the point reflection fixes.
      const auto& mirror_n = t.at(m, 8 - n);
      const auto& mirror_m = t.at(8 - m, n);
      CHECK(std::abs(mirror_n.value.value() - std::conj(e.value.value())) < 1e-14 * (1 + std::abs(e.value.value())));
      CHECK(std::abs(mirror_m.value.value() - std::conj(e.value.value())) < 1e-14 * (1 + std::abs(e.value.value())));
    }
  CHECK(poles == 4);
  // Row 4 at beta = 3.
  CHECK(t.at(0, 4).value.value() == Complex(-3.0));
  CHECK(t.at(2, 4).value.value() == Complex(-1.0));
  CHECK(t.at(4, 4).value.value().real() == doctest::Approx(-1.0 / 3.0));
  CHECK(t.at(1, 4).value.value().real() == doctest::Approx(-1.0 * (1.0 + std::sqrt(4.0 / 3.0))));
  CHECK(t.at(4, 0).symbol == "0");
  CHECK(t.at(2, 2).symbol == "-conj(gamma)/beta");
  CHECK(t.at(6, 2).symbol == "-gamma/beta");
  CHECK(t.at(2, 6).symbol == "-gamma/beta");
  CHECK(t.at(6, 6).symbol == "-conj(gamma)/beta");
  CHECK(t.at(7, 3).symbol == "gamma41");
  CHECK(t.at(7, 5).symbol == "conj(gamma41)");
  CHECK(t.at(1, 2).symbol == "-beta^+*conj(gamma0)");
}

TEST_CASE("grid table matches the evaluator at every node") {
  for (double beta : {1.05, 1.5, rbeta::testing::kGoldenBeta, 2.0, 3.0, 7.0, 25.0}) {
    CAPTURE(beta);
    const Setup s(beta);
    const ClosedFormTable t = grid_table(s.params);
    for (int m = 0; m < 9; ++m)
      for (int n = 0; n < 9; ++n) {
        CAPTURE(m);
        CAPTURE(n);
        const NodeValue numeric = s.ev.essential_r(s.node(m, n));
        const NodeValue& closed = t.at(m, n).value;
        REQUIRE(numeric.is_pole() == closed.is_pole());
        if (closed.is_finite())
          CHECK(rbeta::testing::scaled_diff(closed.value(), numeric.value()) < 1e-9);
      }
  }
}

TEST_CASE("order-8 values stay continuous across b") {
  const double b = tribonacci_b();
  Complex prev43{}, prev44{};
  double worst_jump = 0.0;
  for (int k = -50; k <= 50; ++k) {
    const double beta = b + k * 1e-6;
    const CurveParams p = derive_params(Beta(beta));
    const Complex g43 = gamma4(p, 43), g44 = gamma4(p, 44);
    if (k > -50) {
      worst_jump = std::max(worst_jump, std::abs(g43 - prev43));
      worst_jump = std::max(worst_jump, std::abs(g44 - prev44));
    }
    prev43 = g43;
    prev44 = g44;
  }
  CHECK(worst_jump < 1e-5);
  // Right at b the signed radical vanishes on both sides.
  const Setup s(b);
  const ClosedFormTable t = grid_table(s.params);
  CHECK(rbeta::testing::scaled_diff(t.at(5, 1).value.value(),
                                    s.ev.essential_r(s.node(5, 1)).value()) < 1e-9);
}
