#include <algorithm>
#include <cmath>

#include "doctest.h"
#include "rbeta/verifier.hpp"
#include "test_support.hpp"

using namespace rbeta;
using rbeta::testing::Setup;

namespace {

const PropertyResult& find(const std::vector<PropertyResult>& v, const std::string& name) {
  auto it = std::find_if(v.begin(), v.end(), [&](const auto& p) { return p.name == name; });
  REQUIRE(it != v.end());
  return *it;
}

}  // namespace

TEST_CASE("scaled error") {
  CHECK(scaled_error(NodeValue::pole(), NodeValue::pole()) == 0.0);
  CHECK(std::isinf(scaled_error(NodeValue::pole(), NodeValue::finite(1.0))));
  CHECK(std::isinf(scaled_error(NodeValue::finite(1.0), NodeValue::pole())));
  CHECK(scaled_error(NodeValue::finite(0.5), NodeValue::finite(0.6)) == doctest::Approx(0.1));
  CHECK(scaled_error(NodeValue::finite(10.0), NodeValue::finite(11.0)) == doctest::Approx(0.1));
}

TEST_CASE("verify_grid passes across beta") {
  for (double beta : {1.2, 1.5, rbeta::testing::kGoldenBeta, 3.0, 10.0}) {
    CAPTURE(beta);
    const VerificationReport r = verify_grid(Beta(beta));
    CHECK(r.per_node.size() == 81);
    CHECK(r.verdict == Verdict::pass);
    CHECK_FALSE(r.orientation_flipped);
    CHECK(r.max_rel_err() < 1e-9);
    for (const auto& p : r.property_results) {
      CAPTURE(p.name);
      CAPTURE(p.detail);
      CHECK(p.pass);
    }
  }
  CHECK_THROWS_AS(verify_grid(Beta(3.0), 0.0), std::invalid_argument);
}

TEST_CASE("a tolerance below attainable accuracy fails the grid") {
  const VerificationReport r = verify_grid(Beta(3.0), 1e-300);
  CHECK(r.verdict == Verdict::fail);
}

TEST_CASE("flipped orientation is detected") {
  const Setup s(3.0);
  const ClosedFormTable t = grid_table(s.params);
  NodeGrid g = numeric_grid(s.ev);
  CHECK_FALSE(detect_flipped_orientation(t, g, 1e-9));
  const NodeGrid copy = g;
  for (int m = 0; m < 9; ++m)
    for (int n = 0; n < 9; ++n) g[m][n] = copy[m][8 - n];
  CHECK(detect_flipped_orientation(t, g, 1e-9));
}

TEST_CASE("half-argument oracle reproduces the grid") {
  for (double beta : {1.2, 3.0, 10.0}) {
    CAPTURE(beta);
    const Setup s(beta);
    const HalfArgumentGrid h = half_argument_oracle(s.params, s.lattice);
    const ClosedFormTable t = grid_table(s.params);
    for (int m = 0; m < 9; ++m)
      for (int n = 0; n < 9; ++n) {
        CHECK_FALSE(h.inconclusive[m][n]);
        CHECK(scaled_error(t.at(m, n).value, h.values[m][n]) < 1e-8);
      }
  }
}

TEST_CASE("claims") {
  for (double beta : {1.2, rbeta::testing::kGoldenBeta, 3.0, 10.0}) {
    CAPTURE(beta);
    const auto claims = verify_claims(Beta(beta));
    for (const char* name :
         {"log_deriv_sq_is_4d_at_centers", "centers_on_both_circles", "circles_orthogonal",
          "unit_values_at_order4_nodes", "discriminant_link", "red_circle_inversion",
          "unit_circle_inversion"}) {
      const auto& p = find(claims, name);
      CAPTURE(p.name);
      CAPTURE(p.detail);
      CHECK(p.pass);
    }
    CHECK(find(claims, "unit_values_at_order4_nodes").detail ==
          "+1 at (2,0)(6,0)(2,8)(6,8); -1 at (2,4)(6,4)");
  }
}

TEST_CASE("verify_all and sweep") {
  const VerificationReport r = verify_all(Beta(2.0));
  CHECK(r.verdict == Verdict::pass);
  CHECK(r.property_results.size() >= 11);
  const auto reports = sweep(1.5, 4.5, 4);
  REQUIRE(reports.size() == 4);
  CHECK(reports.front().beta == 1.5);
  CHECK(reports.back().beta == 4.5);
  CHECK(reports[1].beta == doctest::Approx(2.5));
  for (const auto& rep : reports) CHECK(rep.verdict == Verdict::pass);
  CHECK(sweep(2.0, 2.0, 1).size() == 1);
  CHECK_THROWS_AS(sweep(2.0, 3.0, 0), std::invalid_argument);
  CHECK_THROWS_AS(sweep(3.0, 2.0, 2), std::invalid_argument);
}
