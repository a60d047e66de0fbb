#pragma once

#include <array>
#include <string>
#include <vector>

#include "rbeta/curve_params.hpp"
#include "rbeta/weierstrass.hpp"

namespace rbeta {

/// (x0, x1, x2, x3) = (1 - sqrt(x+1), 1 - sqrt(1+1/x), 1 + sqrt(1+1/x), 1 + sqrt(x+1)),
/// strictly ascending for x > 1. Throws std::domain_error otherwise.
std::array<double, 4> ascending_sequence(double x);

/// Real root of x^3 - x^2 - x - 1, from its Cardano form.
double tribonacci_b();

/// Every radical constant attached to the eighth-period values.
///
/// Naming: a trailing _r marks the real gamma^-/gamma^+ (1 -/+ 1/delta);
/// gamma_lo/gamma_hi are the complex gamma_-/gamma_+ built from delta^-/delta^+.
struct RadicalCatalog {
  double gamma_minus_r;
  double gamma_plus_r;
  Complex gamma;  // 1 - i beta/delta
  std::array<double, 4> beta_seq;
  std::array<double, 4> delta_seq;
  double gamma02, gamma13, gamma01, gamma23;
  std::array<double, 2> beta_pm;   // {beta^-, beta^+}
  std::array<double, 2> delta_pm;  // {delta^-, delta^+}
  Complex gamma0;
  Complex gamma_lo;
  Complex gamma_hi;
  Complex gamma41, gamma42, gamma43, gamma44;
  double b_const;
  /// Set when beta is below Beta::kPracticalFloor.
  bool near_singular;
};

RadicalCatalog build_catalog(const CurveParams& params);

/// A named catalog member, for reports and listings.
struct NamedConstant {
  std::string name;
  Complex value;
};

/// All catalog members in declaration order, one entry per defined symbol.
std::vector<NamedConstant> catalog_entries(const RadicalCatalog& catalog);

/// beta/sqrt(beta-1) - 1/sqrt(beta+1) - sqrt(2), evaluated in double-double.
/// Non-negative with a double root at tribonacci_b(); no clamping applied.
double order8_radicand(double beta);

/// gamma_41 .. gamma_44; `which` is one of 41, 42, 43, 44.
Complex gamma4(const CurveParams& params, int which);

struct TableEntry {
  std::string symbol;
  NodeValue value = NodeValue::pole();
};

/// The 81 values of R at (m omega1 + n omega2) / 4, m, n = 0..8.
class ClosedFormTable {
 public:
  static constexpr int kSize = 9;

  const TableEntry& at(int m, int n) const { return rows_.at(n).at(m); }
  TableEntry& at(int m, int n) { return rows_.at(n).at(m); }

 private:
  std::array<std::array<TableEntry, kSize>, kSize> rows_{};
};

ClosedFormTable grid_table(const CurveParams& params);
ClosedFormTable grid_table(const CurveParams& params, const RadicalCatalog& catalog);

}  // namespace rbeta
