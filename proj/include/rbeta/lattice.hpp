#pragma once

#include "rbeta/curve_params.hpp"

namespace rbeta {

/// Arithmetic-geometric mean of two positive reals.
///
/// Throws std::domain_error for non-positive input and std::runtime_error if
/// the iteration has not met its cutoff after kAgmMaxIterations steps.
double agm(double a, double b);

inline constexpr int kAgmMaxIterations = 64;

/// Rectangular period lattice: half-periods omega1 (real) and
/// omega2 = i * omega2_im. Full periods are 2 omega1 and 2 omega2.
struct Lattice {
  double omega1;
  double omega2_im;

  double min_period() const {
    return 2.0 * (omega1 < omega2_im ? omega1 : omega2_im);
  }
};

Lattice compute_lattice(const CurveParams& params);

}  // namespace rbeta
