#pragma once

#include <complex>
#include <optional>
#include <vector>

#include "rbeta/curve_params.hpp"
#include "rbeta/lattice.hpp"

namespace rbeta {

using Complex = std::complex<double>;

/// Either a finite complex value or the pole (the "infinity" of the grid).
class NodeValue {
 public:
  /// Default-constructed values are poles.
  NodeValue() = default;
  static NodeValue pole() { return NodeValue(); }
  static NodeValue finite(Complex v);

  bool is_pole() const { return !value_.has_value(); }
  bool is_finite() const { return value_.has_value(); }

  /// Throws std::logic_error on a pole.
  Complex value() const;

  friend bool operator==(const NodeValue&, const NodeValue&) = default;

 private:
  explicit NodeValue(Complex v) : value_(v) {}
  std::optional<Complex> value_;
};

/// Weierstrass wp and wp' on a rectangular lattice, by Laurent series around
/// the origin combined with argument halving and the duplication formula.
///
/// Instances are immutable; evaluation is thread-safe.
class WeierstrassEvaluator {
 public:
  /// Throws std::invalid_argument if the lattice does not belong to params.
  WeierstrassEvaluator(const CurveParams& params, const Lattice& lattice);

  struct Values {
    NodeValue wp;
    NodeValue wp_prime;
  };

  /// wp and wp' at z; z must be finite.
  Values evaluate(Complex z) const;

  NodeValue wp(Complex z) const { return evaluate(z).wp; }
  NodeValue wp_prime(Complex z) const { return evaluate(z).wp_prime; }

  /// R = wp - alpha.
  NodeValue essential_r(Complex z) const;

  /// (R'(z) / R(z))^2. Throws std::domain_error at poles and zeros of R.
  Complex log_deriv_sq(Complex z) const;

  /// Representative of z in the cell |Re| <= omega1, |Im| <= omega2_im,
  /// rounding to the nearest period translate with ties toward the origin.
  Complex reduce(Complex z) const;

  const CurveParams& params() const { return params_; }
  const Lattice& lattice() const { return lattice_; }
  const std::vector<double>& laurent_coefficients() const { return coeffs_; }

  /// Radius inside which the Laurent series is summed directly.
  double series_radius() const { return 0.4 * lattice_.min_period(); }
  double pole_radius() const { return 1e-12 * lattice_.min_period(); }

 private:
  struct Pair {
    Complex wp;
    Complex wp_prime;
  };
  Pair series(Complex u) const;

  CurveParams params_;
  Lattice lattice_;
  // coeffs_[k] = c_k in wp(z) = 1/z^2 + sum_{k>=2} c_k z^(2k-2); entries 0, 1 unused.
  std::vector<double> coeffs_;
};

NodeValue wp(Complex z, const Lattice& lattice, const CurveParams& params);
NodeValue wp_prime(Complex z, const Lattice& lattice, const CurveParams& params);
NodeValue essential_r(Complex z, const Lattice& lattice, const CurveParams& params);
Complex log_deriv_sq(Complex z, const Lattice& lattice, const CurveParams& params);

/// Slow independent value of wp(z): the Eisenstein sum over the lattice
/// points w = 2m omega1 + 2n omega2 with 0 < max(|m|,|n|) <= cutoff,
/// accumulated shell by shell. The truncation error decays like 1/cutoff^2.
/// Throws std::invalid_argument for cutoff < 10 and std::domain_error when z
/// is a lattice point.
Complex wp_lattice_sum_oracle(Complex z, const Lattice& lattice, int cutoff);

}  // namespace rbeta
