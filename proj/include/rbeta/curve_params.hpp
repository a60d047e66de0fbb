#pragma once

#include <stdexcept>

namespace rbeta {

/// Real parameter of the essential elliptic function; strictly greater than 1.
class Beta {
 public:
  explicit Beta(double value);

  double value() const { return value_; }

  /// Below this the 1/sqrt(beta - 1) terms in the order-8 radicals lose
  /// most of their digits. Construction still succeeds.
  static constexpr double kPracticalFloor = 1.0 + 1e-6;
  bool below_practical_floor() const { return value_ < kPracticalFloor; }

 private:
  double value_;
};

/// Scalars derived from beta.
///
/// R = wp - alpha solves R'^2 = 4 R (R + beta) (R + 1/beta), so the roots of
/// the Weierstrass cubic 4x^3 - g2 x - g3 are e1 = alpha, e2 = alpha - 1/beta,
/// e3 = alpha - beta.
struct CurveParams {
  double beta;
  double alpha;
  double d;      // beta - 1/beta
  double delta;  // sqrt(beta / d)
  double e1, e2, e3;
  double g2, g3;
  /// Square root of the discriminant of x (x + beta) (x + 1/beta); equals d.
  double discriminant_sqrt;
};

CurveParams derive_params(Beta beta);

}  // namespace rbeta
