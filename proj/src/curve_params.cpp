#include "rbeta/curve_params.hpp"

#include <cmath>
#include <string>

namespace rbeta {

Beta::Beta(double value) : value_(value) {
  if (!std::isfinite(value) || !(value > 1.0)) {
    throw std::domain_error("beta must be a finite real number > 1, got " +
                            std::to_string(value));
  }
}

CurveParams derive_params(Beta b) {
  const double beta = b.value();
  const double inv = 1.0 / beta;

  CurveParams p{};
  p.beta = beta;
  p.alpha = (beta + inv) / 3.0;
  p.d = beta - inv;
  p.delta = std::sqrt(beta / p.d);
  p.e1 = p.alpha;
  p.e2 = p.alpha - inv;
  p.e3 = p.alpha - beta;
  p.g2 = -4.0 * (p.e1 * p.e2 + p.e1 * p.e3 + p.e2 * p.e3);
  p.g3 = 4.0 * p.e1 * p.e2 * p.e3;
  // Discriminant of the monic cubic with roots 0, -1/beta, -beta is
  // (beta * (1/beta) * (beta - 1/beta))^2.
  p.discriminant_sqrt = p.d;
  return p;
}

}  // namespace rbeta
