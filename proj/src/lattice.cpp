#include "rbeta/lattice.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace rbeta {

double agm(double a, double b) {
  if (!(a > 0.0) || !(b > 0.0) || !std::isfinite(a) || !std::isfinite(b)) {
    throw std::domain_error("agm: arguments must be finite and positive");
  }
  constexpr double eps = std::numeric_limits<double>::epsilon();
  for (int i = 0; i < kAgmMaxIterations; ++i) {
    if (std::abs(a - b) <= 4.0 * eps * a) return 0.5 * (a + b);
    const double next_a = 0.5 * (a + b);
    b = std::sqrt(a * b);
    a = next_a;
  }
  throw std::runtime_error("agm: no convergence within iteration cutoff");
}

Lattice compute_lattice(const CurveParams& p) {
  if (!(p.e1 > p.e2 && p.e2 > p.e3)) {
    throw std::domain_error("compute_lattice: cubic roots must be real and distinct");
  }
  // e1 - e3 = beta, e1 - e2 = 1/beta, e2 - e3 = d; use the exact forms.
  const double s13 = std::sqrt(p.beta);
  const double s12 = std::sqrt(1.0 / p.beta);
  const double s23 = std::sqrt(p.d);
  constexpr double half_pi = 0.5 * std::numbers::pi;
  return Lattice{half_pi / agm(s13, s12), half_pi / agm(s13, s23)};
}

}  // namespace rbeta
