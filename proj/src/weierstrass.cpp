#include "rbeta/weierstrass.hpp"

#include <cmath>
#include <stdexcept>

namespace rbeta {

namespace {

constexpr int kMaxLaurentTerms = 64;
constexpr double kTermCutoff = 1e-18;

bool finite(Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

// Nearest integer to x, halves rounded toward zero.
double round_half_to_zero(double x) {
  const double t = std::trunc(x);
  return std::abs(x - t) == 0.5 ? t : std::round(x);
}

}  // namespace

NodeValue NodeValue::finite(Complex v) {
  if (!rbeta::finite(v)) throw std::invalid_argument("NodeValue: non-finite component");
  return NodeValue(v);
}

Complex NodeValue::value() const {
  if (!value_) throw std::logic_error("NodeValue: value() called on a pole");
  return *value_;
}

WeierstrassEvaluator::WeierstrassEvaluator(const CurveParams& params, const Lattice& lattice)
    : params_(params), lattice_(lattice) {
  if (!(lattice.omega1 > 0.0) || !(lattice.omega2_im > 0.0) ||
      !std::isfinite(lattice.omega1) || !std::isfinite(lattice.omega2_im)) {
    throw std::invalid_argument("lattice half-periods must be finite and positive");
  }
  const Lattice expected = compute_lattice(params);
  if (std::abs(expected.omega1 - lattice.omega1) > 1e-10 * expected.omega1 ||
      std::abs(expected.omega2_im - lattice.omega2_im) > 1e-10 * expected.omega2_im) {
    throw std::invalid_argument("lattice does not match curve parameters");
  }

  coeffs_.assign(kMaxLaurentTerms + 1, 0.0);
  coeffs_[2] = params.g2 / 20.0;
  coeffs_[3] = params.g3 / 28.0;
  for (int k = 4; k <= kMaxLaurentTerms; ++k) {
    double s = 0.0;
    for (int m = 2; m <= k - 2; ++m) s += coeffs_[m] * coeffs_[k - m];
    coeffs_[k] = 3.0 / ((2.0 * k + 1.0) * (k - 3.0)) * s;
  }
}

Complex WeierstrassEvaluator::reduce(Complex z) const {
  const double p1 = 2.0 * lattice_.omega1;
  const double p2 = 2.0 * lattice_.omega2_im;
  const double x = z.real() - p1 * round_half_to_zero(z.real() / p1);
  const double y = z.imag() - p2 * round_half_to_zero(z.imag() / p2);
  return {x, y};
}

WeierstrassEvaluator::Pair WeierstrassEvaluator::series(Complex u) const {
  const Complex u2 = u * u;
  Complex wp = 1.0 / u2;
  Complex dwp = -2.0 / (u2 * u);
  // power = u^(2k-2), starting at k = 2.
  Complex power = u2;
  int quiet = 0;
  for (int k = 2; k <= kMaxLaurentTerms; ++k) {
    const Complex term = coeffs_[k] * power;
    wp += term;
    dwp += (2.0 * k - 2.0) * term / u;
    if (std::abs(term) < kTermCutoff * std::abs(wp)) {
      // Two consecutive small terms: c_k can be tiny by accident.
      if (++quiet == 2) return {wp, dwp};
    } else {
      quiet = 0;
    }
    power *= u2;
  }
  throw std::runtime_error("Laurent series did not converge");
}

WeierstrassEvaluator::Values WeierstrassEvaluator::evaluate(Complex z) const {
  if (!finite(z)) throw std::invalid_argument("evaluate: z must be finite");
  const Complex r = reduce(z);
  const double tiny = pole_radius();
  if (std::abs(r) < tiny) return {NodeValue::pole(), NodeValue::pole()};

  int halvings = 0;
  Complex u = r;
  while (std::abs(u) >= series_radius()) {
    u *= 0.5;
    ++halvings;
  }
  auto [p, dp] = series(u);
  for (int i = 0; i < halvings; ++i) {
    // wp(2u) = -2 wp + q^2 and wp'(2u) = -wp' + q (6 wp - 2 q^2),
    // q = (6 wp^2 - g2/2) / (2 wp'); the second follows by differentiating the first.
    const Complex q = (6.0 * p * p - 0.5 * params_.g2) / (2.0 * dp);
    const Complex next_p = -2.0 * p + q * q;
    dp = -dp + q * (6.0 * p - 2.0 * q * q);
    p = next_p;
  }

  // At the half-periods wp is a root of the cubic and wp' vanishes; report both exactly.
  const Complex halves[] = {{lattice_.omega1, 0.0},
                            {0.0, lattice_.omega2_im},
                            {lattice_.omega1, lattice_.omega2_im}};
  const double roots[] = {params_.e1, params_.e3, params_.e2};
  for (int i = 0; i < 3; ++i) {
    const Complex h = halves[i];
    if (std::abs(std::abs(r.real()) - h.real()) < tiny &&
        std::abs(std::abs(r.imag()) - h.imag()) < tiny) {
      p = roots[i];
      dp = 0.0;
    }
  }
  return {NodeValue::finite(p), NodeValue::finite(dp)};
}

NodeValue WeierstrassEvaluator::essential_r(Complex z) const {
  const NodeValue v = wp(z);
  if (v.is_pole()) return v;
  return NodeValue::finite(v.value() - params_.alpha);
}

Complex WeierstrassEvaluator::log_deriv_sq(Complex z) const {
  const Values v = evaluate(z);
  if (v.wp.is_pole()) throw std::domain_error("log_deriv_sq: z is a pole of R");
  const Complex r = v.wp.value() - params_.alpha;
  if (std::abs(r) < 1e-12) throw std::domain_error("log_deriv_sq: z is a zero of R");
  const Complex ratio = v.wp_prime.value() / r;
  return ratio * ratio;
}

NodeValue wp(Complex z, const Lattice& lattice, const CurveParams& params) {
  return WeierstrassEvaluator(params, lattice).wp(z);
}

NodeValue wp_prime(Complex z, const Lattice& lattice, const CurveParams& params) {
  return WeierstrassEvaluator(params, lattice).wp_prime(z);
}

NodeValue essential_r(Complex z, const Lattice& lattice, const CurveParams& params) {
  return WeierstrassEvaluator(params, lattice).essential_r(z);
}

Complex log_deriv_sq(Complex z, const Lattice& lattice, const CurveParams& params) {
  return WeierstrassEvaluator(params, lattice).log_deriv_sq(z);
}

Complex wp_lattice_sum_oracle(Complex z, const Lattice& lattice, int cutoff) {
  if (cutoff < 10) throw std::invalid_argument("lattice sum: cutoff must be >= 10");
  if (!finite(z)) throw std::invalid_argument("lattice sum: z must be finite");
  if (z == Complex(0.0)) throw std::domain_error("lattice sum: z is a lattice point");

  const Complex p1(2.0 * lattice.omega1, 0.0);
  const Complex p2(0.0, 2.0 * lattice.omega2_im);
  auto term = [&](int m, int n) {
    const Complex w = double(m) * p1 + double(n) * p2;
    const Complex dz = z - w;
    if (dz == Complex(0.0)) throw std::domain_error("lattice sum: z is a lattice point");
    return 1.0 / (dz * dz) - 1.0 / (w * w);
  };

  Complex total = 1.0 / (z * z);
  for (int k = 1; k <= cutoff; ++k) {
    Complex shell = 0.0;
    for (int j = -k; j <= k; ++j) {
      shell += term(j, k) + term(j, -k);
    }
    for (int j = -k + 1; j <= k - 1; ++j) {
      shell += term(k, j) + term(-k, j);
    }
    total += shell;
  }
  return total;
}

}  // namespace rbeta
