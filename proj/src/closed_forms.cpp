#include "rbeta/closed_forms.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "rbeta/double_double.hpp"

namespace rbeta {

namespace {

constexpr Complex kI{0.0, 1.0};
constexpr double kRadicandClamp = 1e-12;

// Radicals shared by gamma_41..gamma_44; computing them once keeps the
// four formulas consistent with each other to the last bit.
struct Order8Radicals {
  double inv_beta;
  double h;            // sqrt((beta+1)/2)
  double q;            // sqrt(1 - 1/beta^2)
  double k_plus;       // sqrt(beta+1) sqrt(sqrt(beta+1) + sqrt2) / beta
  double k_minus;      // sqrt(beta+1) sqrt(sqrt(beta+1) - sqrt2) / beta
  double root_a;       // sqrt(A - B + sqrt2)
  double root_b;       // sqrt(A + B - sqrt2)
  double signed_root;  // sgn(beta - b) sqrt(A - B - sqrt2)
  double root_d;       // sqrt(A + B + sqrt2)
};
// with A = beta/sqrt(beta-1), B = 1/sqrt(beta+1).

Order8Radicals order8_radicals(double beta) {
  const DoubleDouble bb(beta);
  const DoubleDouble sqrt2 = sqrt(DoubleDouble(2.0));
  const DoubleDouble sp = sqrt(bb + DoubleDouble(1.0));
  const DoubleDouble a = bb / sqrt(bb - DoubleDouble(1.0));
  const DoubleDouble b = DoubleDouble(1.0) / sp;

  double f = (a - b - sqrt2).to_double();
  if (f < 0.0) {
    if (f < -kRadicandClamp) {
      throw std::runtime_error("order-8 radicand unexpectedly negative: " + std::to_string(f));
    }
    f = 0.0;
  }
  const double sgn = beta >= tribonacci_b() ? 1.0 : -1.0;

  Order8Radicals r{};
  r.inv_beta = 1.0 / beta;
  r.h = std::sqrt((beta + 1.0) / 2.0);
  r.q = std::sqrt(1.0 - r.inv_beta * r.inv_beta);
  const double spd = sp.to_double();
  r.k_plus = spd * std::sqrt((sp + sqrt2).to_double()) / beta;
  r.k_minus = spd * std::sqrt((sp - sqrt2).to_double()) / beta;
  r.root_a = std::sqrt((a - b + sqrt2).to_double());
  r.root_b = std::sqrt((a + b - sqrt2).to_double());
  r.signed_root = sgn * std::sqrt(f);
  r.root_d = std::sqrt((a + b + sqrt2).to_double());
  return r;
}

std::array<Complex, 4> gamma4_all(double beta) {
  const Order8Radicals r = order8_radicals(beta);
  const double base = 1.0 - r.inv_beta;
  const Complex g41 =
      (1.0 - r.h) * (base - kI * r.q + r.k_plus * (r.root_a - kI * r.root_b)) - 1.0;
  const Complex g42 =
      (1.0 - r.h) * (base + kI * r.q - r.k_plus * (r.root_a + kI * r.root_b)) - 1.0;
  const Complex g43 =
      (r.h + 1.0) * (base - kI * r.q - r.k_minus * (r.signed_root - kI * r.root_d)) - 1.0;
  const Complex g44 =
      (r.h + 1.0) * (base + kI * r.q + r.k_minus * (r.signed_root + kI * r.root_d)) - 1.0;
  return {g41, g42, g43, g44};
}

void require_beta(const CurveParams& p) {
  if (!(p.beta > 1.0)) throw std::domain_error("beta must be > 1");
}

}  // namespace

std::array<double, 4> ascending_sequence(double x) {
  if (!(x > 1.0) || !std::isfinite(x)) {
    throw std::domain_error("ascending_sequence: x must be a finite real > 1");
  }
  const double outer = std::sqrt(x + 1.0);
  const double inner = std::sqrt(1.0 + 1.0 / x);
  return {1.0 - outer, 1.0 - inner, 1.0 + inner, 1.0 + outer};
}

double tribonacci_b() {
  // (1 + cbrt(19 - 3 sqrt33) + cbrt(19 + 3 sqrt33)) / 3; the small cube root
  // argument loses a digit to cancellation in plain doubles.
  const DoubleDouble s = DoubleDouble(3.0) * sqrt(DoubleDouble(33.0));
  auto cbrt_dd = [](DoubleDouble a) {
    DoubleDouble x(std::cbrt(a.hi));
    x = x - (x * x * x - a) / (DoubleDouble(3.0) * x * x);
    return x;
  };
  const DoubleDouble sum =
      DoubleDouble(1.0) + cbrt_dd(DoubleDouble(19.0) - s) + cbrt_dd(DoubleDouble(19.0) + s);
  return (sum / DoubleDouble(3.0)).to_double();
}

double order8_radicand(double beta) {
  if (!(beta > 1.0)) throw std::domain_error("order8_radicand: beta must be > 1");
  const DoubleDouble bb(beta);
  const DoubleDouble sp = sqrt(bb + DoubleDouble(1.0));
  return (bb / sqrt(bb - DoubleDouble(1.0)) - DoubleDouble(1.0) / sp - sqrt(DoubleDouble(2.0)))
      .to_double();
}

Complex gamma4(const CurveParams& params, int which) {
  require_beta(params);
  if (which < 41 || which > 44) throw std::invalid_argument("gamma4: which must be 41..44");
  return gamma4_all(params.beta)[which - 41];
}

RadicalCatalog build_catalog(const CurveParams& p) {
  require_beta(p);
  const double beta = p.beta;
  const double delta = p.delta;

  RadicalCatalog c{};
  c.gamma_minus_r = 1.0 - 1.0 / delta;
  c.gamma_plus_r = 1.0 + 1.0 / delta;
  c.gamma = 1.0 - kI * (beta / delta);
  c.beta_seq = ascending_sequence(beta);
  c.delta_seq = ascending_sequence(delta);
  const auto& ds = c.delta_seq;
  c.gamma02 = 1.0 + ds[0] * ds[2] / delta;
  c.gamma13 = 1.0 + ds[1] * ds[3] / delta;
  c.gamma01 = 1.0 + ds[0] * ds[1] / delta;
  c.gamma23 = 1.0 + ds[2] * ds[3] / delta;

  const double s = std::sqrt(1.0 - 1.0 / beta);
  c.beta_pm = {1.0 - s, 1.0 + s};
  const double t = (std::sqrt(1.0 + 1.0 / beta) - s) / std::numbers::sqrt2;
  c.delta_pm = {1.0 - t, 1.0 + t};

  c.gamma0 = 1.0 - kI * std::sqrt(beta - 1.0);
  const Complex tilt = 1.0 + kI * std::sqrt(delta - 1.0);
  c.gamma_lo = 1.0 - c.delta_pm[0] * tilt / delta;
  c.gamma_hi = 1.0 - c.delta_pm[1] * tilt / delta;

  const auto g4 = gamma4_all(beta);
  c.gamma41 = g4[0];
  c.gamma42 = g4[1];
  c.gamma43 = g4[2];
  c.gamma44 = g4[3];
  c.b_const = tribonacci_b();
  c.near_singular = beta < Beta::kPracticalFloor;
  return c;
}

std::vector<NamedConstant> catalog_entries(const RadicalCatalog& c) {
  std::vector<NamedConstant> out = {
      {"gamma^-", c.gamma_minus_r}, {"gamma^+", c.gamma_plus_r}, {"gamma", c.gamma},
  };
  for (int k = 0; k < 4; ++k) out.push_back({"beta" + std::to_string(k), c.beta_seq[k]});
  for (int k = 0; k < 4; ++k) out.push_back({"delta" + std::to_string(k), c.delta_seq[k]});
  out.insert(out.end(), {
                            {"gamma02", c.gamma02},
                            {"gamma13", c.gamma13},
                            {"gamma01", c.gamma01},
                            {"gamma23", c.gamma23},
                            {"beta^-", c.beta_pm[0]},
                            {"beta^+", c.beta_pm[1]},
                            {"delta^-", c.delta_pm[0]},
                            {"delta^+", c.delta_pm[1]},
                            {"gamma0", c.gamma0},
                            {"gamma_-", c.gamma_lo},
                            {"gamma_+", c.gamma_hi},
                            {"gamma41", c.gamma41},
                            {"gamma42", c.gamma42},
                            {"gamma43", c.gamma43},
                            {"gamma44", c.gamma44},
                            {"b", c.b_const},
                        });
  return out;
}

namespace {

// Symbolic label of a table entry: prefix + core (optionally conjugated) + suffix.
struct Label {
  std::string prefix;
  std::string core;
  std::string suffix;
  bool conj = false;

  std::string render() const {
    return prefix + (conj ? "conj(" + core + ")" : core) + suffix;
  }
};

struct Cell {
  Label label;
  NodeValue value;
  bool real;
};

Cell real_cell(std::string text, double v) {
  return {Label{"", std::move(text), "", false}, NodeValue::finite(v), true};
}

Cell complex_cell(std::string prefix, std::string core, std::string suffix, bool conj,
                  Complex v) {
  return {Label{std::move(prefix), std::move(core), std::move(suffix), conj},
          NodeValue::finite(conj ? std::conj(v) : v), false};
}

Cell pole_cell() { return {Label{"", "inf", "", false}, NodeValue::pole(), true}; }

}  // namespace

ClosedFormTable grid_table(const CurveParams& p) { return grid_table(p, build_catalog(p)); }

ClosedFormTable grid_table(const CurveParams& p, const RadicalCatalog& c) {
  require_beta(p);
  const double beta = p.beta;
  const auto& bs = c.beta_seq;
  const Complex g_over_b = c.gamma / beta;

  std::array<std::array<Cell, 9>, 5> rows = {{
      {pole_cell(), real_cell("beta2*beta3", bs[2] * bs[3]), real_cell("1", 1.0),
       real_cell("beta0*beta1", bs[0] * bs[1]), real_cell("0", 0.0),
       real_cell("beta0*beta1", bs[0] * bs[1]), real_cell("1", 1.0),
       real_cell("beta2*beta3", bs[2] * bs[3]), pole_cell()},
      {real_cell("-beta*gamma23", -beta * c.gamma23),
       complex_cell("", "gamma44", "", true, c.gamma44),
       complex_cell("-beta*", "gamma_+", "", true, -beta * c.gamma_hi),
       complex_cell("", "gamma43", "", true, c.gamma43),
       real_cell("-beta*gamma02", -beta * c.gamma02),
       complex_cell("", "gamma43", "", false, c.gamma43),
       complex_cell("-beta*", "gamma_+", "", false, -beta * c.gamma_hi),
       complex_cell("", "gamma44", "", false, c.gamma44),
       real_cell("-beta*gamma23", -beta * c.gamma23)},
      {real_cell("-beta*gamma^+", -beta * c.gamma_plus_r),
       complex_cell("-beta^+*", "gamma0", "", true, -c.beta_pm[1] * c.gamma0),
       complex_cell("-", "gamma", "/beta", true, -g_over_b),
       complex_cell("-beta^-*", "gamma0", "", true, -c.beta_pm[0] * c.gamma0),
       real_cell("-beta*gamma^-", -beta * c.gamma_minus_r),
       complex_cell("-beta^-*", "gamma0", "", false, -c.beta_pm[0] * c.gamma0),
       complex_cell("-", "gamma", "/beta", false, -g_over_b),
       complex_cell("-beta^+*", "gamma0", "", false, -c.beta_pm[1] * c.gamma0),
       real_cell("-beta*gamma^+", -beta * c.gamma_plus_r)},
      {real_cell("-beta*gamma01", -beta * c.gamma01),
       complex_cell("", "gamma41", "", true, c.gamma41),
       complex_cell("-beta*", "gamma_-", "", true, -beta * c.gamma_lo),
       complex_cell("", "gamma42", "", true, c.gamma42),
       real_cell("-beta*gamma13", -beta * c.gamma13),
       complex_cell("", "gamma42", "", false, c.gamma42),
       complex_cell("-beta*", "gamma_-", "", false, -beta * c.gamma_lo),
       complex_cell("", "gamma41", "", false, c.gamma41),
       real_cell("-beta*gamma01", -beta * c.gamma01)},
      {real_cell("-beta", -beta), real_cell("beta0*beta2", bs[0] * bs[2]),
       real_cell("-1", -1.0), real_cell("beta1*beta3", bs[1] * bs[3]),
       real_cell("-1/beta", -1.0 / beta), real_cell("beta1*beta3", bs[1] * bs[3]),
       real_cell("-1", -1.0), real_cell("beta0*beta2", bs[0] * bs[2]),
       real_cell("-beta", -beta)},
  }};

  ClosedFormTable table;
  for (int n = 0; n < 9; ++n) {
    for (int m = 0; m < 9; ++m) {
      // Rows above the middle mirror the lower half by conjugation.
      Cell cell = rows[n <= 4 ? n : 8 - n][m];
      if (n > 4 && !cell.real) {
        cell.label.conj = !cell.label.conj;
        cell.value = NodeValue::finite(std::conj(cell.value.value()));
      }
      table.at(m, n) = TableEntry{cell.label.render(), cell.value};
    }
  }
  return table;
}

}  // namespace rbeta
