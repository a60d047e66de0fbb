#include "rbeta/verifier.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace rbeta {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Tolerances for the checks folded into the report.
constexpr double kTripleSourceTol = 1e-8;
constexpr double kAxisOracleTol = 1e-9;
constexpr double kConjugateTol = 1e-10;
constexpr double kLogDerivTol = 1e-9;
constexpr double kCircleTol = 1e-10;
constexpr double kOrthogonalityTol = 1e-12;
constexpr double kUnitValueTol = 1e-9;
constexpr double kInversionTol = 1e-6;
constexpr double kProbeQuantum = 1e-3;
constexpr double kBranchAmbiguity = 1e-6;
constexpr double kCandidateMerge = 1e-12;

std::string sci(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", x);
  return buf;
}

std::string num(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

std::string cnum(Complex z) {
  return num(z.real()) + (z.imag() < 0 ? "-" : "+") + num(std::abs(z.imag())) + "i";
}

std::string node_name(int m, int n) {
  return "(" + std::to_string(m) + "," + std::to_string(n) + ")";
}

Complex node_point(const Lattice& lat, int m, int n) {
  return {m * lat.omega1 / 4.0, n * lat.omega2_im / 4.0};
}

double scaled(Complex reference, Complex other) {
  return std::abs(reference - other) / std::max(1.0, std::abs(reference));
}

Complex quantize(Complex z) {
  return {std::round(z.real() / kProbeQuantum) * kProbeQuantum,
          std::round(z.imag() / kProbeQuantum) * kProbeQuantum};
}

}  // namespace

double scaled_error(const NodeValue& reference, const NodeValue& other) {
  if (reference.is_pole() && other.is_pole()) return 0.0;
  if (reference.is_pole() != other.is_pole()) return kInf;
  return scaled(reference.value(), other.value());
}

double VerificationReport::max_rel_err() const {
  double worst = 0.0;
  for (const auto& c : per_node) worst = std::max(worst, c.rel_err);
  return worst;
}

void VerificationReport::finalize() {
  bool ok = std::all_of(per_node.begin(), per_node.end(),
                        [&](const NodeCheck& c) { return c.pass; });
  ok = ok && std::all_of(property_results.begin(), property_results.end(),
                         [](const PropertyResult& p) { return p.pass; });
  verdict = ok ? Verdict::pass : Verdict::fail;
}

NodeGrid numeric_grid(const WeierstrassEvaluator& ev) {
  NodeGrid grid;
  for (int m = 0; m < 9; ++m) {
    for (int n = 0; n < 9; ++n) {
      grid[m][n] = ev.essential_r(node_point(ev.lattice(), m, n));
    }
  }
  return grid;
}

bool detect_flipped_orientation(const ClosedFormTable& table, const NodeGrid& numeric,
                                double tol) {
  bool any_direct = false;
  bool all_conjugate = true;
  bool any_complex = false;
  for (int m = 0; m < 9; ++m) {
    const NodeValue& closed = table.at(m, 1).value;
    const NodeValue& value = numeric[m][1];
    if (closed.is_pole() || value.is_pole()) continue;
    const Complex c = closed.value();
    if (c.imag() == 0.0) continue;
    any_complex = true;
    if (scaled(c, value.value()) <= tol) any_direct = true;
    if (scaled(std::conj(c), value.value()) > tol) all_conjugate = false;
  }
  return any_complex && !any_direct && all_conjugate;
}

HalfArgumentGrid half_argument_oracle(const CurveParams& p, const Lattice& lat) {
  const WeierstrassEvaluator probe(p, lat);
  HalfArgumentGrid out;
  std::array<std::array<std::optional<NodeValue>, 8>, 8> memo{};

  // Node indices are taken mod 8; doubling (m, n) gives (2m, 2n).
  std::function<NodeValue(int, int)> value = [&](int m, int n) -> NodeValue {
    m %= 8;
    n %= 8;
    if (memo[m][n]) return *memo[m][n];
    NodeValue result;
    if (m % 4 == 0 && n % 4 == 0) {
      // Lattice point and half-periods: the roots 0, -beta, -1/beta.
      if (m == 0 && n == 0) result = NodeValue::pole();
      else if (n == 0) result = NodeValue::finite(0.0);
      else if (m == 0) result = NodeValue::finite(-p.beta);
      else result = NodeValue::finite(-1.0 / p.beta);
    } else {
      const Complex parent = value(2 * m, 2 * n).value();
      // R(u/2) - r_i = (a_i + a_j)(a_i + a_k) with a_i = +-sqrt(R(u) - r_i),
      // so the four halvings are R + a1 a2 + a1 a3 + a2 a3 over the sign
      // patterns of (a2, a3) relative to a1.
      const Complex a1 = std::sqrt(parent);
      const Complex a2 = std::sqrt(parent + 1.0 / p.beta);
      const Complex a3 = std::sqrt(parent + p.beta);
      const Complex target = quantize(probe.essential_r(node_point(lat, m, n)).value());
      // Halving a 2-torsion point gives only two distinct values (one a_i is
      // zero), so coincident candidates are merged before ranking.
      std::vector<Complex> candidates;
      for (double s2 : {1.0, -1.0}) {
        for (double s3 : {1.0, -1.0}) {
          const Complex b2 = s2 * a2;
          const Complex b3 = s3 * a3;
          const Complex cand = parent + a1 * b2 + a1 * b3 + b2 * b3;
          const bool seen = std::any_of(candidates.begin(), candidates.end(), [&](Complex c) {
            return scaled(c, cand) <= kCandidateMerge;
          });
          if (!seen) candidates.push_back(cand);
        }
      }
      double best = kInf;
      double runner_up = kInf;
      Complex chosen;
      for (const Complex cand : candidates) {
        const double dist = std::abs(cand - target);
        if (dist < best) {
          runner_up = best;
          best = dist;
          chosen = cand;
        } else if (dist < runner_up) {
          runner_up = dist;
        }
      }
      if (runner_up - best <= kBranchAmbiguity) out.inconclusive[m][n] = true;
      result = NodeValue::finite(chosen);
    }
    memo[m][n] = result;
    return result;
  };

  for (int m = 0; m < 9; ++m) {
    for (int n = 0; n < 9; ++n) {
      out.values[m][n] = value(m, n);
      out.inconclusive[m][n] = out.inconclusive[m % 8][n % 8];
    }
  }
  return out;
}

VerificationReport verify_grid(Beta beta, double tol) {
  if (!(tol > 0.0)) throw std::invalid_argument("verify_grid: tolerance must be positive");
  const CurveParams p = derive_params(beta);
  const Lattice lat = compute_lattice(p);
  const WeierstrassEvaluator ev(p, lat);
  const ClosedFormTable table = grid_table(p);
  NodeGrid numeric = numeric_grid(ev);

  VerificationReport report;
  report.beta = p.beta;
  report.tolerance = tol;
  report.orientation_flipped = detect_flipped_orientation(table, numeric, tol);
  if (report.orientation_flipped) {
    const NodeGrid copy = numeric;
    for (int m = 0; m < 9; ++m)
      for (int n = 0; n < 9; ++n) numeric[m][n] = copy[m][8 - n];
  }

  for (int n = 0; n < 9; ++n) {
    for (int m = 0; m < 9; ++m) {
      const TableEntry& entry = table.at(m, n);
      NodeCheck c;
      c.m = m;
      c.n = n;
      c.symbol = entry.symbol;
      c.closed = entry.value;
      c.numeric = numeric[m][n];
      if (c.closed.is_pole() && c.numeric.is_pole()) {
        c.pass = true;
      } else if (c.closed.is_pole() || c.numeric.is_pole()) {
        c.abs_err = c.rel_err = kInf;
      } else {
        c.abs_err = std::abs(c.closed.value() - c.numeric.value());
        c.rel_err = c.abs_err / std::max(1.0, std::abs(c.closed.value()));
        c.pass = c.rel_err <= tol;
      }
      report.per_node.push_back(std::move(c));
    }
  }

  // Conjugate-node consistency of the numeric values.
  {
    double worst = 0.0;
    for (int m = 0; m < 9; ++m) {
      for (int n = 0; n < 9; ++n) {
        const NodeValue& a = numeric[m][n];
        const NodeValue& b = numeric[m][8 - n];
        const NodeValue bc = b.is_pole() ? b : NodeValue::finite(std::conj(b.value()));
        worst = std::max(worst, scaled_error(a, bc));
      }
    }
    report.property_results.push_back(
        {"conjugate_node_consistency", worst <= kConjugateTol, "max scaled error " + sci(worst)});
  }

  // Three independent sources of the same 81 numbers.
  {
    const HalfArgumentGrid oracle = half_argument_oracle(p, lat);
    double closed_vs_numeric = 0.0;
    double closed_vs_oracle = 0.0;
    double numeric_vs_oracle = 0.0;
    double axis = 0.0;
    std::string inconclusive;
    for (int m = 0; m < 9; ++m) {
      for (int n = 0; n < 9; ++n) {
        const NodeValue& closed = table.at(m, n).value;
        const NodeValue& num_v = numeric[m][n];
        const NodeValue& orc = oracle.values[m][n];
        if (oracle.inconclusive[m][n]) inconclusive += node_name(m, n);
        closed_vs_numeric = std::max(closed_vs_numeric, scaled_error(closed, num_v));
        closed_vs_oracle = std::max(closed_vs_oracle, scaled_error(closed, orc));
        numeric_vs_oracle = std::max(numeric_vs_oracle, scaled_error(num_v, orc));
        if (m % 8 == 0 || n % 8 == 0 || n == 4) {
          axis = std::max(axis, scaled_error(closed, orc));
        }
      }
    }
    const double worst = std::max({closed_vs_numeric, closed_vs_oracle, numeric_vs_oracle});
    report.property_results.push_back(
        {"triple_source_agreement", worst <= kTripleSourceTol,
         "closed/numeric " + sci(closed_vs_numeric) + ", closed/half-argument " +
             sci(closed_vs_oracle) + ", numeric/half-argument " + sci(numeric_vs_oracle)});
    report.property_results.push_back(
        {"half_argument_axis_nodes", axis <= kAxisOracleTol, "max scaled error " + sci(axis)});
    report.property_results.push_back(
        {"half_argument_branches_conclusive", inconclusive.empty(),
         inconclusive.empty() ? "all branches separated" : "ambiguous at " + inconclusive});
  }

  report.finalize();
  return report;
}

std::vector<PropertyResult> verify_claims(Beta beta) {
  const CurveParams p = derive_params(beta);
  const Lattice lat = compute_lattice(p);
  const WeierstrassEvaluator ev(p, lat);
  const RadicalCatalog cat = build_catalog(p);
  const double four_d = 4.0 * p.d;
  const double red_radius = p.beta / p.delta;
  std::vector<PropertyResult> out;

  // (R'/R)^2 at the half-rectangle centers.
  {
    bool ok = true;
    std::string detail;
    for (const auto& [m, n] : kHalfRectangleCenters) {
      const Complex v = ev.log_deriv_sq(node_point(lat, m, n));
      const double err = std::abs(v - four_d) / four_d;
      ok = ok && err <= kLogDerivTol;
      detail += node_name(m, n) + " " + cnum(v) + " (rel err " + sci(err) + "); ";
    }
    out.push_back({"log_deriv_sq_is_4d_at_centers", ok, detail + "4d = " + num(four_d)});
  }

  // The centers land on both circles; record which intersection point each hits.
  {
    bool ok = true;
    std::string detail;
    const Complex upper = -std::conj(cat.gamma) / p.beta;  // Im > 0
    for (const auto& [m, n] : kHalfRectangleCenters) {
      const Complex v = ev.essential_r(node_point(lat, m, n)).value();
      const double e_unit = std::abs(std::abs(v) - 1.0);
      const double e_red = std::abs(std::abs(v + p.beta) - red_radius);
      ok = ok && e_unit <= kCircleTol && e_red <= kCircleTol;
      const bool hits_upper = std::abs(v - upper) < std::abs(v - std::conj(upper));
      detail += node_name(m, n) + (hits_upper ? " -> upper" : " -> lower") + " intersection; ";
    }
    const Complex closed = -cat.gamma / p.beta;
    const double e_unit = std::abs(std::abs(closed) - 1.0);
    const double e_red = std::abs(std::abs(closed + p.beta) - red_radius);
    ok = ok && e_unit <= kCircleTol && e_red <= kCircleTol;
    detail += "closed form -gamma/beta: | |v|-1 | " + sci(e_unit) + ", | |v+beta|-beta/delta | " +
              sci(e_red);
    out.push_back({"centers_on_both_circles", ok, detail});
  }

  // Orthogonality of the circles: (beta/delta)^2 + 1 = beta^2.
  {
    const double lhs = red_radius * red_radius + 1.0;
    const double err = std::abs(lhs - p.beta * p.beta) / (p.beta * p.beta);
    out.push_back({"circles_orthogonal", err <= kOrthogonalityTol, "rel err " + sci(err)});
  }

  // R = +-1 exactly at the order-4 nodes.
  {
    const NodeGrid grid = numeric_grid(ev);
    std::string plus;
    std::string minus;
    for (int n = 0; n < 9; ++n) {
      for (int m = 0; m < 9; ++m) {
        if (grid[m][n].is_pole()) continue;
        const Complex v = grid[m][n].value();
        if (std::abs(v - 1.0) <= kUnitValueTol) plus += node_name(m, n);
        if (std::abs(v + 1.0) <= kUnitValueTol) minus += node_name(m, n);
      }
    }
    const bool ok = plus == "(2,0)(6,0)(2,8)(6,8)" && minus == "(2,4)(6,4)";
    out.push_back({"unit_values_at_order4_nodes", ok, "+1 at " + plus + "; -1 at " + minus});
  }

  // (R'/R)^2 / d = 4 and d is the square root of the cubic's discriminant.
  {
    const CurveParams& q = p;
    const double disc = std::pow(q.beta * (1.0 / q.beta) * (q.beta - 1.0 / q.beta), 2);
    const Complex v = ev.log_deriv_sq(node_point(lat, 6, 2));
    const double ratio_err = std::abs(v / q.d - 4.0) / 4.0;
    const double disc_err = std::abs(std::sqrt(disc) - q.discriminant_sqrt) / q.d;
    out.push_back({"discriminant_link", ratio_err <= kLogDerivTol && disc_err <= 1e-14,
                   "(R'/R)^2/d = " + cnum(v / q.d) + ", sqrt(disc) - d rel " + sci(disc_err)});
  }

  // Inversion in each circle swaps the same-colored coordinate-line images
  // and fixes the other color:
  //   red circle:  R(x + i y) -> R(x + i (omega2 - y)),
  //   unit circle: R(x + i y) -> R(omega1 - x + i y).
  {
    const double xs[] = {0.13, 0.37, 0.71, 1.29, 1.83};
    const double ys[] = {0.11, 0.29, 0.63, 1.41};
    double worst_red = 0.0;
    double worst_unit = 0.0;
    const Complex red_center(-p.beta, 0.0);
    for (double fx : xs) {
      for (double fy : ys) {
        const double x = fx * lat.omega1;
        const double y = fy * lat.omega2_im;
        const Complex v = ev.essential_r({x, y}).value();
        const Complex red_image =
            red_center + red_radius * red_radius / std::conj(v - red_center);
        const Complex unit_image = 1.0 / std::conj(v);
        const Complex red_expect = ev.essential_r({x, lat.omega2_im - y}).value();
        const Complex unit_expect = ev.essential_r({lat.omega1 - x, y}).value();
        worst_red = std::max(worst_red, scaled(red_expect, red_image));
        worst_unit = std::max(worst_unit, scaled(unit_expect, unit_image));
      }
    }
    out.push_back({"red_circle_inversion", worst_red <= kInversionTol,
                   "horizontal line y maps to line omega2 - y; max scaled error " +
                       sci(worst_red)});
    out.push_back({"unit_circle_inversion", worst_unit <= kInversionTol,
                   "vertical line x maps to line omega1 - x, horizontal lines invariant; "
                   "max scaled error " + sci(worst_unit)});
  }
  return out;
}

VerificationReport verify_all(Beta beta, double tol) {
  VerificationReport report = verify_grid(beta, tol);
  for (auto& r : verify_claims(beta)) report.property_results.push_back(std::move(r));
  report.finalize();
  return report;
}

std::vector<VerificationReport> sweep(double beta_min, double beta_max, int steps, double tol) {
  if (steps < 1) throw std::invalid_argument("sweep: steps must be >= 1");
  if (!(beta_max >= beta_min)) throw std::invalid_argument("sweep: beta_max < beta_min");
  std::vector<VerificationReport> out;
  out.reserve(steps);
  for (int k = 0; k < steps; ++k) {
    const double beta =
        steps == 1 ? beta_min : beta_min + (beta_max - beta_min) * k / (steps - 1);
    out.push_back(verify_all(Beta(beta), tol));
  }
  return out;
}

}  // namespace rbeta
