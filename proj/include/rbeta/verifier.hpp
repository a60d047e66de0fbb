#pragma once

#include <array>
#include <string>
#include <vector>

#include "rbeta/closed_forms.hpp"
#include "rbeta/curve_params.hpp"
#include "rbeta/lattice.hpp"
#include "rbeta/weierstrass.hpp"

namespace rbeta {

inline constexpr double kDefaultTolerance = 1e-9;

/// Values on the 9x9 eighth-period grid, indexed grid[m][n] for the node
/// z = (m omega1 + n omega2) / 4.
using NodeGrid = std::array<std::array<NodeValue, 9>, 9>;

struct NodeCheck {
  int m = 0;
  int n = 0;
  std::string symbol;
  NodeValue closed;
  NodeValue numeric;
  double abs_err = 0.0;  // +inf when exactly one side is a pole
  double rel_err = 0.0;  // abs_err / max(1, |closed|)
  bool pass = false;
};

struct PropertyResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

enum class Verdict { pass, fail };

struct VerificationReport {
  double beta = 0.0;
  double tolerance = kDefaultTolerance;
  std::vector<NodeCheck> per_node;
  std::vector<PropertyResult> property_results;
  bool orientation_flipped = false;
  Verdict verdict = Verdict::fail;

  double max_rel_err() const;
  /// Recomputes verdict from per_node and property_results.
  void finalize();
};

/// |a - b| / max(1, |a|); +inf if exactly one is a pole, 0 if both are.
double scaled_error(const NodeValue& reference, const NodeValue& other);

/// R at every grid node from the Laurent/duplication evaluator.
NodeGrid numeric_grid(const WeierstrassEvaluator& evaluator);

/// True when row n = 1 of `numeric` matches the conjugated closed forms and
/// not the closed forms themselves, i.e. the grid was built with -omega2.
bool detect_flipped_orientation(const ClosedFormTable& table, const NodeGrid& numeric,
                                double tol);

struct HalfArgumentGrid {
  NodeGrid values;
  std::array<std::array<bool, 9>, 9> inconclusive{};
};

/// Grid values obtained from the exact half-period values by two rounds of
/// the half-argument formula. The Laurent evaluator only serves as a probe
/// rounded to 1e-3 that picks one of the four halving branches.
HalfArgumentGrid half_argument_oracle(const CurveParams& params, const Lattice& lattice);

/// Closed forms against the numeric evaluator at all 81 nodes, plus
/// conjugate symmetry and agreement with the half-argument oracle.
VerificationReport verify_grid(Beta beta, double tol = kDefaultTolerance);

/// Geometric and algebraic claims about the quarter-period values.
std::vector<PropertyResult> verify_claims(Beta beta);

/// verify_grid followed by verify_claims, in one report.
VerificationReport verify_all(Beta beta, double tol = kDefaultTolerance);

/// verify_all for `steps` equally spaced betas in [beta_min, beta_max].
std::vector<VerificationReport> sweep(double beta_min, double beta_max, int steps,
                                      double tol = kDefaultTolerance);

/// The four half-rectangle centers as grid nodes.
inline constexpr std::array<std::array<int, 2>, 4> kHalfRectangleCenters = {
    {{2, 2}, {6, 2}, {2, 6}, {6, 6}}};

}  // namespace rbeta
