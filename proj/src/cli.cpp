#include "rbeta/cli.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <regex>
#include <stdexcept>

#include "CLI11.hpp"
#include "rbeta/closed_forms.hpp"
#include "rbeta/figure.hpp"
#include "rbeta/report_json.hpp"
#include "rbeta/verifier.hpp"

namespace rbeta::cli {

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

double to_double(const std::string& s) {
  std::size_t used = 0;
  const double v = std::stod(s, &used);
  if (used != s.size()) throw std::invalid_argument("bad number " + s);
  return v;
}

void emit(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw UsageError("cannot open output file " + path);
  file << text;
  if (!file) throw UsageError("failed writing " + path);
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace

std::optional<Complex> parse_complex(std::string_view text) {
  static const std::regex full(
      R"(^\s*([+-]?)\s*(\d+(?:\.\d*)?|\.\d+)\s*(?:([+-])\s*(\d+(?:\.\d*)?|\.\d+)?\s*i)?\s*$)");
  static const std::regex imag_only(R"(^\s*([+-]?)\s*(\d+(?:\.\d*)?|\.\d+)?\s*i\s*$)");
  const std::string s(text);
  std::smatch m;
  try {
    if (std::regex_match(s, m, full)) {
      const double re = (m[1] == "-" ? -1.0 : 1.0) * to_double(m[2]);
      double im = 0.0;
      if (m[3].matched) {
        im = (m[3] == "-" ? -1.0 : 1.0) * (m[4].matched ? to_double(m[4]) : 1.0);
      }
      return Complex(re, im);
    }
    if (std::regex_match(s, m, imag_only)) {
      const double im = (m[1] == "-" ? -1.0 : 1.0) * (m[2].matched ? to_double(m[2]) : 1.0);
      return Complex(0.0, im);
    }
  } catch (const std::exception&) {
    return std::nullopt;
  }
  return std::nullopt;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Essential elliptic function R_beta: eighth-period values, checks, figure", "rbeta"};
  app.require_subcommand(1);

  double beta = 0.0;
  double tol = kDefaultTolerance;
  std::string format = "json";
  std::string out_path;
  std::string z_text;
  double beta_min = 0.0;
  double beta_max = 0.0;
  int steps = 0;
  int lines = 16;
  int samples = 512;

  auto* params_cmd = app.add_subcommand("params", "Derived constants, periods and radicals");
  params_cmd->add_option("--beta", beta, "Parameter beta > 1")->required();
  params_cmd->add_option("--out", out_path, "Write to file instead of stdout");

  auto* grid_cmd = app.add_subcommand("grid", "Closed-form values at the 81 eighth-period nodes");
  grid_cmd->add_option("--beta", beta, "Parameter beta > 1")->required();
  grid_cmd->add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  grid_cmd->add_option("--out", out_path, "Write to file instead of stdout");

  auto* eval_cmd = app.add_subcommand("eval", "Evaluate wp, wp', R, R' at a point");
  eval_cmd->add_option("--beta", beta, "Parameter beta > 1")->required();
  eval_cmd->add_option("--z", z_text, "Complex point, e.g. \"0.3+0.2i\"")->required();
  eval_cmd->add_option("--out", out_path, "Write to file instead of stdout");

  auto* verify_cmd = app.add_subcommand("verify", "Verify closed forms and claims for one beta");
  verify_cmd->add_option("--beta", beta, "Parameter beta > 1")->required();
  verify_cmd->add_option("--tol", tol, "Scaled relative tolerance");
  verify_cmd->add_option("--out", out_path, "Write to file instead of stdout");

  auto* sweep_cmd = app.add_subcommand("sweep", "Verify over equally spaced betas");
  sweep_cmd->add_option("--beta-min", beta_min, "Smallest beta")->required();
  sweep_cmd->add_option("--beta-max", beta_max, "Largest beta")->required();
  sweep_cmd->add_option("--steps", steps, "Number of betas")->required();
  sweep_cmd->add_option("--tol", tol, "Scaled relative tolerance");
  sweep_cmd->add_option("--out", out_path, "Write to file instead of stdout");

  auto* figure_cmd = app.add_subcommand("figure", "SVG image of the period rectangle under R");
  beta = FigureConfig{}.beta;
  figure_cmd->add_option("--beta", beta, "Parameter beta > 1 (default (3+sqrt5)/2)");
  figure_cmd->add_option("--out", out_path, "SVG file (stdout if omitted)");
  figure_cmd->add_option("--lines", lines, "Coordinate lines per axis");
  figure_cmd->add_option("--samples", samples, "Samples per line");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (*params_cmd) {
      const CurveParams p = derive_params(Beta(beta));
      emit(dump(params_json(p, compute_lattice(p), build_catalog(p))), out_path, out);
      return kExitOk;
    }
    if (*grid_cmd) {
      const CurveParams p = derive_params(Beta(beta));
      const ClosedFormTable table = grid_table(p);
      emit(format == "csv" ? grid_csv(table) : dump(grid_json(p.beta, table)), out_path, out);
      return kExitOk;
    }
    if (*eval_cmd) {
      const auto z = parse_complex(z_text);
      if (!z) throw UsageError("malformed complex literal: \"" + z_text + "\"");
      const CurveParams p = derive_params(Beta(beta));
      const WeierstrassEvaluator ev(p, compute_lattice(p));
      const auto v = ev.evaluate(*z);
      Json j;
      j["schema"] = kSchemaVersion;
      j["beta"] = p.beta;
      j["z"] = complex_json(*z);
      j["wp"] = node_value_json(v.wp);
      j["wp_prime"] = node_value_json(v.wp_prime);
      j["R"] = node_value_json(ev.essential_r(*z));
      j["R_prime"] = node_value_json(v.wp_prime);
      emit(dump(j), out_path, out);
      return kExitOk;
    }
    if (*verify_cmd) {
      if (!(tol > 0.0)) throw UsageError("--tol must be positive");
      const VerificationReport report = verify_all(Beta(beta), tol);
      emit(dump(report_json(report)), out_path, out);
      return report.verdict == Verdict::pass ? kExitOk : kExitVerificationFailed;
    }
    if (*sweep_cmd) {
      if (!(tol > 0.0)) throw UsageError("--tol must be positive");
      (void)Beta(beta_min);
      (void)Beta(beta_max);
      const auto reports = sweep(beta_min, beta_max, steps, tol);
      const bool all = std::all_of(reports.begin(), reports.end(), [](const auto& r) {
        return r.verdict == Verdict::pass;
      });
      emit(dump(sweep_json(reports)), out_path, out);
      return all ? kExitOk : kExitVerificationFailed;
    }
    if (*figure_cmd) {
      FigureConfig config = FigureConfig::with_beta(Beta(beta).value());
      config.lines_per_axis = lines;
      config.samples_per_line = samples;
      emit(render_figure(config), out_path, out);
      return kExitOk;
    }
  } catch (const std::domain_error& e) {
    err << "domain error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "invalid argument: " << e.what() << "\n";
    return kExitUsage;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace rbeta::cli
