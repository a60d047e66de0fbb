#include "rbeta/figure.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <string>

#include "rbeta/curve_params.hpp"
#include "rbeta/lattice.hpp"
#include "rbeta/weierstrass.hpp"

namespace rbeta {

namespace {

std::string g9(double x) {
  if (x == 0.0) x = 0.0;  // no "-0"
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.9g", x);
  return buf;
}

CoordinateLine trace(const WeierstrassEvaluator& ev, int index, double offset, bool horizontal,
                     double span, int samples, double clip) {
  CoordinateLine line;
  line.index = index;
  line.offset = offset;
  std::vector<std::complex<double>> run;
  const double step = span / samples;
  for (int j = 0; j <= samples; ++j) {
    const double t = j * step;
    const Complex z = horizontal ? Complex(t, offset) : Complex(offset, t);
    const NodeValue v = ev.essential_r(z);
    if (v.is_pole() || std::abs(v.value()) > clip) {
      if (!run.empty()) line.segments.push_back(std::move(run));
      run.clear();
      continue;
    }
    run.push_back(v.value());
  }
  if (!run.empty()) line.segments.push_back(std::move(run));
  return line;
}

}  // namespace

Viewport FigureConfig::effective_viewport() const {
  if (viewport) return *viewport;
  return {-2.0 * beta, 2.0 * beta, -2.0 * beta, 2.0 * beta};
}

double FigureConfig::effective_clip_radius() const {
  return clip_radius ? *clip_radius : 4.0 * beta;
}

FigureConfig FigureConfig::with_beta(double beta) {
  FigureConfig c;
  c.beta = beta;
  return c;
}

void FigureConfig::validate() const {
  if (!(beta > 1.0) || !std::isfinite(beta)) throw std::invalid_argument("figure: beta must be > 1");
  if (lines_per_axis < 2) throw std::invalid_argument("figure: lines_per_axis must be >= 2");
  if (samples_per_line < 16) throw std::invalid_argument("figure: samples_per_line must be >= 16");
  const Viewport v = effective_viewport();
  if (!(v.x_max > v.x_min) || !(v.y_max > v.y_min)) {
    throw std::invalid_argument("figure: degenerate viewport");
  }
  if (clip_radius && !(*clip_radius > 0.0)) throw std::invalid_argument("figure: clip_radius must be positive");
}

FigureData sample_figure(const FigureConfig& config) {
  config.validate();
  const CurveParams p = derive_params(Beta(config.beta));
  const Lattice lat = compute_lattice(p);
  const WeierstrassEvaluator ev(p, lat);
  const double clip = config.effective_clip_radius();
  const double full1 = 2.0 * lat.omega1;
  const double full2 = 2.0 * lat.omega2_im;
  const int lines = config.lines_per_axis;

  FigureData data;
  data.config = config;
  data.omega1 = lat.omega1;
  data.omega2_im = lat.omega2_im;
  for (int k = 0; k <= lines; ++k) {
    data.red.push_back(
        trace(ev, k, k * full2 / lines, true, full1, config.samples_per_line, clip));
  }
  for (int k = 0; k <= lines; ++k) {
    data.blue.push_back(
        trace(ev, k, k * full1 / lines, false, full2, config.samples_per_line, clip));
  }
  data.red_circle = {{-p.beta, 0.0}, p.beta / p.delta};
  data.blue_circle = {{0.0, 0.0}, 1.0};
  return data;
}

std::string render_svg(const FigureData& data) {
  const Viewport v = data.config.effective_viewport();
  const double w = v.x_max - v.x_min;
  const double h = v.y_max - v.y_min;
  // Image-plane y points up; SVG y points down, so coordinates are emitted as (x, -y).
  const double stroke = w / 800.0;

  std::string out;
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\" standalone=\"no\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"800\" height=\"800\" ";
  out += "viewBox=\"" + g9(v.x_min) + " " + g9(-v.y_max) + " " + g9(w) + " " + g9(h) + "\">\n";
  out += "<title>R_beta image of the period rectangle, beta = " + g9(data.config.beta) +
         "</title>\n";
  out += "<rect x=\"" + g9(v.x_min) + "\" y=\"" + g9(-v.y_max) + "\" width=\"" + g9(w) +
         "\" height=\"" + g9(h) + "\" fill=\"white\"/>\n";

  auto emit_family = [&](const std::vector<CoordinateLine>& family, const char* color) {
    for (const CoordinateLine& line : family) {
      out += "<g class=\"" + std::string(color) + "-line\" data-k=\"" +
             std::to_string(line.index) + "\" fill=\"none\" stroke=\"" + color +
             "\" stroke-width=\"" + g9(stroke) + "\">\n";
      for (const auto& seg : line.segments) {
        if (seg.size() < 2) continue;
        out += "<polyline points=\"";
        for (std::size_t i = 0; i < seg.size(); ++i) {
          if (i) out += ' ';
          out += g9(seg[i].real()) + "," + g9(-seg[i].imag());
        }
        out += "\"/>\n";
      }
      out += "</g>\n";
    }
  };
  emit_family(data.red, "red");
  emit_family(data.blue, "blue");

  auto emit_circle = [&](const Circle& c, const char* color, const char* cls) {
    out += "<circle class=\"" + std::string(cls) + "\" cx=\"" + g9(c.center.real()) +
           "\" cy=\"" + g9(-c.center.imag()) + "\" r=\"" + g9(c.radius) +
           "\" fill=\"none\" stroke=\"" + color + "\" stroke-width=\"" + g9(2.0 * stroke) +
           "\"/>\n";
  };
  emit_circle(data.red_circle, "red", "red-circle");
  emit_circle(data.blue_circle, "blue", "blue-circle");
  out += "</svg>\n";
  return out;
}

std::string render_figure(const FigureConfig& config) { return render_svg(sample_figure(config)); }

}  // namespace rbeta
