#pragma once

#include <complex>
#include <optional>
#include <string>
#include <vector>

namespace rbeta {

struct Viewport {
  double x_min, x_max, y_min, y_max;
};

struct FigureConfig {
  double beta = 2.6180339887498948482;  // (3 + sqrt5) / 2, where alpha = 1
  int lines_per_axis = 16;
  int samples_per_line = 512;
  std::optional<Viewport> viewport;     // default [-2 beta, 2 beta]^2
  std::optional<double> clip_radius;    // default 4 beta; |R| beyond it breaks a polyline

  Viewport effective_viewport() const;
  double effective_clip_radius() const;

  static FigureConfig with_beta(double beta);
  /// Throws std::invalid_argument on an invalid configuration.
  void validate() const;
};

struct CoordinateLine {
  int index = 0;      // k in 0..lines_per_axis
  double offset = 0;  // Im z (red lines) or Re z (blue lines)
  // Maximal runs of consecutive samples with |R| <= clip radius.
  std::vector<std::vector<std::complex<double>>> segments;
};

struct Circle {
  std::complex<double> center;
  double radius = 0;
};

struct FigureData {
  FigureConfig config;
  double omega1 = 0;
  double omega2_im = 0;
  std::vector<CoordinateLine> red;   // images of lines parallel to the real axis
  std::vector<CoordinateLine> blue;  // images of lines parallel to the imaginary axis
  Circle red_circle;                 // center -beta, radius beta/delta
  Circle blue_circle;                // unit circle
};

/// Samples the images of the coordinate lines of the period rectangle under R.
/// Line k of each family sits at k/lines_per_axis of the full period and is
/// sampled at samples_per_line + 1 equally spaced points spanning the other period.
FigureData sample_figure(const FigureConfig& config);

/// SVG 1.1 document, 800x800, numbers printed with 9 significant digits.
std::string render_svg(const FigureData& data);

std::string render_figure(const FigureConfig& config);

}  // namespace rbeta
