#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tiltbg/rational.hpp"

namespace tiltbg {

struct FigureRow {
  Rational t;
  Rational bound;
  Rational parabola;
  /// t² − (d/2)t, present when a degree was requested.
  std::optional<Rational> lower;
};

/// Samples the figure curve at t_i = −1 + 2i/(n − 1), i = 0..n−1.
std::vector<FigureRow> sample_figure(int which, int samples, std::optional<int> d = std::nullopt);

/// Header "t,bound,parabola[,lower]" followed by one exact row per sample.
std::string figure_csv(const std::vector<FigureRow>& rows);

/// 800×600 SVG 1.1 plot of the bound curve and the parabola. Coordinates are
/// the only place rationals become decimals (12 significant digits).
std::string figure_svg(int which, const std::vector<FigureRow>& rows);

}  // namespace tiltbg
