#include "tiltbg/figures.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

#include "tiltbg/bounds.hpp"
#include "tiltbg/error.hpp"

namespace tiltbg {

namespace {

constexpr double kWidth = 800;
constexpr double kHeight = 600;
constexpr double kLeft = 90;
constexpr double kRight = 40;
constexpr double kTop = 60;
constexpr double kBottom = 80;

std::string num(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  std::string s(buf);
  return s == "-0" ? "0" : s;
}

struct Frame {
  double x_lo;
  double x_hi;
  double y_lo;
  double y_hi;

  double px(double x) const { return kLeft + (x - x_lo) / (x_hi - x_lo) * (kWidth - kLeft - kRight); }
  double py(double y) const { return kTop + (y_hi - y) / (y_hi - y_lo) * (kHeight - kTop - kBottom); }
};

std::string polyline(const Frame& frame, const std::vector<FigureRow>& rows, Rational FigureRow::*column,
                     const char* stroke, const char* extra = "") {
  std::ostringstream os;
  os << "  <polyline fill=\"none\" stroke=\"" << stroke << "\" stroke-width=\"2\"" << extra << " points=\"";
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (i) os << ' ';
    os << num(frame.px(rows[i].t.to_double())) << ',' << num(frame.py((rows[i].*column).to_double()));
  }
  os << "\"/>\n";
  return os.str();
}

}  // namespace

std::vector<FigureRow> sample_figure(int which, int samples, std::optional<int> d) {
  if (samples < 2) throw Error(ErrorCode::DomainError, "figures need at least 2 samples");
  const BoundFunction curve = figure_curve(which);
  std::vector<FigureRow> rows;
  rows.reserve(static_cast<std::size_t>(samples));
  for (int i = 0; i < samples; ++i) {
    const Rational t = Rational(-1) + Rational(2L * i, samples - 1);
    FigureRow row{t, curve(t), t * t / 2, std::nullopt};
    if (d) row.lower = t * t - Rational(*d) * t / 2;
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string figure_csv(const std::vector<FigureRow>& rows) {
  std::ostringstream os;
  const bool with_lower = !rows.empty() && rows.front().lower.has_value();
  os << "t,bound,parabola" << (with_lower ? ",lower" : "") << '\n';
  for (const auto& row : rows) {
    os << row.t << ',' << row.bound << ',' << row.parabola;
    if (with_lower) os << ',' << *row.lower;
    os << '\n';
  }
  return os.str();
}

std::string figure_svg(int which, const std::vector<FigureRow>& rows) {
  if (which != 1 && which != 2) throw Error(ErrorCode::DomainError, "figure must be 1 or 2");
  const bool with_lower = !rows.empty() && rows.front().lower.has_value();
  double y_lo = 0;
  double y_hi = 0;
  for (const auto& row : rows) {
    for (double y : {row.bound.to_double(), row.parabola.to_double()}) {
      y_lo = std::min(y_lo, y);
      y_hi = std::max(y_hi, y);
    }
    if (with_lower) {
      y_lo = std::min(y_lo, row.lower->to_double());
      y_hi = std::max(y_hi, row.lower->to_double());
    }
  }
  const double pad = 0.08 * (y_hi - y_lo);
  const Frame frame{-1.1, 1.1, y_lo - pad, y_hi + pad};

  const char* caption = which == 1 ? "strong BG inequality on P^3" : "strong BG inequality on hypersurfaces";
  const char* x_label = which == 1 ? "H^2ch_1/H^3ch_0" : "H^(n-1)ch_1/H^nch_0";
  const char* y_label = which == 1 ? "Hch_2/H^3ch_0" : "H^(n-2)ch_2/H^nch_0";

  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\" standalone=\"no\"?>\n"
     << "<!DOCTYPE svg PUBLIC \"-//W3C//DTD SVG 1.1//EN\" \"http://www.w3.org/Graphics/SVG/1.1/DTD/svg11.dtd\">\n"
     << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"800\" height=\"600\" "
        "viewBox=\"0 0 800 600\">\n"
     << "  <title>" << caption << "</title>\n"
     << "  <rect x=\"0\" y=\"0\" width=\"800\" height=\"600\" fill=\"white\"/>\n";

  const double x0 = frame.px(0);
  const double y0 = frame.py(0);
  os << "  <line x1=\"" << num(frame.px(frame.x_lo)) << "\" y1=\"" << num(y0) << "\" x2=\""
     << num(frame.px(frame.x_hi)) << "\" y2=\"" << num(y0) << "\" stroke=\"black\" stroke-width=\"1\"/>\n";
  os << "  <line x1=\"" << num(x0) << "\" y1=\"" << num(frame.py(frame.y_lo)) << "\" x2=\"" << num(x0)
     << "\" y2=\"" << num(frame.py(frame.y_hi)) << "\" stroke=\"black\" stroke-width=\"1\"/>\n";
  for (int k = -2; k <= 2; ++k) {
    const double x = k / 2.0;
    os << "  <line x1=\"" << num(frame.px(x)) << "\" y1=\"" << num(y0 - 4) << "\" x2=\"" << num(frame.px(x))
       << "\" y2=\"" << num(y0 + 4) << "\" stroke=\"black\" stroke-width=\"1\"/>\n";
    if (k != 0) {
      os << "  <text x=\"" << num(frame.px(x)) << "\" y=\"" << num(y0 + 20)
         << "\" font-family=\"sans-serif\" font-size=\"14\" text-anchor=\"middle\">" << num(x) << "</text>\n";
    }
  }
  if (which == 2) {
    // Dashed guides from the axis up to the corners (±1, 1/2).
    for (double x : {-1.0, 1.0}) {
      os << "  <line x1=\"" << num(frame.px(x)) << "\" y1=\"" << num(y0) << "\" x2=\"" << num(frame.px(x))
         << "\" y2=\"" << num(frame.py(0.5)) << "\" stroke=\"black\" stroke-width=\"1\" stroke-dasharray=\"6,4\"/>\n";
    }
  }
  os << polyline(frame, rows, &FigureRow::parabola, "black");
  os << polyline(frame, rows, &FigureRow::bound, "red");
  if (with_lower) {
    std::vector<FigureRow> lower = rows;
    for (auto& row : lower) row.bound = *row.lower;
    os << polyline(frame, lower, &FigureRow::bound, "blue", " stroke-dasharray=\"4,4\"");
  }
  os << "  <text x=\"" << num(kWidth - kRight) << "\" y=\"" << num(y0 - 10)
     << "\" font-family=\"sans-serif\" font-size=\"16\" text-anchor=\"end\">" << x_label << "</text>\n";
  os << "  <text x=\"" << num(x0 + 10) << "\" y=\"" << num(kTop - 10)
     << "\" font-family=\"sans-serif\" font-size=\"16\" text-anchor=\"start\">" << y_label << "</text>\n";
  os << "  <text x=\"" << num(kWidth / 2) << "\" y=\"" << num(kHeight - 25)
     << "\" font-family=\"sans-serif\" font-size=\"18\" text-anchor=\"middle\">" << caption << "</text>\n";
  os << "</svg>\n";
  return os.str();
}

}  // namespace tiltbg
