#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tiltbg/rational.hpp"

namespace tiltbg {

/// c2·t² + c1·t + c0 with exact coefficients.
struct QuadPoly {
  Rational c2;
  Rational c1;
  Rational c0;

  static QuadPoly constant(const Rational& c) { return {0, 0, c}; }
  static QuadPoly linear(const Rational& slope, const Rational& intercept) { return {0, slope, intercept}; }

  Rational operator()(const Rational& t) const { return (c2 * t + c1) * t + c0; }

  QuadPoly derivative() const { return {0, Rational(2) * c2, c1}; }
  int degree() const;  // -1 for the zero polynomial

  /// t ↦ q(a·t + b).
  QuadPoly compose_affine(const Rational& a, const Rational& b) const;

  /// Abscissa of the extremum; only meaningful when c2 ≠ 0.
  std::optional<Rational> vertex() const;

  friend QuadPoly operator+(const QuadPoly& p, const QuadPoly& q) { return {p.c2 + q.c2, p.c1 + q.c1, p.c0 + q.c0}; }
  friend QuadPoly operator-(const QuadPoly& p, const QuadPoly& q) { return {p.c2 - q.c2, p.c1 - q.c1, p.c0 - q.c0}; }
  friend QuadPoly operator*(const Rational& k, const QuadPoly& q) { return {k * q.c2, k * q.c1, k * q.c0}; }
  friend bool operator==(const QuadPoly&, const QuadPoly&) = default;
};

std::string to_string(const QuadPoly& q);

/// True iff q(t) ≥ 0 for every t in [a, b]. Decided exactly from the
/// endpoint values and, for convex q, the vertex when it falls inside.
bool quad_nonneg_on(const QuadPoly& q, const Rational& a, const Rational& b);

/// Piecewise quadratic on [t_0, t_m]. Piece i covers [t_i, t_{i+1}), the last
/// piece is closed on the right, and point overrides win over any piece.
class PiecewiseQuad {
 public:
  PiecewiseQuad(std::vector<Rational> breakpoints, std::vector<QuadPoly> pieces,
                std::map<Rational, Rational> overrides = {});

  Rational eval(const Rational& t) const;
  Rational operator()(const Rational& t) const { return eval(t); }

  /// Index of the piece covering t under the half-open convention.
  std::size_t piece_index(const Rational& t) const;
  bool contains(const Rational& t) const { return lo() <= t && t <= hi(); }

  const Rational& lo() const { return breakpoints_.front(); }
  const Rational& hi() const { return breakpoints_.back(); }
  const std::vector<Rational>& breakpoints() const { return breakpoints_; }
  const std::vector<QuadPoly>& pieces() const { return pieces_; }
  const std::map<Rational, Rational>& overrides() const { return overrides_; }

  std::size_t piece_count() const { return pieces_.size(); }
  std::pair<Rational, Rational> interval(std::size_t i) const { return {breakpoints_[i], breakpoints_[i + 1]}; }

  friend bool operator==(const PiecewiseQuad&, const PiecewiseQuad&) = default;

 private:
  std::vector<Rational> breakpoints_;
  std::vector<QuadPoly> pieces_;
  std::map<Rational, Rational> overrides_;
};

}  // namespace tiltbg
