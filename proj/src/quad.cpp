#include "tiltbg/quad.hpp"

#include <algorithm>

#include "tiltbg/error.hpp"

namespace tiltbg {

int QuadPoly::degree() const {
  if (!c2.is_zero()) return 2;
  if (!c1.is_zero()) return 1;
  if (!c0.is_zero()) return 0;
  return -1;
}

QuadPoly QuadPoly::compose_affine(const Rational& a, const Rational& b) const {
  // c2(at+b)² + c1(at+b) + c0
  return {c2 * a * a, Rational(2) * c2 * a * b + c1 * a, c2 * b * b + c1 * b + c0};
}

std::optional<Rational> QuadPoly::vertex() const {
  if (c2.is_zero()) return std::nullopt;
  return -c1 / (Rational(2) * c2);
}

std::string to_string(const QuadPoly& q) {
  return "(" + q.c2.str() + ")t^2 + (" + q.c1.str() + ")t + (" + q.c0.str() + ")";
}

bool quad_nonneg_on(const QuadPoly& q, const Rational& a, const Rational& b) {
  if (b < a) throw Error(ErrorCode::DomainError, "quad_nonneg_on: empty interval");
  if (q(a).sign() < 0 || q(b).sign() < 0) return false;
  // Concave or affine: the minimum over an interval sits at an endpoint.
  if (q.c2.sign() <= 0) return true;
  const Rational v = *q.vertex();
  if (a < v && v < b) return q(v).sign() >= 0;
  return true;
}

PiecewiseQuad::PiecewiseQuad(std::vector<Rational> breakpoints, std::vector<QuadPoly> pieces,
                             std::map<Rational, Rational> overrides)
    : breakpoints_(std::move(breakpoints)), pieces_(std::move(pieces)), overrides_(std::move(overrides)) {
  if (breakpoints_.size() < 2) throw Error(ErrorCode::DomainError, "piecewise function needs at least two breakpoints");
  if (pieces_.size() + 1 != breakpoints_.size()) {
    throw Error(ErrorCode::DomainError, "piece count must be breakpoint count - 1");
  }
  for (std::size_t i = 0; i + 1 < breakpoints_.size(); ++i) {
    if (!(breakpoints_[i] < breakpoints_[i + 1])) {
      throw Error(ErrorCode::DomainError, "breakpoints must be strictly increasing");
    }
  }
  for (const auto& [t, value] : overrides_) {
    if (!contains(t)) throw Error(ErrorCode::OutOfDomain, "override at " + t.str() + " lies outside the domain");
  }
}

std::size_t PiecewiseQuad::piece_index(const Rational& t) const {
  if (!contains(t)) {
    throw Error(ErrorCode::OutOfDomain, t.str() + " outside [" + lo().str() + ", " + hi().str() + "]");
  }
  // First breakpoint strictly greater than t; the piece starts one before it.
  auto it = std::upper_bound(breakpoints_.begin(), breakpoints_.end(), t);
  if (it == breakpoints_.end()) return pieces_.size() - 1;
  return static_cast<std::size_t>(it - breakpoints_.begin()) - 1;
}

Rational PiecewiseQuad::eval(const Rational& t) const {
  const std::size_t i = piece_index(t);
  if (auto it = overrides_.find(t); it != overrides_.end()) return it->second;
  return pieces_[i](t);
}

}  // namespace tiltbg
