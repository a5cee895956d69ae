#pragma once

#include <compare>
#include <string>
#include <string_view>

#include "tiltbg/quad.hpp"
#include "tiltbg/rational.hpp"

namespace tiltbg {

/// p + q·√D with rational p, q and a square-free integer D ≥ 0 (D = 0 iff q = 0).
///
/// Wall endpoints are roots of one quadratic, so a single radical is enough.
/// Ring operations require a shared radical (or a rational operand); order
/// comparisons work across distinct radicals.
class QuadSurd {
 public:
  QuadSurd() = default;
  QuadSurd(const Rational& p) : p_(p) {}  // NOLINT(google-explicit-constructor)
  QuadSurd(int p) : p_(p) {}              // NOLINT(google-explicit-constructor)
  /// Normalizes D to its square-free part, folding any square factor into q.
  QuadSurd(const Rational& p, const Rational& q, const mpz_class& radicand);

  /// Exact √x for rational x ≥ 0.
  static QuadSurd sqrt(const Rational& x);

  /// Parses the textual form produced by str().
  static QuadSurd parse(std::string_view text);

  const Rational& rational_part() const { return p_; }
  const Rational& surd_coefficient() const { return q_; }
  const mpz_class& radicand() const { return d_; }
  bool is_rational() const { return q_.is_zero(); }

  int sign() const;
  double to_double() const;

  /// "p" when rational, otherwise "p+q*sqrt(D)" (or "p-|q|*sqrt(D)").
  std::string str() const;

  QuadSurd operator-() const { return QuadSurd(-p_, -q_, d_); }
  friend QuadSurd operator+(const QuadSurd& x, const QuadSurd& y);
  friend QuadSurd operator-(const QuadSurd& x, const QuadSurd& y) { return x + (-y); }
  friend QuadSurd operator*(const QuadSurd& x, const QuadSurd& y);
  friend QuadSurd operator/(const QuadSurd& x, const Rational& k);

  friend bool operator==(const QuadSurd& x, const QuadSurd& y) {
    return x.p_ == y.p_ && x.q_ == y.q_ && x.d_ == y.d_;
  }
  friend std::strong_ordering operator<=>(const QuadSurd& x, const QuadSurd& y);

 private:
  Rational p_;
  Rational q_;
  mpz_class d_{0};
};

/// Exact total order on real values; never approximates.
std::strong_ordering surd_compare(const QuadSurd& x, const QuadSurd& y);

/// Exact value of a quadratic at a surd argument.
QuadSurd eval_at(const QuadPoly& q, const QuadSurd& x);

/// Real roots of q (ascending, duplicates collapsed) as surds sharing one radical.
/// The zero polynomial has no isolated roots and returns an empty list.
std::vector<QuadSurd> real_roots(const QuadPoly& q);

}  // namespace tiltbg
