#include "tiltbg/surd.hpp"

#include <cmath>
#include <utility>

#include "tiltbg/error.hpp"

namespace tiltbg {

namespace {

// n = k² · m with m square-free. Trial division is ample for the radicands that
// occur here (discriminants of small walls); a large cofactor left over after
// the cut-off is only reduced if it is itself a perfect square.
std::pair<mpz_class, mpz_class> split_square(mpz_class n) {
  mpz_class k = 1;
  mpz_class m = 1;
  if (mpz_perfect_square_p(n.get_mpz_t())) {
    mpz_class root;
    mpz_sqrt(root.get_mpz_t(), n.get_mpz_t());
    return {root, 1};
  }
  constexpr unsigned long kTrialLimit = 1'000'000;
  for (unsigned long f = 2; f <= kTrialLimit && mpz_class(f) * f <= n; f += (f == 2 ? 1 : 2)) {
    unsigned exponent = 0;
    while (mpz_divisible_ui_p(n.get_mpz_t(), f)) {
      n /= f;
      ++exponent;
    }
    for (unsigned e = 0; e + 1 < exponent; e += 2) k *= f;
    if (exponent % 2 == 1) m *= f;
  }
  if (mpz_perfect_square_p(n.get_mpz_t())) {
    mpz_class root;
    mpz_sqrt(root.get_mpz_t(), n.get_mpz_t());
    k *= root;
  } else {
    m *= n;
  }
  return {k, m};
}

int sign_of(const Rational& p, const Rational& q, const mpz_class& d) {
  const int sp = p.sign();
  const int sq = q.sign();
  if (sq == 0) return sp;
  if (sp == 0 || sp == sq) return sq;
  // Opposite signs: the larger magnitude wins; compare p² with q²·D.
  const auto c = (p * p) <=> (q * q * Rational(d));
  if (c > 0) return sp;
  if (c < 0) return sq;
  return 0;
}

}  // namespace

QuadSurd::QuadSurd(const Rational& p, const Rational& q, const mpz_class& radicand) : p_(p), q_(q) {
  if (radicand < 0) throw Error(ErrorCode::DomainError, "negative radicand");
  if (q_.is_zero() || radicand == 0) {
    q_ = 0;
    return;
  }
  auto [k, m] = split_square(radicand);
  if (m == 1) {
    p_ += q_ * Rational(k);
    q_ = 0;
    return;
  }
  q_ *= Rational(k);
  d_ = m;
}

QuadSurd QuadSurd::sqrt(const Rational& x) {
  if (x.sign() < 0) throw Error(ErrorCode::DomainError, "square root of negative " + x.str());
  // √(n/m) = √(n·m) / m
  const mpz_class n = x.numerator();
  const mpz_class m = x.denominator();
  return QuadSurd(0, Rational(mpz_class(1), m), n * m);
}

int QuadSurd::sign() const { return sign_of(p_, q_, d_); }

double QuadSurd::to_double() const {
  return p_.to_double() + q_.to_double() * std::sqrt(d_.get_d());
}

std::string QuadSurd::str() const {
  if (is_rational()) return p_.str();
  const std::string op = q_.sign() > 0 ? "+" : "-";
  return p_.str() + op + q_.abs().str() + "*sqrt(" + d_.get_str() + ")";
}

QuadSurd QuadSurd::parse(std::string_view text) {
  const auto star = text.find("*sqrt(");
  if (star == std::string_view::npos) return QuadSurd(Rational::parse(text));
  if (text.empty() || text.back() != ')') throw Error(ErrorCode::ParseError, "malformed surd '" + std::string(text) + "'");
  const std::string_view head = text.substr(0, star);
  const std::string_view radicand = text.substr(star + 6, text.size() - star - 7);
  // Split "p±q" at the last sign that is not leading.
  std::size_t split = std::string_view::npos;
  for (std::size_t i = head.size(); i-- > 1;) {
    if (head[i] == '+' || head[i] == '-') {
      split = i;
      break;
    }
  }
  if (split == std::string_view::npos) throw Error(ErrorCode::ParseError, "malformed surd '" + std::string(text) + "'");
  const Rational p = Rational::parse(head.substr(0, split));
  Rational q = Rational::parse(head.substr(split + 1));
  if (head[split] == '-') q = -q;
  const Rational d = Rational::parse(radicand);
  if (!d.is_integer() || d.sign() < 0) throw Error(ErrorCode::ParseError, "radicand must be a non-negative integer");
  return QuadSurd(p, q, d.numerator());
}

QuadSurd operator+(const QuadSurd& x, const QuadSurd& y) {
  if (x.is_rational()) return QuadSurd(x.p_ + y.p_, y.q_, y.d_);
  if (y.is_rational()) return QuadSurd(x.p_ + y.p_, x.q_, x.d_);
  if (x.d_ != y.d_) {
    throw Error(ErrorCode::UnsupportedRadicalPair,
                "cannot add surds over sqrt(" + x.d_.get_str() + ") and sqrt(" + y.d_.get_str() + ")");
  }
  return QuadSurd(x.p_ + y.p_, x.q_ + y.q_, x.d_);
}

QuadSurd operator*(const QuadSurd& x, const QuadSurd& y) {
  if (x.is_rational()) return QuadSurd(x.p_ * y.p_, x.p_ * y.q_, y.d_);
  if (y.is_rational()) return QuadSurd(x.p_ * y.p_, x.q_ * y.p_, x.d_);
  if (x.d_ != y.d_) {
    throw Error(ErrorCode::UnsupportedRadicalPair,
                "cannot multiply surds over sqrt(" + x.d_.get_str() + ") and sqrt(" + y.d_.get_str() + ")");
  }
  const Rational d(x.d_);
  return QuadSurd(x.p_ * y.p_ + x.q_ * y.q_ * d, x.p_ * y.q_ + x.q_ * y.p_, x.d_);
}

QuadSurd operator/(const QuadSurd& x, const Rational& k) {
  return QuadSurd(x.p_ / k, x.q_ / k, x.d_);
}

std::strong_ordering surd_compare(const QuadSurd& x, const QuadSurd& y) {
  int s = 0;
  if (x.is_rational() || y.is_rational() || x.radicand() == y.radicand()) {
    s = (x - y).sign();
  } else {
    // x − y = A + B with A = (p_x − p_y) + q_x√D_x and B = −q_y√D_y.
    // Signs of A and B are exact; when they disagree compare A² (a surd over
    // D_x) against B² (rational).
    const QuadSurd a(x.rational_part() - y.rational_part(), x.surd_coefficient(), x.radicand());
    const QuadSurd b(0, -y.surd_coefficient(), y.radicand());
    const int sa = a.sign();
    const int sb = b.sign();
    if (sa == 0) {
      s = sb;
    } else if (sb == 0 || sa == sb) {
      s = sa;
    } else {
      const Rational b2 = y.surd_coefficient() * y.surd_coefficient() * Rational(y.radicand());
      const int diff = (a * a - QuadSurd(b2)).sign();
      s = diff > 0 ? sa : (diff < 0 ? sb : 0);
    }
  }
  if (s < 0) return std::strong_ordering::less;
  if (s > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::strong_ordering operator<=>(const QuadSurd& x, const QuadSurd& y) { return surd_compare(x, y); }

QuadSurd eval_at(const QuadPoly& q, const QuadSurd& x) {
  return QuadSurd(q.c2) * x * x + QuadSurd(q.c1) * x + QuadSurd(q.c0);
}

std::vector<QuadSurd> real_roots(const QuadPoly& q) {
  if (q.c2.is_zero()) {
    if (q.c1.is_zero()) return {};
    return {QuadSurd(-q.c0 / q.c1)};
  }
  const Rational disc = q.c1 * q.c1 - Rational(4) * q.c2 * q.c0;
  if (disc.sign() < 0) return {};
  const Rational two_a = Rational(2) * q.c2;
  const QuadSurd root = QuadSurd::sqrt(disc);
  if (disc.is_zero()) return {QuadSurd(-q.c1 / two_a)};
  QuadSurd r1 = (QuadSurd(-q.c1) - root) / two_a;
  QuadSurd r2 = (QuadSurd(-q.c1) + root) / two_a;
  if (r2 < r1) std::swap(r1, r2);
  return {r1, r2};
}

}  // namespace tiltbg
