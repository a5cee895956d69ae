#include "tiltbg/bounds.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <stdexcept>

#include "tiltbg/error.hpp"
#include "tiltbg/geometry.hpp"
#include "tiltbg/tilt.hpp"

namespace tiltbg {

namespace {

const Rational kHalf(1, 2);

const QuadPoly kHalfSquare{kHalf, 0, 0};

// γ on one period.
const QuadPoly kGammaLeft{kHalf, Rational(1, 4), 0};
const QuadPoly kGammaRight{kHalf, Rational(-5, 4), Rational(3, 4)};

void require_unit_domain(const BoundFunction& f) {
  if (f.lo() != 0 || f.hi() != 1) {
    throw Error(ErrorCode::DomainError, f.name + " must be defined on [0, 1]");
  }
}

BoundFunction make_theta() {
  return {"theta", PiecewiseQuad({0, kHalf, 1}, {kHalfSquare - kGammaLeft, kHalfSquare - kGammaRight})};
}

}  // namespace

const BoundFunction& theta_bound() {
  static const BoundFunction f = make_theta();
  return f;
}

const BoundFunction& big_gamma_bound() {
  static const BoundFunction f{"gamma", PiecewiseQuad({0, kHalf, 1},
                                                      {QuadPoly::linear(Rational(-1, 2), 0),
                                                       QuadPoly::linear(Rational(3, 2), -1)},
                                                      {{kHalf, 0}})};
  return f;
}

const BoundFunction& xi_bound() {
  static const BoundFunction f{"xi", PiecewiseQuad({0, kHalf, 1}, {{Rational(1, 3), Rational(-1, 12), 0},
                                                                   {Rational(1, 3), Rational(5, 12), Rational(-1, 4)}})};
  return f;
}

const BoundFunction& small_gamma_bound() {
  static const BoundFunction f{"gamma_small", PiecewiseQuad({0, kHalf, 1}, {kGammaLeft, kGammaRight})};
  return f;
}

const BoundFunction& bound_by_name(const std::string& name) {
  if (name == "theta") return theta_bound();
  if (name == "gamma") return big_gamma_bound();
  if (name == "xi") return xi_bound();
  if (name == "gamma_small") return small_gamma_bound();
  throw Error(ErrorCode::ParseError, "unknown bound function '" + name + "'");
}

Rational small_gamma(const Rational& t) {
  const Rational u = t - Rational(t.floor());
  return small_gamma_bound()(u);
}

Rational theta(const Rational& t) { return t * t / 2 - small_gamma(t); }

Rational big_gamma(const Rational& t) { return big_gamma_bound()(t); }

Rational xi(const Rational& t) { return xi_bound()(t); }

PiecewiseQuad theta_piecewise(long k_lo, long k_hi) {
  if (k_hi <= k_lo) throw Error(ErrorCode::DomainError, "theta_piecewise needs k_lo < k_hi");
  std::vector<Rational> breaks;
  std::vector<QuadPoly> pieces;
  for (long k = k_lo; k < k_hi; ++k) {
    const Rational shift(-k);
    breaks.emplace_back(k);
    pieces.push_back(kHalfSquare - kGammaLeft.compose_affine(1, shift));
    breaks.push_back(Rational(k) + kHalf);
    pieces.push_back(kHalfSquare - kGammaRight.compose_affine(1, shift));
  }
  breaks.emplace_back(k_hi);
  return PiecewiseQuad(std::move(breaks), std::move(pieces));
}

BoundFunction figure_curve(int which) {
  if (which == 1) return {"theta", theta_piecewise(-1, 1)};
  if (which == 2) {
    const Rational third(1, 3);
    return {"xi", PiecewiseQuad({-1, -kHalf, 0, kHalf, 1}, {{third, Rational(-5, 12), Rational(-1, 4)},
                                                            {third, Rational(1, 12), 0},
                                                            {third, Rational(-1, 12), 0},
                                                            {third, Rational(5, 12), Rational(-1, 4)}})};
  }
  throw Error(ErrorCode::DomainError, "figure must be 1 or 2");
}

StarShapeCertificate star_shape_certificate(const BoundFunction& f, const Rational& d) {
  require_unit_domain(f);
  if (d.sign() < 0) throw Error(ErrorCode::DomainError, "star-shapedness needs d >= 0");
  const Rational apex = d * d / 2;
  const PiecewiseQuad& g = f.f;
  StarShapeCertificate cert;
  auto record = [&cert](std::string what, bool passed) {
    cert.checks.push_back({std::move(what), true, passed});
    cert.holds = cert.holds && passed;
  };

  struct Side {
    Rational lo;
    Rational hi;
  };
  std::vector<Side> sides;
  if (d.sign() > 0) sides.push_back({0, min(d, Rational(1))});
  if (d < Rational(1)) sides.push_back({d, 1});

  for (std::size_t i = 0; i < g.piece_count(); ++i) {
    const auto [a, b] = g.interval(i);
    const QuadPoly& q = g.pieces()[i];
    const QuadPoly numerator{q.c2, Rational(-2) * q.c2 * d, -q.c1 * d - q.c0 + apex};
    for (const auto& side : sides) {
      const Rational lo = max(a, side.lo);
      const Rational hi = min(b, side.hi);
      if (!(lo < hi)) continue;
      record("piece " + std::to_string(i) + " on [" + lo.str() + ", " + hi.str() + "]: chord slope non-decreasing",
             quad_nonneg_on(numerator, lo, hi));
    }
  }

  std::set<Rational> special(g.breakpoints().begin(), g.breakpoints().end());
  for (const auto& [t, value] : g.overrides()) special.insert(t);
  auto chord_slope = [&](const Rational& y, const Rational& s) { return (y - apex) / (s - d); };
  for (const Rational& p : special) {
    if (p == d) continue;
    const Side& side = p < d ? sides.front() : sides.back();
    const Rational here = chord_slope(g.eval(p), p);
    const auto& bps = g.breakpoints();
    const auto at = std::find(bps.begin(), bps.end(), p);
    if (side.lo < p) {
      const std::size_t left = at != bps.end() ? static_cast<std::size_t>(at - bps.begin()) - 1 : g.piece_index(p);
      record("left limit at " + p.str(), chord_slope(g.pieces()[left](p), p) <= here);
    }
    if (p < side.hi) {
      record("right limit at " + p.str(), here <= chord_slope(g.pieces()[g.piece_index(p)](p), p));
    }
  }
  if (g.contains(d)) record("apex above f(" + d.str() + ")", g.eval(d) <= apex);
  return cert;
}

bool star_shaped(const BoundFunction& f, const Rational& d) { return star_shape_certificate(f, d).holds; }

bool chain_check(const BoundFunction& f, int d) {
  require_unit_domain(f);
  const QuadPoly lower{1, Rational(-d, 2), 0};
  const PiecewiseQuad& g = f.f;
  for (std::size_t i = 0; i < g.piece_count(); ++i) {
    const auto [a, b] = g.interval(i);
    const QuadPoly& q = g.pieces()[i];
    if (!quad_nonneg_on(q - lower, a, b) || !quad_nonneg_on(kHalfSquare - q, a, b)) return false;
  }
  for (const auto& [t, value] : g.overrides()) {
    if (value < lower(t) || kHalfSquare(t) < value) return false;
  }
  return true;
}

bool boundary_conditions(const BoundFunction& f) { return f(0) == 0 && f(1) == kHalf; }

RestrictionHypotheses check_restriction_hypotheses(const BoundFunction& f, int d) {
  if (d < 1) throw Error(ErrorCode::DomainError, "restriction needs d >= 1");
  return {star_shaped(f, 0), star_shaped(f, Rational(d)), boundary_conditions(f), chain_check(f, d)};
}

bool reflection_identity(const BoundFunction& f) {
  require_unit_domain(f);
  const PiecewiseQuad& g = f.f;
  std::set<Rational> cuts{kHalf, 1};
  for (const auto& b : g.breakpoints()) {
    if (kHalf < b && b < Rational(1)) cuts.insert(b);
    if (b.sign() > 0 && b < kHalf) cuts.insert(Rational(1) - b);
  }
  const QuadPoly shift = QuadPoly::linear(1, -kHalf);
  std::vector<Rational> pts(cuts.begin(), cuts.end());
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
    const Rational mid = (pts[i] + pts[i + 1]) / 2;
    const QuadPoly& here = g.pieces()[g.piece_index(mid)];
    const QuadPoly& mirror = g.pieces()[g.piece_index(Rational(1) - mid)];
    if (!(here == mirror.compose_affine(-1, 1) + shift)) return false;
  }
  std::set<Rational> points(cuts);
  for (const auto& [t, value] : g.overrides()) points.insert(kHalf <= t ? t : Rational(1) - t);
  for (const auto& t : points) {
    if (g.eval(t) != g.eval(Rational(1) - t) + t - kHalf) return false;
  }
  return true;
}

Rational derive_xi(int d, const Rational& mu) {
  if (d < 1) throw Error(ErrorCode::DomainError, "derive_xi needs d >= 1");
  if (mu.sign() < 0 || kHalf < mu) throw Error(ErrorCode::DomainError, "derive_xi needs mu in [0, 1/2]");
  const Rational alpha = alpha_mu(d, mu);
  // Q as a function of b for a pushforward of (r, μr, b) at (β, α) = (0, α_μ).
  auto q_of = [&](const Rational& r, const Rational& b) {
    return bg3_quadratic(grr_pushforward(d, r, mu * r, b), 0, alpha);
  };
  const Rational q0 = q_of(1, 0);
  const Rational q1 = q_of(1, 1) - q0;
  if (q_of(1, 2) != q0 + Rational(2) * q1) throw std::logic_error("ch3 inequality is not affine in b");
  if (q1.sign() >= 0) throw std::logic_error("ch3 inequality does not bound b from above");
  const Rational b_max = -q0 / q1;
  // The inequality is homogeneous of degree two in (r, a, b).
  if (q_of(2, Rational(2) * b_max) != 0) throw std::logic_error("ch3 inequality is not homogeneous in r");
  const Rational bound = b_max / Rational(d);

  const Rational dd(d);
  const Rational closed_form =
      (Rational(-2) * mu * mu + (dd - kHalf) * mu + Rational(4) * (mu - dd / 2) * (mu - dd / 2) +
       Rational(3) * dd * mu - dd * dd) /
      6;
  if (bound != closed_form) throw std::logic_error("derived bound disagrees with the closed form");
  return bound;
}

bool derive_quadric_identity(unsigned samples, unsigned long long seed) {
  const SurfaceLattice quadric = SurfaceLattice::quadric();
  const LatticeChern o_h1 = line_bundle(quadric, {1, 0});
  const LatticeChern o_h2 = line_bundle(quadric, {0, 1});
  auto holds = [&](const LatticeChern& e) {
    const Rational lhs = euler_pairing(quadric, o_h1, e) + euler_pairing(quadric, o_h2, e);
    const Rational rhs = Rational(2) * e.ch2 + quadric.dot(quadric.polarization(), e.c1);
    return lhs == rhs;
  };
  // Both sides are linear in E, so agreement on a basis is the identity.
  const std::vector<LatticeChern> basis{
      {0, {0, 0}, 0}, {1, {0, 0}, 0}, {0, {1, 0}, 0}, {0, {0, 1}, 0}, {0, {0, 0}, 1}};
  if (!std::all_of(basis.begin(), basis.end(), holds)) return false;

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> num(-50, 50);
  std::uniform_int_distribution<long> den(1, 12);
  auto draw = [&] { return Rational(num(rng), den(rng)); };
  for (unsigned i = 0; i < samples; ++i) {
    if (!holds({draw(), {draw(), draw()}, draw()})) return false;
  }
  return true;
}

QuarticBound derive_quartic_bound(int r) {
  if (r < 2 || r % 2 != 0) throw Error(ErrorCode::DomainError, "quartic bound needs an even rank >= 2");
  const SurfaceLattice quartic = SurfaceLattice::hypersurface(4);
  const Rational rank(r);
  auto chi = [&](const Rational& ch2) {
    const LatticeChern e{rank, {rank / 2}, ch2};
    return euler_pairing(quartic, e, e);
  };
  const Rational chi0 = chi(0);
  const Rational chi1 = chi(1) - chi0;
  if (chi(2) != chi0 + Rational(2) * chi1) throw std::logic_error("chi(E, E) is not affine in ch2");
  QuarticBound out;
  out.bound = (-chi0 / chi1) / (quartic.h_squared() * rank);
  out.spherical_ch2 = (Rational(2) - chi0) / chi1;
  out.spherical_integral = out.spherical_ch2.is_integer();
  return out;
}

}  // namespace tiltbg
