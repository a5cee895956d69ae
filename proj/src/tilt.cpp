#include "tiltbg/tilt.hpp"

#include <algorithm>
#include <future>
#include <stdexcept>

#include "tiltbg/bounds.hpp"
#include "tiltbg/error.hpp"
#include "tiltbg/geometry.hpp"

namespace tiltbg {

namespace {

// Smallest integer R with R² ≥ x (x ≥ 0).
mpz_class ceil_sqrt(const Rational& x) {
  mpz_class c = x.ceil();
  mpz_class root;
  mpz_sqrt(root.get_mpz_t(), c.get_mpz_t());
  if (root * root < c) root += 1;
  return root;
}

struct SurdInterval {
  QuadSurd lo;
  QuadSurd hi;
};

// Closed sub-intervals of [a, b] where h ≥ 0, isolated zeros included.
void nonneg_pieces(const QuadPoly& h, const Rational& a, const Rational& b, std::vector<SurdInterval>& out) {
  if (h.degree() < 0) {
    out.push_back({a, b});
    return;
  }
  std::vector<QuadSurd> points{QuadSurd(a)};
  std::vector<QuadSurd> zeros;
  for (const auto& root : real_roots(h)) {
    if (root < QuadSurd(a) || QuadSurd(b) < root) continue;
    zeros.push_back(root);
    if (QuadSurd(a) < root && root < QuadSurd(b)) points.push_back(root);
  }
  points.emplace_back(b);
  for (std::size_t i = 0; i + 1 < points.size(); ++i) {
    // Consecutive points are rational or roots of h, so they share a radical.
    const QuadSurd mid = (points[i] + points[i + 1]) / Rational(2);
    if (eval_at(h, mid).sign() > 0) out.push_back({points[i], points[i + 1]});
  }
  for (const auto& z : zeros) out.push_back({z, z});
  if (h(a).sign() >= 0) out.push_back({a, a});
  if (h(b).sign() >= 0) out.push_back({b, b});
}

std::vector<SurdInterval> merge(std::vector<SurdInterval> parts) {
  std::sort(parts.begin(), parts.end(), [](const SurdInterval& x, const SurdInterval& y) {
    if (x.lo != y.lo) return x.lo < y.lo;
    return x.hi < y.hi;
  });
  std::vector<SurdInterval> out;
  for (auto& part : parts) {
    if (!out.empty() && !(out.back().hi < part.lo)) {
      if (out.back().hi < part.hi) out.back().hi = part.hi;
    } else {
      out.push_back(std::move(part));
    }
  }
  return out;
}

SurdPoint point_on(const Wall& wall, const QuadSurd& beta) {
  return {beta, QuadSurd(wall.slope) * beta + QuadSurd(wall.intercept)};
}

// Sign of s₁ − β·e·s₀ at an exact β.
bool heart_side_ok(const NumChern& v, const QuadSurd& beta) {
  const Rational e(v.variety().hdeg());
  return (QuadSurd(v[1]) - beta * QuadSurd(e * v[0])).sign() >= 0;
}

}  // namespace

TiltPoint::TiltPoint(Rational beta, Rational alpha, Region region)
    : beta_(std::move(beta)), alpha_(std::move(alpha)), region_(region) {
  const Rational floor_value = region_ == Region::Parabola ? beta_ * beta_ / 2 : theta(beta_);
  if (!(floor_value < alpha_)) {
    throw Error(ErrorCode::DomainError, "(" + beta_.str() + ", " + alpha_.str() + ") is not above the " +
                                            (region_ == Region::Parabola ? "parabola" : "Theta curve"));
  }
}

PlanePoint p_H(const NumChern& v) {
  if (v.rank().is_zero()) throw Error(ErrorCode::RankZero, "p_H needs a non-zero rank");
  const Rational denom = Rational(v.variety().hdeg()) * v[0];
  return {v[1] / denom, v[2] / denom};
}

std::optional<Wall> wall_between(const NumChern& v, const NumChern& w) {
  if (!(v.variety() == w.variety())) {
    throw Error(ErrorCode::WrongVariety, "characters on " + v.variety().name() + " and " + w.variety().name());
  }
  // Cross-multiplying ν(v) = ν(w) cancels the αβ terms and leaves
  //   A·α + B·β + C = 0.
  const Rational e(v.variety().hdeg());
  const Rational a = e * (w[0] * v[1] - v[0] * w[1]);
  const Rational b = e * (w[2] * v[0] - v[2] * w[0]);
  const Rational c = v[2] * w[1] - w[2] * v[1];
  if (a.is_zero()) return std::nullopt;
  Wall wall{-b / a, -c / a, {}};
  if (!v.rank().is_zero()) wall.pivots.push_back(p_H(v));
  if (!w.rank().is_zero()) wall.pivots.push_back(p_H(w));
  return wall;
}

std::vector<WallEndpoints> wall_components(const Wall& wall, Boundary boundary) {
  const Rational& m = wall.slope;
  const Rational& c = wall.intercept;
  // Both curves sit above β²/2 − slack, so any point with the line on top
  // satisfies (β − m)² ≤ m² + 2c + 2·slack.
  const Rational slack = boundary == Boundary::Parabola ? Rational(0) : Rational(1, 4);
  const Rational reach = m * m + Rational(2) * c + Rational(2) * slack;
  if (reach.sign() < 0) return {};
  const mpz_class radius = ceil_sqrt(reach) + 1;
  const mpz_class lo = m.floor() - radius;
  const mpz_class hi = m.ceil() + radius;

  const QuadPoly line = QuadPoly::linear(m, c);
  std::vector<SurdInterval> parts;
  if (boundary == Boundary::Parabola) {
    nonneg_pieces(line - QuadPoly{Rational(1, 2), 0, 0}, Rational(lo), Rational(hi), parts);
  } else {
    const PiecewiseQuad curve = theta_piecewise(lo.get_si(), hi.get_si());
    for (std::size_t i = 0; i < curve.piece_count(); ++i) {
      const auto [a, b] = curve.interval(i);
      nonneg_pieces(line - curve.pieces()[i], a, b, parts);
    }
  }
  std::vector<WallEndpoints> out;
  for (const auto& part : merge(std::move(parts))) out.emplace_back(point_on(wall, part.lo), point_on(wall, part.hi));
  return out;
}

std::optional<WallEndpoints> wall_endpoints(const Wall& wall, Boundary boundary, const Rational& anchor) {
  auto components = wall_components(wall, boundary);
  if (components.empty()) return std::nullopt;
  const QuadSurd a(anchor);
  for (const auto& comp : components) {
    if (!(a < comp.first.beta) && !(comp.second.beta < a)) return comp;
  }
  return components.front();
}

QuadSurd wall_width(const WallEndpoints& ep) {
  if (ep.second.beta < ep.first.beta) throw Error(ErrorCode::DomainError, "wall endpoints must be ordered by beta");
  return ep.second.beta - ep.first.beta;
}

bool check_first_wall_bound(const WallEndpoints& ep, int d) {
  const QuadSurd zero(0);
  if (!(ep.first.beta < zero && zero < ep.second.beta)) {
    throw Error(ErrorCode::StraddleViolation,
                "endpoints " + ep.first.beta.str() + ", " + ep.second.beta.str() + " do not straddle beta = 0");
  }
  // β₂ ≤ β₁ + d compares across radicals without forming the difference.
  return !(ep.first.beta + QuadSurd(Rational(d)) < ep.second.beta);
}

Rational alpha_mu(int d, const Rational& mu) {
  if (d < 1) throw Error(ErrorCode::DomainError, "alpha_mu needs d >= 1");
  if (mu.sign() < 0 || Rational(1, 2) < mu) throw Error(ErrorCode::DomainError, "alpha_mu needs mu in [0, 1/2]");
  const Rational dd(d);
  const Rational value = -mu * mu + (Rational(2) * dd - 1) * mu / 4;
  const Rational line_at_zero = (mu - dd / 2) * (Rational(0) - mu) + theta(mu);
  if (value != line_at_zero) throw std::logic_error("alpha_mu disagrees with y_mu(0)");
  return value;
}

Rational bg3_quadratic(const NumChern& v, const Rational& beta, const Rational& alpha) {
  if (!v.variety().is_p3()) throw Error(ErrorCode::WrongVariety, "the ch3 inequality is stated on P3");
  const NumChern t = twist_beta(v, beta);
  return (Rational(2) * alpha - beta * beta) * delta_bar(v) + Rational(4) * t[2] * t[2] - Rational(6) * t[1] * t[3];
}

bool bg_tilt_check(const NumChern& v) { return delta_bar(v).sign() >= 0; }

bool bg_classical_check(const NumChern& v) { return bg_tilt_check(v); }

bool bg_classical_check(const SurfaceLattice& lattice, const LatticeChern& v) {
  const Rational discriminant = delta_surface(lattice, v);
  return discriminant.sign() >= 0 && discriminant <= delta_bar(to_num_chern(lattice, v));
}

Rational restriction_alpha(const NumChern& v, int d) {
  const PlanePoint p = p_H(v);
  const PlanePoint q = p_H(twist_beta(v, Rational(d)));
  const Rational slope = (q.alpha - p.alpha) / (q.beta - p.beta);
  const Rational intercept = p.alpha - slope * p.beta;
  const Rational closed_form = p.alpha - p.beta * p.beta + Rational(d) * p.beta / 2;
  if (intercept != closed_form) throw std::logic_error("restriction line intercept disagrees with closed form");
  return intercept;
}

BetaInterval default_scan_region(const NumChern& v, int d) {
  if (d < 1) throw Error(ErrorCode::InvalidDegree, "degree must be at least 1");
  if (!v.rank().is_zero() || v[1].is_zero()) {
    throw Error(ErrorCode::DomainError, "default region is defined for pushforwards (rank 0, s1 != 0)");
  }
  const Rational mu = v[2] / v[1] + Rational(d) / 2;
  return {mu - Rational(d), mu};
}

namespace {

std::optional<WallCandidate> try_candidate(const NumChern& v, const NumChern& w, const BetaInterval& region) {
  const auto wall = wall_between(v, w);
  if (!wall) return std::nullopt;
  const auto segment = wall_endpoints(*wall, Boundary::Parabola);
  if (!segment) return std::nullopt;
  const QuadSurd rlo(region.lo);
  const QuadSurd rhi(region.hi);
  const QuadSurd& b1 = segment->first.beta;
  const QuadSurd& b2 = segment->second.beta;
  if (!(b1 < rhi && rlo < b2)) return std::nullopt;
  // Linear conditions hold on the whole overlap iff they hold at its ends.
  const QuadSurd lo = b1 < rlo ? rlo : b1;
  const QuadSurd hi = rhi < b2 ? rhi : b2;
  const NumChern rest = v - w;
  for (const QuadSurd* beta : {&lo, &hi}) {
    if (!heart_side_ok(w, *beta) || !heart_side_ok(rest, *beta)) return std::nullopt;
  }
  return WallCandidate{w, *wall, *segment};
}

// a·x + b ≥ 0 narrows [lo, hi]; returns false when the constraint is infeasible.
bool narrow(const Rational& a, const Rational& b, std::optional<Rational>& lo, std::optional<Rational>& hi) {
  if (a.is_zero()) return b.sign() >= 0;
  const Rational x = -b / a;
  if (a.sign() > 0) {
    if (!lo || *lo < x) lo = x;
  } else {
    if (!hi || x < *hi) hi = x;
  }
  return true;
}

std::vector<WallCandidate> scan_rank(const NumChern& v, const Rational& s0, const BetaInterval& region) {
  std::vector<WallCandidate> out;
  const Rational e(v.variety().hdeg());
  const Rational dv = delta_bar(v);
  const Rational r0 = v[0] - s0;
  // Coh^β membership of w and v − w at some β in the region bounds s₁.
  const Rational s1_lo = e * min(s0 * region.lo, s0 * region.hi);
  const Rational s1_hi = v[1] - e * min(r0 * region.lo, r0 * region.hi);
  for (mpz_class k = s1_lo.ceil(); k <= s1_hi.floor(); ++k) {
    const Rational s1(k);
    const Rational t1 = v[1] - s1;
    // The three discriminant constraints are affine in s₂ with coefficients
    // summing to zero, so they bound s₂ on both sides unless all vanish.
    std::optional<Rational> lo;
    std::optional<Rational> hi;
    bool feasible = narrow(Rational(-2) * e * s0, s1 * s1, lo, hi);
    feasible = feasible && narrow(Rational(2) * e * r0, t1 * t1 - Rational(2) * e * r0 * v[2], lo, hi);
    feasible = feasible && narrow(Rational(2) * e * (Rational(2) * s0 - v[0]),
                                  dv - s1 * s1 - t1 * t1 + Rational(2) * e * r0 * v[2], lo, hi);
    if (!feasible || !lo || !hi || *hi < *lo) continue;
    const mpz_class first = (Rational(2) * *lo).ceil();
    const mpz_class last = (Rational(2) * *hi).floor();
    for (mpz_class j = first; j <= last; ++j) {
      NumChern w(v.variety(), {s0, s1, Rational(j, mpz_class(2)), 0});
      if (auto cand = try_candidate(v, w, region)) out.push_back(std::move(*cand));
    }
  }
  return out;
}

}  // namespace

std::vector<WallCandidate> enumerate_candidate_walls(const NumChern& v, int rank_bound, const BetaInterval& region,
                                                     unsigned jobs) {
  if (!v.variety().is_p3()) throw Error(ErrorCode::WrongVariety, "wall scan works on P3 characters");
  if (rank_bound < 1) throw Error(ErrorCode::DomainError, "rank bound must be at least 1");
  if (!(region.lo < region.hi)) throw Error(ErrorCode::DomainError, "empty beta region");
  if (delta_bar(v).sign() < 0) throw Error(ErrorCode::DomainError, "v violates the tilt BG inequality");

  std::vector<Rational> ranks;
  for (int r = -rank_bound; r <= rank_bound; ++r) ranks.emplace_back(r);
  // Rank-zero w against a rank-zero v never gives a line wall, and leaves s₂
  // unbounded, so skip that slice outright.
  if (v[0].is_zero()) ranks.erase(std::find(ranks.begin(), ranks.end(), Rational(0)));

  std::vector<std::vector<WallCandidate>> per_rank(ranks.size());
  const unsigned workers = std::max(1U, std::min<unsigned>(jobs, static_cast<unsigned>(ranks.size())));
  if (workers == 1) {
    for (std::size_t i = 0; i < ranks.size(); ++i) per_rank[i] = scan_rank(v, ranks[i], region);
  } else {
    std::vector<std::future<void>> tasks;
    for (unsigned t = 0; t < workers; ++t) {
      tasks.push_back(std::async(std::launch::async, [&, t] {
        for (std::size_t i = t; i < ranks.size(); i += workers) per_rank[i] = scan_rank(v, ranks[i], region);
      }));
    }
    for (auto& task : tasks) task.get();
  }

  std::vector<WallCandidate> out;
  for (auto& bucket : per_rank) {
    for (auto& cand : bucket) {
      const bool seen = std::any_of(out.begin(), out.end(), [&](const WallCandidate& c) { return c.wall.same_line(cand.wall); });
      if (!seen) out.push_back(std::move(cand));
    }
  }
  return out;
}

}  // namespace tiltbg
