#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "tiltbg/chern.hpp"
#include "tiltbg/lattice.hpp"
#include "tiltbg/rational.hpp"
#include "tiltbg/surd.hpp"

namespace tiltbg {

/// A point (β, α) of the tilt-stability parameter plane.
struct PlanePoint {
  Rational beta;
  Rational alpha;

  friend bool operator==(const PlanePoint&, const PlanePoint&) = default;
};

/// Which lower boundary a region of stability conditions uses.
enum class Region { Parabola, ThetaExtended };

/// A tilt-stability parameter: α > β²/2 (Parabola) or α > Θ(β) (ThetaExtended).
class TiltPoint {
 public:
  TiltPoint(Rational beta, Rational alpha, Region region = Region::Parabola);

  const Rational& beta() const { return beta_; }
  const Rational& alpha() const { return alpha_; }
  Region region() const { return region_; }

 private:
  Rational beta_;
  Rational alpha_;
  Region region_;
};

/// The numerical wall α = slope·β + intercept, stored as a full line.
struct Wall {
  Rational slope;
  Rational intercept;
  /// p_H of every side with non-zero rank; each lies on the line.
  std::vector<PlanePoint> pivots;

  Rational alpha_at(const Rational& beta) const { return slope * beta + intercept; }
  bool passes_through(const PlanePoint& p) const { return alpha_at(p.beta) == p.alpha; }
  bool same_line(const Wall& o) const { return slope == o.slope && intercept == o.intercept; }

  friend bool operator==(const Wall&, const Wall&) = default;
};

/// An exact wall endpoint; both coordinates share one radical.
struct SurdPoint {
  QuadSurd beta;
  QuadSurd alpha;

  friend bool operator==(const SurdPoint&, const SurdPoint&) = default;
};

using WallEndpoints = std::pair<SurdPoint, SurdPoint>;

enum class Boundary { Parabola, ThetaCurve };

/// p_H(v) = (s₁/(e·s₀), s₂/(e·s₀)).
PlanePoint p_H(const NumChern& v);

/// The locus ν_{β,α}(v) = ν_{β,α}(w) when it is a non-vertical line.
///
/// Returns nullopt when the locus is empty or the whole plane (proportional
/// classes), and also for the vertical locus β = μ_H(v) = μ_H(w), where both
/// tilt slopes are +∞ and there is no line of the stored form.
std::optional<Wall> wall_between(const NumChern& v, const NumChern& w);

/// Maximal closed β-intervals on which the wall line lies on or above the
/// boundary curve, left to right, with their exact endpoints. A tangency
/// shows up as a degenerate interval.
std::vector<WallEndpoints> wall_components(const Wall& wall, Boundary boundary);

/// Endpoints of the wall component whose β-range contains `anchor`, or of
/// the leftmost component when none does; nullopt if the line never reaches
/// the boundary. For the parabola there is at most one component.
std::optional<WallEndpoints> wall_endpoints(const Wall& wall, Boundary boundary, const Rational& anchor = 0);

/// β₂ − β₁ for endpoints ordered by β.
QuadSurd wall_width(const WallEndpoints& ep);

/// β₂ − β₁ ≤ d for a wall straddling β = 0 (β₁ < 0 < β₂).
bool check_first_wall_bound(const WallEndpoints& ep, int d);

/// α_μ = −μ² + (2d − 1)μ/4 for μ ∈ [0, 1/2]; checked against the line
/// y_μ = (μ − d/2)(x − μ) + Θ(μ) at x = 0.
Rational alpha_mu(int d, const Rational& mu);

/// Q(β, α) = (2α − β²)·Δ̄(v) + 4(s₂^β)² − 6·s₁^β·s₃^β on ℙ³.
Rational bg3_quadratic(const NumChern& v, const Rational& beta, const Rational& alpha);

/// Δ̄_H ≥ 0.
bool bg_tilt_check(const NumChern& v);
/// Without lattice data only Δ̄_H ≥ 0 can be tested.
bool bg_classical_check(const NumChern& v);
/// Δ̄_H(E) ≥ Δ(E) ≥ 0 on a lattice surface.
bool bg_classical_check(const SurfaceLattice& lattice, const LatticeChern& v);

/// α-intercept of the line through p_H(v) and p_H(v(−dH)), which equals
/// y − m² + d·m/2 for (m, y) = p_H(v).
Rational restriction_alpha(const NumChern& v, int d);

/// Open β-interval searched by the wall scan.
struct BetaInterval {
  Rational lo;
  Rational hi;
};

/// (μ − d, μ) for a pushforward from a degree-d surface, where μ is the
/// slope of the surface sheaf, recovered as s₂/s₁ + d/2.
BetaInterval default_scan_region(const NumChern& v, int d);

struct WallCandidate {
  /// (s₀, s₁, s₂) of the destabilizing class; s₃ is not constrained by walls
  /// and is stored as 0.
  NumChern w;
  Wall wall;
  /// Closed β-range of the wall inside the parabola region.
  WallEndpoints segment;
};

/// Integral classes w (s₀ ∈ [−R, R], s₁ ∈ ℤ, s₂ ∈ ½ℤ) with Δ̄(w) ≥ 0,
/// Δ̄(v − w) ≥ 0 and Δ̄(w) + Δ̄(v − w) ≤ Δ̄(v), whose wall segment meets the
/// open region and keeps w and v − w numerically inside Coh^β along it.
///
/// Sorted by (s₀, s₁, s₂); one representative per wall line. The result is
/// identical for every worker count.
std::vector<WallCandidate> enumerate_candidate_walls(const NumChern& v, int rank_bound, const BetaInterval& region,
                                                     unsigned jobs = 1);

}  // namespace tiltbg
