#pragma once

#include <string>
#include <vector>

#include "tiltbg/quad.hpp"
#include "tiltbg/rational.hpp"

namespace tiltbg {

/// A named piecewise-quadratic bound on ch₂/ch₀ as a function of the slope.
struct BoundFunction {
  std::string name;
  PiecewiseQuad f;

  const Rational& lo() const { return f.lo(); }
  const Rational& hi() const { return f.hi(); }
  Rational operator()(const Rational& t) const { return f.eval(t); }

  friend bool operator==(const BoundFunction&, const BoundFunction&) = default;
};

// Built-in bounds on [0, 1].
const BoundFunction& theta_bound();        // Θ: −t/4, then 5t/4 − 3/4
const BoundFunction& big_gamma_bound();    // Γ on the quadric, discontinuous at 1/2
const BoundFunction& xi_bound();           // Ξ: t²/3 − t/12, then t²/3 + 5t/12 − 1/4
const BoundFunction& small_gamma_bound();  // γ on one period

/// Looks up a built-in by CLI name: theta, gamma, xi, gamma_small.
const BoundFunction& bound_by_name(const std::string& name);

/// γ extended periodically to all of ℚ.
Rational small_gamma(const Rational& t);
/// Θ(t) = t²/2 − γ(t) on all of ℚ.
Rational theta(const Rational& t);
Rational big_gamma(const Rational& t);
Rational xi(const Rational& t);

/// Θ on [k_lo, k_hi] with a piece per half-integer interval.
PiecewiseQuad theta_piecewise(long k_lo, long k_hi);

/// The red curve of the ℙ³ figure (which = 1) or the hypersurface figure
/// (which = 2) on [−1, 1].
BoundFunction figure_curve(int which);

/// One exact sub-check performed while deciding star-shapedness.
struct StarShapeCheck {
  std::string what;
  bool symbolic = true;
  bool passed = false;
};

struct StarShapeCertificate {
  bool holds = true;
  std::vector<StarShapeCheck> checks;
};

/// Star-shapedness along β = d: every chord from (t, f(t)) to (d, d²/2)
/// lies on or above the graph of f between t and d.
///
/// Equivalent to the slope σ(s) = (f(s) − d²/2)/(s − d) being non-decreasing
/// on each side of d. Inside a piece σ' has the sign of the quadratic
/// c₂s² − 2c₂ds − c₁d − c₀ + d²/2, which is checked with quad_nonneg_on; at
/// breakpoints and overrides the one-sided limits are compared exactly.
StarShapeCertificate star_shape_certificate(const BoundFunction& f, const Rational& d);
bool star_shaped(const BoundFunction& f, const Rational& d);

/// t² − (d/2)t ≤ f(t) ≤ t²/2 on [0, 1].
bool chain_check(const BoundFunction& f, int d);

/// f(0) = 0 and f(1) = 1/2.
bool boundary_conditions(const BoundFunction& f);

struct RestrictionHypotheses {
  bool star_at_zero = false;
  bool star_at_d = false;
  bool boundary = false;
  bool chain = false;

  bool all() const { return star_at_zero && star_at_d && boundary && chain; }
};

/// The numeric hypotheses that license cutting down to a degree-d hypersurface.
RestrictionHypotheses check_restriction_hypotheses(const BoundFunction& f, int d);

/// f(t) = f(1 − t) + t − 1/2 on [1/2, 1], the numerical trace of E ↦ E^∨(H).
bool reflection_identity(const BoundFunction& f);

/// Upper bound on ch₂/(H²ch₀) for a slope-μ sheaf on S²_d, obtained by pushing
/// (r, μr, b) forward to ℙ³ and imposing the ch₃ inequality at (0, α_μ).
Rational derive_xi(int d, const Rational& mu);

/// Checks χ(𝒪(h₁), E) + χ(𝒪(h₂), E) = 2ch₂(E) + H·ch₁(E) on the quadric,
/// on a basis of the character lattice (which proves the linear identity)
/// and on `samples` random characters.
bool derive_quadric_identity(unsigned samples = 100, unsigned long long seed = 20240601);

struct QuarticBound {
  /// Bound on ch₂/(H²ch₀) from χ(E, E) ≤ 0 with ch₁ = (r/2)H.
  Rational bound;
  /// ch₂ forced by χ(E, E) = 2.
  Rational spherical_ch2;
  bool spherical_integral = false;
};

QuarticBound derive_quartic_bound(int r);

}  // namespace tiltbg
