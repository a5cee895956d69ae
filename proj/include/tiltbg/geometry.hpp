#pragma once

#include <array>

#include "tiltbg/chern.hpp"
#include "tiltbg/lattice.hpp"
#include "tiltbg/rational.hpp"

namespace tiltbg {

/// td(S²_d) as H_S-coefficients: (1, 2 − d/2, d³/6 − d² + 11d/6).
std::array<Rational, 3> todd_hypersurface(int d);

/// td(ℙ³) as H-coefficients: (1, 2, 11/6, 1).
std::array<Rational, 4> todd_p3();

/// ch(ι_*E) on ℙ³ for E on a degree-d surface with r = ch₀(E),
/// a = H·ch₁(E)/d, b = ch₂(E):
///   s = (0, d·r, (a − d·r/2)·d, b − d²·a/2 + d³·r/6).
NumChern grr_pushforward(int d, const Rational& r, const Rational& a, const Rational& b);

/// χ(v, w) = ∫ ch(v)^∨ · ch(w) · td with ch^∨ = (r, −c₁, ch₂).
Rational euler_pairing(const SurfaceLattice& lattice, const LatticeChern& v, const LatticeChern& w);

/// ch(E^∨(H)) = (r, r·H − c₁, ch₂ − c₁·H + r·H²/2).
LatticeChern dual_twist(const SurfaceLattice& lattice, const LatticeChern& v);

/// The same character in intersection-number form on S²_{H²}.
NumChern to_num_chern(const SurfaceLattice& lattice, const LatticeChern& v);

}  // namespace tiltbg
