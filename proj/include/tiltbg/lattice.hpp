#pragma once

#include <string>
#include <vector>

#include "tiltbg/rational.hpp"

namespace tiltbg {

using RationalVector = std::vector<Rational>;

/// Numerical Picard lattice of a surface, enough for Riemann–Roch:
/// intersection form, canonical class, χ(𝒪), and the polarization H.
///
/// The Todd class is td = (1, −K/2, todd2).
class SurfaceLattice {
 public:
  SurfaceLattice(std::vector<std::string> basis, std::vector<RationalVector> gram, RationalVector canonical,
                 Rational todd2, RationalVector polarization);

  /// ℙ¹×ℙ¹ with basis (h₁, h₂) and H = h₁ + h₂.
  static SurfaceLattice quadric();
  /// Rank-one lattice ⟨H⟩ of a degree-d surface in ℙ³, H² = d, K = (d−4)H.
  static SurfaceLattice hypersurface(int d);

  std::size_t rank() const { return basis_.size(); }
  const std::vector<std::string>& basis() const { return basis_; }
  const std::vector<RationalVector>& gram() const { return gram_; }
  const RationalVector& canonical() const { return canonical_; }
  const Rational& todd2() const { return todd2_; }
  const RationalVector& polarization() const { return polarization_; }

  /// Intersection product u·v.
  Rational dot(const RationalVector& u, const RationalVector& v) const;
  Rational h_squared() const { return dot(polarization_, polarization_); }
  /// td₁ = −K/2 in the lattice basis.
  RationalVector todd1() const;

  friend bool operator==(const SurfaceLattice&, const SurfaceLattice&) = default;

 private:
  std::vector<std::string> basis_;
  std::vector<RationalVector> gram_;
  RationalVector canonical_;
  Rational todd2_;
  RationalVector polarization_;
};

/// Chern character (ch₀, ch₁, ch₂) of an object on a lattice surface;
/// ch₁ is a coordinate vector in the lattice basis.
struct LatticeChern {
  Rational r;
  RationalVector c1;
  Rational ch2;

  friend bool operator==(const LatticeChern&, const LatticeChern&) = default;
};

LatticeChern operator+(const LatticeChern& v, const LatticeChern& w);
LatticeChern operator-(const LatticeChern& v, const LatticeChern& w);
LatticeChern operator*(const Rational& k, const LatticeChern& v);

/// ch(𝒪(D)) = (1, D, D²/2).
LatticeChern line_bundle(const SurfaceLattice& lattice, const RationalVector& divisor);

}  // namespace tiltbg
