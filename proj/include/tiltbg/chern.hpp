#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tiltbg/lattice.hpp"
#include "tiltbg/rational.hpp"
#include "tiltbg/variety.hpp"

namespace tiltbg {

/// Chern character in intersection-number coordinates: s_i = H^{n−i}·ch_i.
///
/// Every slope and discriminant is written in these pairings, so consumers
/// only ever need Hⁿ (Variety::hdeg) on top of the list.
class NumChern {
 public:
  NumChern(Variety var, std::vector<Rational> s);

  /// ch(𝒪(kH)): s₀ = 1 and s_i = Hⁿ·kⁱ/i! for i ≥ 1.
  static NumChern line_bundle(const Variety& var, const Rational& k);

  const Variety& variety() const { return var_; }
  const std::vector<Rational>& s() const { return s_; }
  const Rational& operator[](std::size_t i) const { return s_[i]; }
  const Rational& rank() const { return s_[0]; }
  std::size_t size() const { return s_.size(); }

  friend NumChern operator+(const NumChern& v, const NumChern& w);
  friend NumChern operator-(const NumChern& v, const NumChern& w);
  friend NumChern operator*(const Rational& k, const NumChern& v);
  friend bool operator==(const NumChern&, const NumChern&) = default;

 private:
  Variety var_;
  std::vector<Rational> s_;
};

/// Element of ℚ ∪ {+∞}; slopes take the infinite value on zero denominators.
class Slope {
 public:
  Slope(Rational value) : value_(std::move(value)) {}  // NOLINT(google-explicit-constructor)
  static Slope infinity() { return Slope(); }

  bool is_infinite() const { return !value_.has_value(); }
  const Rational& value() const;
  std::string str() const { return is_infinite() ? "+inf" : value_->str(); }

  friend bool operator==(const Slope&, const Slope&) = default;

 private:
  Slope() = default;
  std::optional<Rational> value_;
};

/// (r, a, b) = (ch₀, H·ch₁/d, ch₂) of a character on a surface S²_d.
struct SurfaceTriple {
  Rational r;
  Rational a;
  Rational b;

  friend bool operator==(const SurfaceTriple&, const SurfaceTriple&) = default;
};

/// ch^β = e^{−βH}·ch, truncated at the variety's dimension.
NumChern twist_beta(const NumChern& v, const Rational& beta);

Slope slope_mu(const NumChern& v);
Slope slope_nu(const NumChern& v, const Rational& beta, const Rational& alpha);

/// Δ̄_H = s₁² − 2·Hⁿ·s₀·s₂.
Rational delta_bar(const NumChern& v);
/// Δ = ch₁² − 2·ch₀·ch₂ on a surface lattice.
Rational delta_surface(const SurfaceLattice& lattice, const LatticeChern& v);

/// s₁ − β·Hⁿ·s₀ ≥ 0. Necessary for membership in the tilted heart Coh^β, not
/// sufficient: the actual test needs Harder–Narasimhan data.
bool heart_numeric_check(const NumChern& v, const Rational& beta);

SurfaceTriple to_surface_triple(const NumChern& v);

/// Standard integrality on ℙ³: s₀, s₁ ∈ ℤ, s₂ ∈ ½ℤ, s₃ ∈ ⅙ℤ.
bool is_integral_p3(const NumChern& v);

}  // namespace tiltbg
