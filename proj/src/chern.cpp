#include "tiltbg/chern.hpp"

#include "tiltbg/error.hpp"

namespace tiltbg {

namespace {

Rational factorial(unsigned k) {
  Rational out(1);
  for (unsigned i = 2; i <= k; ++i) out *= Rational(static_cast<long>(i));
  return out;
}

void require_same_variety(const NumChern& v, const NumChern& w) {
  if (!(v.variety() == w.variety())) {
    throw Error(ErrorCode::WrongVariety, "characters on " + v.variety().name() + " and " + w.variety().name());
  }
}

}  // namespace

NumChern::NumChern(Variety var, std::vector<Rational> s) : var_(var), s_(std::move(s)) {
  if (s_.size() != static_cast<std::size_t>(var_.dim() + 1)) {
    throw Error(ErrorCode::WrongDimension, "character on " + var_.name() + " needs " +
                                               std::to_string(var_.dim() + 1) + " entries, got " +
                                               std::to_string(s_.size()));
  }
}

NumChern NumChern::line_bundle(const Variety& var, const Rational& k) {
  std::vector<Rational> s{1};
  for (int i = 1; i <= var.dim(); ++i) s.push_back(Rational(var.hdeg()) * k.pow(i) / factorial(i));
  return NumChern(var, std::move(s));
}

NumChern operator+(const NumChern& v, const NumChern& w) {
  require_same_variety(v, w);
  auto s = v.s_;
  for (std::size_t i = 0; i < s.size(); ++i) s[i] += w.s_[i];
  return NumChern(v.var_, std::move(s));
}

NumChern operator-(const NumChern& v, const NumChern& w) { return v + Rational(-1) * w; }

NumChern operator*(const Rational& k, const NumChern& v) {
  auto s = v.s_;
  for (auto& x : s) x *= k;
  return NumChern(v.var_, std::move(s));
}

const Rational& Slope::value() const {
  if (!value_) throw Error(ErrorCode::DomainError, "slope is +infinity");
  return *value_;
}

NumChern twist_beta(const NumChern& v, const Rational& beta) {
  // H^{n−i}·(e^{−βH}ch)_i = Σ_{j≤i} (−β)^{i−j}/(i−j)! · H^{n−j}·ch_j, where the
  // j = 0 term pairs Hⁿ with ch₀ and therefore picks up the factor e.
  // s₀ is ch₀ itself and never moves.
  const Rational e(v.variety().hdeg());
  const Rational minus_beta = -beta;
  std::vector<Rational> out(v.size());
  out[0] = v[0];
  for (std::size_t i = 1; i < v.size(); ++i) {
    Rational acc;
    for (std::size_t j = 0; j <= i; ++j) {
      const unsigned k = static_cast<unsigned>(i - j);
      const Rational sj = j == 0 ? e * v[0] : v[j];
      acc += minus_beta.pow(k) / factorial(k) * sj;
    }
    out[i] = acc;
  }
  return NumChern(v.variety(), std::move(out));
}

Slope slope_mu(const NumChern& v) {
  if (v.rank().is_zero()) return Slope::infinity();
  return v[1] / (Rational(v.variety().hdeg()) * v[0]);
}

Slope slope_nu(const NumChern& v, const Rational& beta, const Rational& alpha) {
  const Rational e(v.variety().hdeg());
  const Rational den = v[1] - beta * e * v[0];
  if (den.is_zero()) return Slope::infinity();
  return (v[2] - alpha * e * v[0]) / den;
}

Rational delta_bar(const NumChern& v) {
  return v[1] * v[1] - Rational(2) * Rational(v.variety().hdeg()) * v[0] * v[2];
}

Rational delta_surface(const SurfaceLattice& lattice, const LatticeChern& v) {
  return lattice.dot(v.c1, v.c1) - Rational(2) * v.r * v.ch2;
}

bool heart_numeric_check(const NumChern& v, const Rational& beta) {
  return (v[1] - beta * Rational(v.variety().hdeg()) * v[0]).sign() >= 0;
}

SurfaceTriple to_surface_triple(const NumChern& v) {
  if (v.variety().dim() != 2) {
    throw Error(ErrorCode::WrongDimension, "surface triple needs a surface, got " + v.variety().name());
  }
  return {v[0], v[1] / Rational(v.variety().hdeg()), v[2]};
}

bool is_integral_p3(const NumChern& v) {
  if (!v.variety().is_p3()) throw Error(ErrorCode::WrongVariety, "integrality lattice is only known on P3");
  return v[0].is_integer() && v[1].is_integer() && (Rational(2) * v[2]).is_integer() &&
         (Rational(6) * v[3]).is_integer();
}

}  // namespace tiltbg
