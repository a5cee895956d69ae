#include "tiltbg/geometry.hpp"

#include "tiltbg/error.hpp"

namespace tiltbg {

std::array<Rational, 3> todd_hypersurface(int d) {
  if (d < 1) throw Error(ErrorCode::InvalidDegree, "degree must be at least 1, got " + std::to_string(d));
  const Rational dd(d);
  return {1, Rational(2) - dd / 2, dd * dd * dd / 6 - dd * dd + Rational(11) * dd / 6};
}

std::array<Rational, 4> todd_p3() { return {1, 2, Rational(11, 6), 1}; }

NumChern grr_pushforward(int d, const Rational& r, const Rational& a, const Rational& b) {
  if (d < 1) throw Error(ErrorCode::InvalidDegree, "degree must be at least 1, got " + std::to_string(d));
  const Rational dd(d);
  return NumChern(Variety::p3(), {0, dd * r, (a - dd * r / 2) * dd, b - dd * dd * a / 2 + dd * dd * dd * r / 6});
}

Rational euler_pairing(const SurfaceLattice& lattice, const LatticeChern& v, const LatticeChern& w) {
  if (v.c1.size() != lattice.rank() || w.c1.size() != lattice.rank()) {
    throw Error(ErrorCode::RankMismatch, "character does not match the lattice rank");
  }
  // ch(v)^∨·ch(w) = (r_v r_w, r_v c_w − r_w c_v, r_v ch2_w + r_w ch2_v − c_v·c_w),
  // then take the degree-2 part of the product with (1, td₁, todd2).
  RationalVector mixed(lattice.rank());
  for (std::size_t i = 0; i < lattice.rank(); ++i) mixed[i] = v.r * w.c1[i] - w.r * v.c1[i];
  return v.r * w.r * lattice.todd2() + lattice.dot(mixed, lattice.todd1()) + v.r * w.ch2 + w.r * v.ch2 -
         lattice.dot(v.c1, w.c1);
}

LatticeChern dual_twist(const SurfaceLattice& lattice, const LatticeChern& v) {
  if (v.c1.size() != lattice.rank()) throw Error(ErrorCode::RankMismatch, "character does not match the lattice rank");
  const auto& h = lattice.polarization();
  RationalVector c1(lattice.rank());
  for (std::size_t i = 0; i < c1.size(); ++i) c1[i] = v.r * h[i] - v.c1[i];
  return {v.r, std::move(c1), v.ch2 - lattice.dot(v.c1, h) + v.r * lattice.h_squared() / 2};
}

NumChern to_num_chern(const SurfaceLattice& lattice, const LatticeChern& v) {
  const Rational h2 = lattice.h_squared();
  if (!h2.is_integer() || h2.sign() <= 0) throw Error(ErrorCode::DomainError, "polarization must have H^2 >= 1");
  const int e = static_cast<int>(h2.numerator().get_si());
  return NumChern(Variety::hypersurface(2, e), {v.r, lattice.dot(lattice.polarization(), v.c1), v.ch2});
}

}  // namespace tiltbg
