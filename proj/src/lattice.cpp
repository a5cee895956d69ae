#include "tiltbg/lattice.hpp"

#include "tiltbg/error.hpp"

namespace tiltbg {

namespace {

void require_size(const RationalVector& v, std::size_t n, const char* what) {
  if (v.size() != n) {
    throw Error(ErrorCode::RankMismatch, std::string(what) + " has length " + std::to_string(v.size()) +
                                             ", lattice rank is " + std::to_string(n));
  }
}

}  // namespace

SurfaceLattice::SurfaceLattice(std::vector<std::string> basis, std::vector<RationalVector> gram,
                               RationalVector canonical, Rational todd2, RationalVector polarization)
    : basis_(std::move(basis)),
      gram_(std::move(gram)),
      canonical_(std::move(canonical)),
      todd2_(std::move(todd2)),
      polarization_(std::move(polarization)) {
  const std::size_t n = basis_.size();
  if (n == 0) throw Error(ErrorCode::DomainError, "lattice must have a non-empty basis");
  if (gram_.size() != n) throw Error(ErrorCode::RankMismatch, "gram matrix row count differs from basis size");
  for (std::size_t i = 0; i < n; ++i) {
    require_size(gram_[i], n, "gram row");
    for (std::size_t j = 0; j < n; ++j) {
      if (!gram_[i][j].is_integer()) throw Error(ErrorCode::DomainError, "gram entries must be integers");
      if (gram_[i][j] != gram_[j][i]) throw Error(ErrorCode::DomainError, "gram matrix must be symmetric");
    }
  }
  require_size(canonical_, n, "canonical class");
  for (const auto& k : canonical_) {
    if (!k.is_integer()) throw Error(ErrorCode::DomainError, "canonical class must be integral");
  }
  require_size(polarization_, n, "polarization");
}

SurfaceLattice SurfaceLattice::quadric() {
  return SurfaceLattice({"h1", "h2"}, {{0, 1}, {1, 0}}, {-2, -2}, 1, {1, 1});
}

SurfaceLattice SurfaceLattice::hypersurface(int d) {
  if (d < 1) throw Error(ErrorCode::InvalidDegree, "surface degree must be at least 1");
  const Rational dd(d);
  const Rational chi = dd * dd * dd / 6 - dd * dd + Rational(11) * dd / 6;
  return SurfaceLattice({"H"}, {{dd}}, {dd - 4}, chi, {1});
}

Rational SurfaceLattice::dot(const RationalVector& u, const RationalVector& v) const {
  require_size(u, rank(), "class");
  require_size(v, rank(), "class");
  Rational out;
  for (std::size_t i = 0; i < rank(); ++i) {
    if (u[i].is_zero()) continue;
    for (std::size_t j = 0; j < rank(); ++j) out += u[i] * gram_[i][j] * v[j];
  }
  return out;
}

RationalVector SurfaceLattice::todd1() const {
  RationalVector out;
  out.reserve(rank());
  for (const auto& k : canonical_) out.push_back(-k / 2);
  return out;
}

LatticeChern operator+(const LatticeChern& v, const LatticeChern& w) {
  if (v.c1.size() != w.c1.size()) throw Error(ErrorCode::RankMismatch, "characters live on different lattices");
  LatticeChern out{v.r + w.r, v.c1, v.ch2 + w.ch2};
  for (std::size_t i = 0; i < out.c1.size(); ++i) out.c1[i] += w.c1[i];
  return out;
}

LatticeChern operator-(const LatticeChern& v, const LatticeChern& w) { return v + Rational(-1) * w; }

LatticeChern operator*(const Rational& k, const LatticeChern& v) {
  LatticeChern out{k * v.r, v.c1, k * v.ch2};
  for (auto& c : out.c1) c *= k;
  return out;
}

LatticeChern line_bundle(const SurfaceLattice& lattice, const RationalVector& divisor) {
  return {1, divisor, lattice.dot(divisor, divisor) / 2};
}

}  // namespace tiltbg
