#include "test_support.hpp"
#include "tiltbg/chern.hpp"
#include "tiltbg/geometry.hpp"
#include "tiltbg/lattice.hpp"

using namespace tiltbg;
using testing::R;

namespace {

// χ(𝒪_S) for S ⊂ ℙ³ of degree d from 0 → 𝒪(−d) → 𝒪 → 𝒪_S → 0.
Rational chi_structure_sheaf(long d) { return Rational(1) - Rational((3 - d) * (2 - d) * (1 - d), 6); }

// Solves ch(ι_*E)·td_ℙ³ = ι_*(ch(E)·td_S) degree by degree.
NumChern grr_oracle(long d, const Rational& r, const Rational& a, const Rational& b) {
  const Rational td1 = Rational(2) - Rational(d, 2);  // −K_S/2 = (2 − d/2)H_S
  const Rational y1 = r * d;
  const Rational y2 = (a + r * td1) * d;  // ι_*(c·H_S) = c·d·H² (H_S² = d)
  const Rational y3 = b + a * td1 * d + r * chi_structure_sheaf(d);
  const Rational x1 = y1;
  const Rational x2 = y2 - Rational(2) * x1;
  const Rational x3 = y3 - Rational(2) * x2 - R("11/6") * x1;
  return NumChern(Variety::p3(), {0, x1, x2, x3});
}

LatticeChern random_chern(testing::Rng& rng, std::size_t rank) {
  LatticeChern v{rng.rational(), {}, rng.rational()};
  for (std::size_t i = 0; i < rank; ++i) v.c1.push_back(rng.rational());
  return v;
}

}  // namespace

TEST_SUITE("geometry") {

TEST_CASE("Todd classes") {
  const auto td4 = todd_hypersurface(4);
  CHECK(td4 == std::array<Rational, 3>{1, 0, 2});
  CHECK(todd_hypersurface(2) == std::array<Rational, 3>{1, 1, 1});
  for (int d : {1, 2, 3}) CHECK(todd_hypersurface(d)[2] == 1);
  CHECK(todd_hypersurface(5)[2] == 5);
  for (int d = 1; d <= 12; ++d) {
    CHECK(todd_hypersurface(d)[1] == Rational(2) - Rational(d, 2));
    CHECK(todd_hypersurface(d)[2] == chi_structure_sheaf(d));
  }
  CHECK(todd_p3() == std::array<Rational, 4>{1, 2, R("11/6"), 1});
  CHECK_ERROR_CODE(todd_hypersurface(0), ErrorCode::InvalidDegree);
}

TEST_CASE("GRR pushforward examples") {
  for (int d = 1; d <= 6; ++d) {
    const NumChern ideal_oracle = NumChern::line_bundle(Variety::p3(), 0) - NumChern::line_bundle(Variety::p3(), -d);
    CHECK(grr_pushforward(d, 1, 0, 0) == ideal_oracle);
    CHECK(grr_pushforward(d, 1, 0, 0) ==
          NumChern(Variety::p3(), {0, d, -Rational(d * d, 2), Rational(d * d * d, 6)}));
  }
  CHECK(grr_pushforward(4, 2, 1, 0) == NumChern(Variety::p3(), {0, 8, -12, R("40/3")}));
  CHECK_ERROR_CODE(grr_pushforward(0, 1, 0, 0), ErrorCode::InvalidDegree);
}

TEST_CASE("GRR pushforward agrees with the Todd-class oracle") {
  testing::Rng rng(11);
  for (int i = 0; i < 100; ++i) {
    const long d = rng.integer(1, 9);
    const Rational r = rng.rational();
    const Rational a = rng.rational();
    const Rational b = rng.rational();
    CHECK(grr_pushforward(static_cast<int>(d), r, a, b) == grr_oracle(d, r, a, b));
  }
}

TEST_CASE("built-in lattices") {
  const auto q = SurfaceLattice::quadric();
  CHECK(q.rank() == 2);
  CHECK(q.gram() == std::vector<RationalVector>{{0, 1}, {1, 0}});
  CHECK(q.canonical() == RationalVector{-2, -2});
  CHECK(q.todd2() == 1);
  CHECK(q.h_squared() == 2);
  const auto s4 = SurfaceLattice::hypersurface(4);
  CHECK(s4.gram() == std::vector<RationalVector>{{4}});
  CHECK(s4.canonical() == RationalVector{0});
  CHECK(s4.todd2() == 2);
  CHECK_THROWS_AS(SurfaceLattice({"a", "b"}, {{0, 1}, {2, 0}}, {0, 0}, 1, {1, 1}), Error);
  CHECK_ERROR_CODE(SurfaceLattice({"a"}, {{1}}, {0, 0}, 1, {1}), ErrorCode::RankMismatch);
}

TEST_CASE("Euler pairing examples") {
  const auto q = SurfaceLattice::quadric();
  const LatticeChern o = line_bundle(q, {0, 0});
  CHECK(euler_pairing(q, line_bundle(q, {1, 0}), o) == 0);
  CHECK(euler_pairing(q, o, o) == 1);
  const auto s4 = SurfaceLattice::hypersurface(4);
  const LatticeChern v{2, {1}, -1};
  CHECK(euler_pairing(s4, v, v) == 0);
  CHECK_ERROR_CODE(euler_pairing(q, LatticeChern{1, {0}, 0}, o), ErrorCode::RankMismatch);
}

TEST_CASE("Euler pairing matches line-bundle cohomology on the quadric") {
  // χ(𝒪(a, b)) = (a + 1)(b + 1) on ℙ¹×ℙ¹, and χ(𝒪(D), 𝒪(D')) = χ(𝒪(D' − D)).
  const auto q = SurfaceLattice::quadric();
  for (long a1 = -2; a1 <= 2; ++a1) {
    for (long b1 = -2; b1 <= 2; ++b1) {
      for (long a2 = -2; a2 <= 2; ++a2) {
        for (long b2 = -2; b2 <= 2; ++b2) {
          const Rational expected = Rational((a2 - a1 + 1) * (b2 - b1 + 1));
          CHECK(euler_pairing(q, line_bundle(q, {a1, b1}), line_bundle(q, {a2, b2})) == expected);
        }
      }
    }
  }
}

TEST_CASE("Euler pairing is biadditive") {
  testing::Rng rng(12);
  for (const auto& lattice : {SurfaceLattice::quadric(), SurfaceLattice::hypersurface(3)}) {
    for (int i = 0; i < 100; ++i) {
      const auto u = random_chern(rng, lattice.rank());
      const auto v = random_chern(rng, lattice.rank());
      const auto w = random_chern(rng, lattice.rank());
      const Rational k = rng.rational();
      CHECK(euler_pairing(lattice, u + v, w) == euler_pairing(lattice, u, w) + euler_pairing(lattice, v, w));
      CHECK(euler_pairing(lattice, u, v + w) == euler_pairing(lattice, u, v) + euler_pairing(lattice, u, w));
      CHECK(euler_pairing(lattice, k * u, w) == k * euler_pairing(lattice, u, w));
    }
  }
}

TEST_CASE("dual twist") {
  const auto q = SurfaceLattice::quadric();
  CHECK(dual_twist(q, LatticeChern{1, {0, 0}, 0}) == LatticeChern{1, {1, 1}, 1});
  const auto s4 = SurfaceLattice::hypersurface(4);
  CHECK(dual_twist(s4, LatticeChern{1, {0}, 0}) == LatticeChern{1, {1}, 2});
  CHECK(dual_twist(s4, LatticeChern{2, {1}, 0}) == LatticeChern{2, {1}, 0});
  CHECK_ERROR_CODE(dual_twist(s4, LatticeChern{1, {0, 0}, 0}), ErrorCode::RankMismatch);

  testing::Rng rng(13);
  for (const auto& lattice : {q, s4, SurfaceLattice::hypersurface(5)}) {
    for (int i = 0; i < 100; ++i) {
      const auto v = random_chern(rng, lattice.rank());
      CHECK(dual_twist(lattice, dual_twist(lattice, v)) == v);
      if (v.r.is_zero()) continue;
      const Slope mu = slope_mu(to_num_chern(lattice, v));
      const Slope mu_dual = slope_mu(to_num_chern(lattice, dual_twist(lattice, v)));
      CHECK(mu_dual.value() == Rational(1) - mu.value());
    }
  }
}

TEST_CASE("lattice characters map to surface intersection numbers") {
  const auto q = SurfaceLattice::quadric();
  const NumChern v = to_num_chern(q, LatticeChern{2, {1, 0}, R("-1/2")});
  CHECK(v.variety() == Variety::hypersurface(2, 2));
  CHECK(v.s() == std::vector<Rational>{2, 1, R("-1/2")});
}

}  // TEST_SUITE
