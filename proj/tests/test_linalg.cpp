#include "doctest.h"
#include "oracles.hpp"
#include "qmut/linalg.hpp"

using namespace qmut;

TEST_CASE("ranks of small quivers") {
  const auto path = Quiver::from_arrows(3, {{0, 1, 1}, {1, 2, 1}});
  const auto tri = Quiver::from_arrows(3, {{0, 1, 1}, {1, 2, 1}, {2, 0, 1}});
  CHECK(rank_z(path) == 2);
  CHECK(corank_z(tri) == 1);
  CHECK(radical_basis_z(path).vectors == std::vector<IntVector>{IntVector{1, 0, 1}});
  CHECK(radical_basis_z(tri).vectors == std::vector<IntVector>{IntVector{1, 1, 1}});
  CHECK(rank_gf2(Quiver::from_arrows(2, {{0, 1, 2}})) == 0);
}

TEST_CASE("Bareiss rank on rectangular matrices") {
  CHECK(bareiss_rank(2, 3, {1, 2, 3, 2, 4, 6}) == 1);
  CHECK(bareiss_rank(3, 2, {0, 1, 1, 0, 1, 1}) == 2);
  CHECK(bareiss_rank(2, 2, {0, 0, 0, 0}) == 0);
  CHECK_THROWS_AS(bareiss_rank(2, 2, {1, 2, 3}), Error);
}

TEST_CASE("integer ranks and radical bases agree with rational elimination") {
  oracle::RandomQuivers gen(21);
  for (int trial = 0; trial < 400; ++trial) {
    const auto q = gen.next(1 + trial % 9, 5, 0.4);
    const auto b = oracle::matrix_of(q);
    const auto r = oracle::rank(b);
    CHECK(rank_z(q) == r);
    const auto basis = radical_basis_z(q);
    CHECK(basis.corank == q.size() - r);
    REQUIRE(basis.vectors.size() == basis.corank);
    for (const auto& u : basis.vectors) {
      CHECK(oracle::is_zero(oracle::times(b, u.coords())));
      Int g = 0;
      for (const auto& x : u) g = gcd(g, x);
      CHECK(g == 1);
      const auto lead = std::find_if(u.begin(), u.end(), [](const Int& x) { return x != 0; });
      REQUIRE(lead != u.end());
      CHECK(*lead > 0);
    }
    // Independence: stacking the basis gives full row rank.
    oracle::Matrix stacked;
    for (const auto& u : basis.vectors) stacked.push_back(u.coords());
    if (!stacked.empty()) CHECK(oracle::rank(stacked) == basis.corank);
  }
}

TEST_CASE("GF(2) kernels match exhaustive enumeration") {
  oracle::RandomQuivers gen(3);
  for (int trial = 0; trial < 300; ++trial) {
    const auto q = gen.next(1 + trial % 10, 3, 0.5);
    const auto brute = oracle::gf2_kernel(oracle::matrix_of(q));
    const auto k = radical_basis_gf2(q);
    CHECK(brute.size() == (std::size_t{1} << k.corank2));
    CHECK(rank_gf2(q) == q.size() - k.corank2);
    CHECK(gf2_span_dim(k.vectors) == k.corank2);
    const auto m = reduce_mod2(q);
    for (const auto& v : k.vectors) CHECK_FALSE(m.multiply(v).any());
    for (auto s : brute) {
      GF2Vector v(q.size());
      for (std::size_t i = 0; i < q.size(); ++i) v.set(i, (s >> i) & 1U);
      CHECK(gf2_member(v, k.vectors));
    }
  }
}

TEST_CASE("span membership") {
  const std::vector<GF2Vector> vs{GF2Vector::from_bits({1, 1, 0}), GF2Vector::from_bits({0, 1, 1})};
  CHECK(gf2_member(GF2Vector::from_bits({1, 0, 1}), vs));
  CHECK_FALSE(gf2_member(GF2Vector::from_bits({1, 0, 0}), vs));
  CHECK(gf2_member(GF2Vector(3), {}));
  CHECK(gf2_span_dim({}) == 0);
  const std::vector<GF2Vector> mixed{GF2Vector(2), GF2Vector(3)};
  CHECK_THROWS_AS(gf2_span_dim(mixed), Error);
}
