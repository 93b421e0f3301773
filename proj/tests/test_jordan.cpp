#include <random>

#include "coxds/jordan.hpp"
#include "doctest.h"

using namespace coxds;

namespace {

// Block-diagonal matrix with one Jordan block per (eigenvalue, part).
ConstMatrix jordan_matrix(const OrbitType& o) {
  ConstMatrix m(o.rank());
  int pos = 1;
  for (const auto& b : o.blocks)
    for (long part : b.partition.parts) {
      for (long k = 0; k < part; ++k) {
        m.at(pos + k, pos + k) = b.eigenvalue;
        if (k + 1 < part) m.at(pos + k, pos + k + 1) = 1;
      }
      pos += static_cast<int>(part);
    }
  return m;
}

ConstMatrix conjugate_random(const ConstMatrix& y, std::mt19937_64& rng) {
  int n = y.rank_size();
  while (true) {
    ConstMatrix p(n);
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j)
        p.at(i, j) = rat(static_cast<int>(rng() % 7) - 3);
    if (rank(p) < n) continue;
    return p * y * inverse(p);
  }
}

}  // namespace

TEST_CASE("rational_roots") {
  // (x-2)^2 (x+1/3) = x^3 - 11/3 x^2 + 8/3 x + 4/3
  Poly p({rat(4, 3), rat(8, 3), rat(-11, 3), rat(1)});
  auto roots = rational_roots(p);
  REQUIRE(roots.size() == 2);
  CHECK(roots[0] == std::pair<Rational, int>{rat(-1, 3), 1});
  CHECK(roots[1] == std::pair<Rational, int>{rat(2), 2});

  // x^2 + 1 has no rational roots.
  CHECK(rational_roots(Poly({rat(1), rat(0), rat(1)})).empty());

  // x^2 - 2: irrational.
  CHECK(rational_roots(Poly({rat(-2), rat(0), rat(1)})).empty());

  // x^3 - x^2 - 2x = x(x-2)(x+1)
  auto r3 = rational_roots(Poly({rat(0), rat(-2), rat(-1), rat(1)}));
  REQUIRE(r3.size() == 3);
  CHECK(r3[0].first == rat(-1));
  CHECK(r3[1].first == rat(0));
  CHECK(r3[2].first == rat(2));
}

TEST_CASE("jordan_type examples") {
  // Single nilpotent block N_1 on 3x3: type (3) at eigenvalue 0.
  ConstMatrix n3(3);
  n3.at(1, 2) = 1;
  n3.at(2, 3) = 1;
  OrbitType t = jordan_type(n3);
  REQUIRE(t.blocks.size() == 1);
  CHECK(t.blocks[0].eigenvalue == 0);
  CHECK(t.blocks[0].partition.parts == std::vector<int>{3});

  // Zero matrix: type (1,1,1).
  CHECK(jordan_type(ConstMatrix(3)).blocks[0].partition.parts ==
        std::vector<int>{1, 1, 1});

  // diag(5,5,7): two eigenvalues.
  OrbitType d = jordan_type(ConstMatrix::diagonal({rat(5), rat(5), rat(7)}));
  REQUIRE(d.blocks.size() == 2);
  CHECK(d.blocks[0] == OrbitBlock{rat(5), Partition({1, 1})});
  CHECK(d.blocks[1] == OrbitBlock{rat(7), Partition({1})});

  // Rotation matrix [[0,-1],[1,0]]: does not split over Q.
  ConstMatrix rot(2);
  rot.at(1, 2) = -1;
  rot.at(2, 1) = 1;
  CHECK_THROWS(jordan_type(rot));
  // ... but passing an incomplete eigenvalue list also throws.
  CHECK_THROWS(jordan_type(ConstMatrix::identity(2), std::vector<Rational>{rat(0)}));
}

TEST_CASE("jordan_type is a conjugation invariant") {
  std::mt19937_64 rng(57);
  std::vector<OrbitType> types = {
      OrbitType({{rat(0), Partition({2, 1})}}),
      OrbitType({{rat(0), Partition({3, 1})}, {rat(1, 2), Partition({2})}}),
      OrbitType({{rat(-2), Partition({2, 2})}, {rat(3), Partition({1})}}),
      OrbitType({{rat(1), Partition({4})}}),
  };
  for (const auto& t : types) {
    ConstMatrix y = jordan_matrix(t);
    CHECK(jordan_type(y) == t);
    CHECK(in_orbit(y, t));
    for (int trial = 0; trial < 3; ++trial) {
      ConstMatrix c = conjugate_random(y, rng);
      CHECK(jordan_type(c) == t);
      CHECK(in_orbit(c, t));
    }
  }
}

TEST_CASE("jordan_type agrees with char_poly") {
  std::mt19937_64 rng(61);
  for (int trial = 0; trial < 20; ++trial) {
    // Random upper triangular with small integer diagonal: splits over Q.
    int n = 2 + static_cast<int>(rng() % 4);
    ConstMatrix y(n);
    for (int i = 1; i <= n; ++i)
      for (int j = i; j <= n; ++j)
        y.at(i, j) = rat(static_cast<int>(rng() % 5) - 2);
    OrbitType t = jordan_type(y);
    CHECK(t.rank() == n);

    Poly expect({rat(1)});
    for (const auto& b : t.blocks)
      for (long k = 0; k < b.partition.sum(); ++k)
        expect = expect * Poly({-b.eigenvalue, rat(1)});
    CHECK(char_poly(y) == expect);
  }
}

TEST_CASE("in_orbit rejects") {
  ConstMatrix y = jordan_matrix(OrbitType({{rat(0), Partition({2, 1})}}));
  CHECK_FALSE(in_orbit(y, OrbitType({{rat(0), Partition({3})}})));
  CHECK_FALSE(in_orbit(y, OrbitType({{rat(0), Partition({1, 1, 1})}})));
  CHECK_FALSE(in_orbit(y, OrbitType({{rat(1), Partition({2, 1})}})));
  // Non-split matrices are never in a rational orbit.
  ConstMatrix rot(2);
  rot.at(1, 2) = -1;
  rot.at(2, 1) = 1;
  CHECK_FALSE(in_orbit(rot, OrbitType({{rat(0), Partition({1, 1})}})));
}
