#include <random>

#include "coxds/iwahori.hpp"
#include "doctest.h"

using namespace coxds;

TEST_CASE("omega matrices") {
  CHECK(omega(1) == ConstMatrix::identity(1).laurent(1));

  LaurentMatrix w = omega(3);
  CHECK(w.at(1, 2).coeff(0) == 1);
  CHECK(w.at(2, 3).coeff(0) == 1);
  CHECK(w.at(3, 1).coeff(1) == 1);
  CHECK(w.at(1, 1).is_zero());

  for (int n = 1; n <= 6; ++n) {
    LaurentMatrix p = LaurentMatrix::identity(n);
    for (int i = 0; i < n; ++i) p = p * omega(n);
    CHECK(p == ConstMatrix::identity(n).laurent(1));  // omega^n = z I
  }
}

TEST_CASE("omega_power agrees with repeated multiplication") {
  for (int n : {2, 3, 5})
    for (long p = -2 * n; p <= 2 * n; ++p) {
      LaurentMatrix expect = LaurentMatrix::identity(n);
      LaurentMatrix w = omega(n);
      LaurentMatrix winv = omega_power(n, -1);
      CHECK(truncate_above(w * winv, 100) == LaurentMatrix::identity(n));
      for (long i = 0; i < (p >= 0 ? p : -p); ++i) expect = expect * (p >= 0 ? w : winv);
      CHECK(omega_power(n, p) == expect);
    }
}

TEST_CASE("iwahori_degree examples") {
  CHECK(iwahori_degree(LaurentMatrix::unit(3, 1, 3, rat(1), -1)) == -1);
  CHECK(iwahori_degree(LaurentMatrix::unit(3, 3, 1, rat(1), 1)) == 1);
  for (int r = 1; r <= 7; ++r) CHECK(iwahori_degree(omega_power(3, -r)) == -r);
  CHECK_FALSE(iwahori_degree(LaurentMatrix(4)).has_value());
}

TEST_CASE("graded projection and decomposition") {
  for (int n : {2, 3, 4})
    for (int r = 1; r <= n + 2; ++r) {
      GradedComponent c = graded_project(omega_power(n, -r), -r);
      for (const auto& v : c.delta) CHECK(v == 1);
      CHECK(graded_project(omega_power(n, -r), -r + 1).is_zero());
      CHECK(embed(c, n) == omega_power(n, -r));
    }

  // a omega^{-r} + constant diagonal: degree-0 projection reads the diagonal
  LaurentMatrix x = omega_power(3, -2).scaled(rat(5));
  x += ConstMatrix::diagonal({rat(1), rat(2), rat(3)}).laurent();
  CHECK(graded_project(x, 0).delta == Diagonal{rat(1), rat(2), rat(3)});

  // sum of graded components reconstructs X
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 10; ++trial) {
    int n = 2 + static_cast<int>(rng() % 3);
    LaurentMatrix m(n);
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j)
        m.at(i, j).add(static_cast<long>(rng() % 5) - 2, rat(static_cast<int>(rng() % 9) - 4));
    LaurentMatrix sum(n);
    for (long d = -4 * n; d <= 4 * n; ++d) sum += embed(graded_project(m, d), n);
    CHECK(sum == m);
  }
}

TEST_CASE("degree of products") {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 30; ++trial) {
    int n = 2 + static_cast<int>(rng() % 3);
    LaurentMatrix a(n), b(n);
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j) {
        a.at(i, j).add(static_cast<long>(rng() % 4) - 2, rat(static_cast<int>(rng() % 7) - 3));
        b.at(i, j).add(static_cast<long>(rng() % 4) - 2, rat(static_cast<int>(rng() % 7) - 3));
      }
    auto da = iwahori_degree(a), db = iwahori_degree(b), dab = iwahori_degree(a * b);
    if (da && db && dab) CHECK(*dab >= *da + *db);

    // conjugation by omega powers preserves degree
    if (da) {
      long i = static_cast<long>(rng() % 7) - 3;
      CHECK(iwahori_degree(omega_power(n, i) * a * omega_power(n, -i)) == *da);
    }
  }

  // equality when leading components are invertible diagonals: omega^i i^j = i^{i+j}
  for (int i = -3; i <= 3; ++i)
    for (int j = -3; j <= 3; ++j)
      CHECK(iwahori_degree(omega_power(4, i) * omega_power(4, j)) == i + j);
}

TEST_CASE("N_u and E_u identities") {
  CHECK(subdiag_N(4, 4).is_zero());
  CHECK(superdiag_E(4, 4) == ConstMatrix::identity(4));

  for (int n : {2, 3, 4, 5})
    for (int s = 1; s <= 3 * n; ++s) {
      int u = (s - 1) % n + 1;
      long k = (s - u) / n;
      LaurentMatrix expect =
          subdiag_N(u, n).laurent(-k) + superdiag_E(u, n).laurent(-k - 1);
      CHECK(omega_power(n, -s) == expect);
    }
}

TEST_CASE("coxeter_leading_check") {
  for (int n : {2, 3, 5}) {
    CHECK(coxeter_leading_check(omega_power(n, -1), 1).kind ==
          LeadingKind::RegularSemisimple);
    CHECK(coxeter_leading_check(omega_power(n, -1), 1).a == 1);
  }

  // diag(1,0,...,0) * omega^{-r}: product of diagonal vanishes
  GradedComponent c;
  c.degree = -3;
  c.delta = {rat(1), rat(0), rat(0), rat(0), rat(0)};
  CHECK(coxeter_leading_check(embed(c, 5), 3).kind == LeadingKind::NilpotentLeading);

  CHECK(coxeter_leading_check(omega_power(5, -2), 3).kind == LeadingKind::WrongDepth);
  CHECK(coxeter_leading_check(LaurentMatrix(4), 3).kind == LeadingKind::WrongDepth);
  CHECK_THROWS_AS(coxeter_leading_check(omega_power(4, -2), 2), std::invalid_argument);
}
