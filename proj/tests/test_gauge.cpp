#include <random>

#include "coxds/gauge.hpp"
#include "doctest.h"

using namespace coxds;

namespace {

Diagonal random_diag(std::mt19937_64& rng, int n, int span = 4) {
  Diagonal d(n);
  for (auto& v : d) v = rat(static_cast<int>(rng() % (2 * span + 1)) - span);
  return d;
}

// Random element of I^1 as a product of elementary factors 1 + delta omega^d.
GaugeElement random_gauge(std::mt19937_64& rng, int n, long trunc) {
  GaugeElement g = GaugeElement::identity(n, trunc);
  int factors = 1 + static_cast<int>(rng() % 3);
  for (int f = 0; f < factors; ++f) {
    GradedComponent c;
    c.degree = 1 + static_cast<long>(rng() % 3);
    c.delta = random_diag(rng, n, 2);
    LaurentMatrix fm = LaurentMatrix::identity(n) + embed(c, n);
    g.g = truncate_above(fm * g.g, trunc);
  }
  return g;
}

}  // namespace

TEST_CASE("formal type validation and matrix") {
  CoxeterFormalType ft{4, 3, {rat(1, 2), rat(0), rat(-1), rat(2)}};
  ft.validate();
  LaurentMatrix expect = LaurentMatrix::identity(4).scaled(rat(1, 2));
  expect += omega_power(4, -2).scaled(rat(-1));
  expect += omega_power(4, -3).scaled(rat(2));
  CHECK(ft.matrix() == expect);
  CHECK(ft.leading() == 2);
  CHECK(ft.p0() == rat(1, 2));
  CHECK(iwahori_degree(ft.matrix()) == -3);

  CHECK_THROWS_AS((CoxeterFormalType{4, 2, {rat(0), rat(0), rat(1)}}.validate()),
                  std::invalid_argument);  // gcd(2,4) != 1
  CHECK_THROWS_AS((CoxeterFormalType{4, 3, {rat(0), rat(1)}}.validate()),
                  std::invalid_argument);  // wrong length
  CHECK_THROWS_AS((CoxeterFormalType{4, 3, {rat(1), rat(0), rat(0), rat(0)}}.validate()),
                  std::invalid_argument);  // p_r = 0
}

TEST_CASE("normal_form_index") {
  CHECK(normal_form_index(0, 3) == 3);
  CHECK(normal_form_index(1, 3) == 1);
  CHECK(normal_form_index(2, 3) == 2);
  CHECK(normal_form_index(3, 3) == 3);
  CHECK(normal_form_index(4, 3) == 1);
  CHECK(normal_form_index(0, 5) == 5);
  CHECK(normal_form_index(7, 5) == 2);
}

TEST_CASE("solve_phi solves phi and is normalized") {
  std::mt19937_64 rng(17);
  for (auto [r, n] : std::vector<std::pair<int, int>>{{1, 2}, {2, 3}, {3, 4}, {5, 3}}) {
    for (int trial = 0; trial < 8; ++trial) {
      Diagonal target = random_diag(rng, n);
      target[n - 1] -= diag_sum(target);  // force sum zero
      Rational a = rat(static_cast<int>(rng() % 5) + 1, 3);
      Diagonal gamma = solve_phi(r, 0, target, a, n);
      CHECK(gamma[0] == 0);

      // phi(a gamma) = a gamma - omega^{-r} (a gamma) omega^{r} == target
      LaurentMatrix ag = ConstMatrix::diagonal(gamma).laurent().scaled(a);
      LaurentMatrix phi = ag - omega_power(n, -r) * ag * omega_power(n, r);
      CHECK(phi == ConstMatrix::diagonal(target).laurent());
    }
  }

  CHECK_THROWS_AS(solve_phi(2, 0, {rat(1), rat(-1)}, rat(1), 2), std::invalid_argument);
  CHECK_THROWS_AS(solve_phi(1, 0, {rat(1), rat(1)}, rat(1), 2), std::invalid_argument);
  CHECK_THROWS_AS(solve_phi(1, 0, {rat(1), rat(-1)}, rat(0), 2), std::invalid_argument);
}

TEST_CASE("matrix_inverse") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 12; ++trial) {
    int n = 2 + static_cast<int>(rng() % 3);
    long trunc = 3 + static_cast<long>(rng() % 4);
    GaugeElement g = random_gauge(rng, n, trunc);
    LaurentMatrix inv = matrix_inverse(g.g, trunc);
    CHECK(truncate_above(g.g * inv, trunc) == LaurentMatrix::identity(n));
    CHECK(truncate_above(inv * g.g, trunc) == LaurentMatrix::identity(n));
  }
  CHECK_THROWS_AS(matrix_inverse(LaurentMatrix::identity(2).scaled(rat(2)), 4),
                  std::invalid_argument);
  CHECK_THROWS_AS(matrix_inverse(LaurentMatrix::identity(2), 0), std::invalid_argument);
}

TEST_CASE("apply_gauge") {
  CoxeterFormalType ft{3, 2, {rat(1), rat(-2), rat(1, 3)}};
  LaurentMatrix x = ft.matrix();

  GaugeElement id = GaugeElement::identity(3, 3);
  CHECK(apply_gauge(id, x, GaugeMode::Adjoint) == truncate_above(x, 3));
  CHECK(apply_gauge(id, x, GaugeMode::Connection) == truncate_above(x, 3));

  // Adjoint action preserves the residue of the trace.
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 8; ++trial) {
    GaugeElement g = random_gauge(rng, 3, 4);
    LaurentMatrix gx = apply_gauge(g, x, GaugeMode::Adjoint);
    CHECK(gx.trace().coeff(0) == x.trace().coeff(0));
  }

  // Connection action shifts by -z g' g^{-1}; for g = 1 + z e_{31} (Iwahori
  // degree 1) the truncated difference is z e_{31} g^{-1}.
  LaurentMatrix e = LaurentMatrix::unit(3, 3, 1, rat(1), 1);
  GaugeElement g{LaurentMatrix::identity(3) + e, 4, {}};
  LaurentMatrix diff = apply_gauge(g, x, GaugeMode::Adjoint) -
                       apply_gauge(g, x, GaugeMode::Connection);
  LaurentMatrix expect =
      truncate_above(e.z_ddz() * matrix_inverse(g.g, 10), 4);
  CHECK_FALSE(diff.is_zero());
  CHECK(diff == expect);
}

TEST_CASE("normalize_functional on a formal type") {
  // a = p_r always; c_0 = n p_0 (trace) and c_{r-1} = n p_{r-1} (read off
  // before any correction can land at degree -(r-1)).
  for (auto [n, r] : std::vector<std::pair<int, int>>{{2, 3}, {3, 2}, {4, 3}, {5, 2}}) {
    CoxeterFormalType ft{n, r, {}};
    ft.coeffs.assign(r + 1, rat(0));
    for (int i = 0; i <= r; ++i) ft.coeffs[i] = rat(i + 1, 2);
    LaurentMatrix x = ft.matrix();

    auto [nf, g] = normalize_functional(x, r, n);
    CHECK(nf.a == ft.leading());
    CHECK(nf.c[0] == Rational(n * ft.coeffs[0]));
    CHECK(nf.c[r - 1] == Rational(n * ft.coeffs[r - 1]));

    // The gauge really moves x onto the normal form in degrees <= 0.
    LaurentMatrix gx = apply_gauge(g, x, GaugeMode::Adjoint);
    CHECK(truncate_nonpositive(gx) == truncate_nonpositive(nf.matrix(n, r)));
    CHECK(static_cast<int>(g.factors.size()) == r);
  }

  // With all middle coefficients zero, the steps above s = 0 are trivial and
  // c_s = n p_s holds on the nose.
  for (auto [n, r] : std::vector<std::pair<int, int>>{{2, 3}, {4, 3}, {3, 5}}) {
    CoxeterFormalType ft{n, r, {}};
    ft.coeffs.assign(r + 1, rat(0));
    ft.coeffs[0] = rat(5, 3);
    ft.coeffs[r] = rat(-2);
    NormalForm nf = canonical_invariants(ft.matrix(), r, n);
    CHECK(nf.a == rat(-2));
    CHECK(nf.c[0] == Rational(n) * rat(5, 3));
    for (int s = 1; s < r; ++s) CHECK(nf.c[s] == 0);
  }
}

TEST_CASE("canonical invariants are gauge invariant") {
  std::mt19937_64 rng(41);
  CoxeterFormalType ft{4, 3, {rat(-1, 2), rat(2), rat(0), rat(5, 3)}};
  LaurentMatrix x = ft.matrix();
  NormalForm base = canonical_invariants(x, 3, 4);
  for (int trial = 0; trial < 10; ++trial) {
    GaugeElement g = random_gauge(rng, 4, 4);
    CHECK(canonical_invariants(apply_gauge(g, x, GaugeMode::Adjoint), 3, 4) == base);
  }

  // Normal forms round-trip through their matrix realization.
  NormalForm nf{rat(3, 2), {rat(-1), rat(2), rat(0)}};
  CHECK(canonical_invariants(nf.matrix(4, 3), 3, 4) == nf);
}

TEST_CASE("normalize_functional validation") {
  CHECK_THROWS_AS(normalize_functional(omega_power(4, -2), 2, 4), std::invalid_argument);
  CHECK_THROWS_AS(normalize_functional(omega_power(3, -4), 2, 3), std::invalid_argument);
  // Non-scalar leading coefficient.
  GradedComponent c;
  c.degree = -2;
  c.delta = {rat(1), rat(2), rat(1)};
  CHECK_THROWS_AS(normalize_functional(embed(c, 3), 2, 3), std::invalid_argument);
}

TEST_CASE("adjust_residue") {
  for (auto [n, r] : std::vector<std::pair<int, int>>{{3, 2}, {4, 3}, {3, 4}, {2, 5}}) {
    CoxeterFormalType ft{n, r, {}};
    ft.coeffs.assign(r + 1, rat(0));
    ft.coeffs[0] = rat(3, 2);
    ft.coeffs[r] = rat(1);
    LaurentMatrix x = ft.matrix();

    Diagonal d(n, rat(0));
    d[0] = rat(1);
    d[n - 1] = x.trace().coeff(0) - rat(1);
    GaugeElement h = adjust_residue(x, r, n, d);

    ConstMatrix res = residue_form(truncate_nonpositive(apply_gauge(h, x, GaugeMode::Adjoint)));
    ConstMatrix expect = ConstMatrix::diagonal(d);
    if (r < n) expect += subdiag_N(r, n).scaled(ft.leading());
    CHECK(res == expect);
  }

  CoxeterFormalType ft{3, 2, {rat(1), rat(0), rat(1)}};
  CHECK_THROWS_AS(adjust_residue(ft.matrix(), 2, 3, {rat(0), rat(0), rat(0)}),
                  std::invalid_argument);  // trace mismatch: sum(d) != 3
}
