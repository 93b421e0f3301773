#pragma once

#include "coxds/constmatrix.hpp"

namespace coxds {

// Iwahori degree of the matrix unit z^k e_{ij} is n*k + (j - i); the degree
// of a sum is the minimum over its nonzero graded components.
inline long unit_degree(int n, long k, int i, int j) {
  return static_cast<long>(n) * k + (j - i);
}

// omega_b: superdiagonal 1's, z in the lower-left corner; omega_1 = [z].
// Satisfies omega^b = z I.
LaurentMatrix omega(int b);

// omega^p for any integer p, built directly from the monomial structure.
LaurentMatrix omega_power(int n, long p);

// Degree of X in the standard Iwahori filtration; nullopt for X = 0.
std::optional<long> iwahori_degree(const LaurentMatrix& x);

// Component of X in i(d) = t * omega^d, stored by its diagonal coordinate:
// the matrix is diag(delta) * omega^d.
struct GradedComponent {
  long degree = 0;
  Diagonal delta;

  bool is_zero() const {
    for (const auto& v : delta)
      if (v != 0) return false;
    return true;
  }
};

GradedComponent graded_project(const LaurentMatrix& x, long d);
LaurentMatrix embed(const GradedComponent& comp, int n);

// Drop every graded component of degree >= cutoff.
LaurentMatrix truncate_above(const LaurentMatrix& x, long cutoff);

// Keep only graded components of degree <= 0 (the representative of the
// functional X dz/z restricted to the Iwahori subalgebra).
inline LaurentMatrix truncate_nonpositive(const LaurentMatrix& x) {
  return truncate_above(x, 1);
}

// N_r: 1's on the rth subdiagonal (entries (i+r, i)); N_n = 0.
// E_u: 1's on the (n-u)th superdiagonal; E_n = I.
// They satisfy omega^{-s} = z^{-k} (N_u + z^{-1} E_u) for s = kn + u, 0 < u <= n.
ConstMatrix subdiag_N(int r, int n);
ConstMatrix superdiag_E(int u, int n);

enum class LeadingKind { RegularSemisimple, NilpotentLeading, WrongDepth };

struct LeadingCheck {
  LeadingKind kind;
  Rational a;  // product of the leading diagonal, when kind == RegularSemisimple
};

// Stratum check at depth r: the leading component delta * omega^{-r} is
// regular semisimple iff a = prod delta_i is nonzero (ch = x^n - a z^{-r}).
LeadingCheck coxeter_leading_check(const LaurentMatrix& x, int r);

}  // namespace coxds
