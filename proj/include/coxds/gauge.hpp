#pragma once

#include "coxds/iwahori.hpp"

namespace coxds {

// The data (n, r, p_0..p_r) of a maximally ramified formal type
// A = p(omega^{-1}) dz/z of slope r/n, with gcd(r,n)=1 and p_r != 0.
struct CoxeterFormalType {
  int n = 0;
  int r = 0;
  std::vector<Rational> coeffs;  // p_0, ..., p_r

  void validate() const;
  LaurentMatrix matrix() const;  // p(omega^{-1})
  Rational leading() const { return coeffs.back(); }
  Rational p0() const { return coeffs.front(); }
};

// Index rule for the normal-form basis element e(i): e(i) = e_{uu} with
// u = ((i-1) mod n) + 1 for i >= 1, and e(0) = e_{nn}.
int normal_form_index(int i, int n);

// Canonical invariants (a, c_{r-1},...,c_0) of a coadjoint I^1-orbit: the
// orbit representative is (a omega^{-r} + sum_s c_s e(s) omega^{-s}) dz/z.
struct NormalForm {
  Rational a;
  std::vector<Rational> c;  // c[s] = c_s, s = 0..r-1

  LaurentMatrix matrix(int n, int r) const;

  bool operator==(const NormalForm& o) const { return a == o.a && c == o.c; }
};

struct GaugeFactor {
  int s = 0;
  Diagonal gamma;  // factor 1 + diag(gamma) * omega^{r-s}
};

// Element of I^1 (g - 1 of strictly positive Iwahori degree), carried modulo
// degree >= trunc, together with the elementary factors it was built from.
struct GaugeElement {
  LaurentMatrix g;
  long trunc = 0;
  std::vector<GaugeFactor> factors;

  static GaugeElement identity(int n, long trunc);
};

// Neumann-series inverse of a unipotent matrix 1 + Y, Y of positive Iwahori
// degree, correct modulo degree >= trunc.  Throws on non-unipotent input.
LaurentMatrix matrix_inverse(const LaurentMatrix& a, long trunc);

enum class GaugeMode { Adjoint, Connection };

// Adjoint: g X g^{-1}.  Connection: g X g^{-1} - z g' g^{-1} (the dz/z
// convention makes the inhomogeneous term z dg/dz g^{-1}).  Both are
// truncated at the gauge element's window.
LaurentMatrix apply_gauge(const GaugeElement& g, const LaurentMatrix& x,
                          GaugeMode mode);

// Solves phi_{r,s}(a gamma) = target, where phi_{r,s}(gamma) =
// gamma - omega^{-r} gamma omega^{r} on diagonals.  The kernel is the
// scalars; the returned section has gamma_1 = 0.  Requires sum(target) = 0.
Diagonal solve_phi(int r, int s, const Diagonal& target, const Rational& a,
                   int n);

// Iterative coadjoint normalization: given X = a omega^{-r} + (degree >=
// -r+1) with scalar leading coefficient a != 0, produces g in I^1 (a product
// of factors 1 + gamma_s omega^{r-s}, s = r-1..0) such that Ad(g) X agrees
// with the normal form in all Iwahori degrees <= 0.  trunc = 0 selects the
// default window r+1.
std::pair<NormalForm, GaugeElement> normalize_functional(const LaurentMatrix& x,
                                                         int r, int n,
                                                         long trunc = 0);

NormalForm canonical_invariants(const LaurentMatrix& x, int r, int n,
                                long trunc = 0);

// Produces h in I^1 with residue_form of the nonpositive truncation of
// Ad(h) X equal to a N_r + diag(d) (r < n) resp. diag(d) (r > n).
// Requires sum(d) = Res(Tr(X dz/z)).
GaugeElement adjust_residue(const LaurentMatrix& x, int r, int n,
                            const Diagonal& d, long trunc = 0);

}  // namespace coxds
