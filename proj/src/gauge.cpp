#include "coxds/gauge.hpp"

#include <numeric>

namespace coxds {

namespace {

inline long posmod(long a, long b) {
  long r = a % b;
  return r < 0 ? r + b : r;
}

LaurentMatrix factor_matrix(const GaugeFactor& f, int r, int n) {
  LaurentMatrix m = LaurentMatrix::identity(n);
  LaurentMatrix w = omega_power(n, r - f.s);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      m.at(i, j) += w.at(i, j).scaled(f.gamma[i - 1]);
  return m;
}

}  // namespace

void CoxeterFormalType::validate() const {
  if (n < 1 || r < 1) throw std::invalid_argument("formal type: n, r must be positive");
  if (std::gcd(r, n) != 1)
    throw std::invalid_argument("formal type: gcd(r,n) must be 1");
  if (coeffs.size() != static_cast<size_t>(r) + 1)
    throw std::invalid_argument("formal type: need exactly r+1 coefficients p_0..p_r");
  if (coeffs.back() == 0)
    throw std::invalid_argument("formal type: leading coefficient p_r must be nonzero");
}

LaurentMatrix CoxeterFormalType::matrix() const {
  validate();
  LaurentMatrix m(n);
  for (int i = 0; i <= r; ++i) {
    if (coeffs[i] == 0) continue;
    m += omega_power(n, -i).scaled(coeffs[i]);
  }
  return m;
}

int normal_form_index(int i, int n) {
  if (i <= 0) return n;
  return static_cast<int>(posmod(i - 1, n)) + 1;
}

LaurentMatrix NormalForm::matrix(int n, int r) const {
  LaurentMatrix m = omega_power(n, -r).scaled(a);
  for (int s = 0; s < r; ++s) {
    if (c[s] == 0) continue;
    GradedComponent comp;
    comp.degree = -s;
    comp.delta.assign(n, Rational(0));
    comp.delta[normal_form_index(s, n) - 1] = c[s];
    m += embed(comp, n);
  }
  return m;
}

GaugeElement GaugeElement::identity(int n, long trunc) {
  return {LaurentMatrix::identity(n), trunc, {}};
}

LaurentMatrix matrix_inverse(const LaurentMatrix& a, long trunc) {
  if (trunc < 1) throw std::invalid_argument("matrix_inverse: truncation window must be >= 1");
  LaurentMatrix y = a - LaurentMatrix::identity(a.n);
  auto deg = iwahori_degree(y);
  if (deg && *deg < 1)
    throw std::invalid_argument("matrix_inverse: input is not unipotent");

  LaurentMatrix sum = LaurentMatrix::identity(a.n);
  LaurentMatrix term = LaurentMatrix::identity(a.n);
  while (true) {
    term = truncate_above(term * y, trunc).scaled(-1);
    if (term.is_zero()) break;
    sum += term;
  }
  return sum;
}

LaurentMatrix apply_gauge(const GaugeElement& g, const LaurentMatrix& x,
                          GaugeMode mode) {
  if (g.g.n != x.n) throw std::invalid_argument("gauge rank mismatch");
  long dmin = std::min<long>(0, iwahori_degree(x).value_or(0));
  long window = g.trunc - dmin;
  if (window < 1) window = 1;
  LaurentMatrix ginv = matrix_inverse(g.g, window);
  LaurentMatrix out = truncate_above(g.g * x * ginv, g.trunc);
  if (mode == GaugeMode::Connection)
    out -= truncate_above(g.g.z_ddz() * ginv, g.trunc);
  return out;
}

Diagonal solve_phi(int r, int s, const Diagonal& target, const Rational& a,
                   int n) {
  (void)s;  // phi_{r,s}(gamma) = gamma - omega^{-r} gamma omega^{r} for every s
  if (static_cast<int>(target.size()) != n)
    throw std::invalid_argument("solve_phi: target has wrong length");
  if (std::gcd(r, n) != 1)
    throw std::invalid_argument("solve_phi: gcd(r,n) must be 1");
  if (a == 0) throw std::invalid_argument("solve_phi: a must be nonzero");
  if (diag_sum(target) != 0)
    throw std::invalid_argument("solve_phi: target must have entry-sum zero");

  // Conjugation by omega^{-r} permutes diagonal entries along the n-cycle
  // sigma(j) = ((j-1-r) mod n) + 1, so a(gamma_j - gamma_{sigma(j)}) = t_j
  // propagates from the normalization gamma_1 = 0.
  Diagonal gamma(n, Rational(0));
  int j = 1;
  for (int step = 0; step < n - 1; ++step) {
    int next = static_cast<int>(posmod(j - 1 - r, n)) + 1;
    gamma[next - 1] = gamma[j - 1] - target[j - 1] / a;
    j = next;
  }
  return gamma;
}

std::pair<NormalForm, GaugeElement> normalize_functional(const LaurentMatrix& x,
                                                         int r, int n,
                                                         long trunc) {
  if (x.n != n) throw std::invalid_argument("normalize_functional: rank mismatch");
  if (r < 1 || std::gcd(r, n) != 1)
    throw std::invalid_argument("normalize_functional: gcd(r,n) must be 1");
  if (trunc == 0) trunc = r + 1;

  auto deg = iwahori_degree(x);
  if (!deg || *deg < -r)
    throw std::invalid_argument("normalize_functional: depth exceeds r");
  GradedComponent lead = graded_project(x, -r);
  Rational a = lead.delta[0];
  for (const auto& v : lead.delta)
    if (v != a)
      throw std::invalid_argument(
          "normalize_functional: leading term is not scalar * omega^{-r}");
  if (a == 0)
    throw std::invalid_argument("normalize_functional: leading coefficient is zero");

  LaurentMatrix cur = truncate_above(x, trunc);
  GaugeElement g = GaugeElement::identity(n, trunc);
  NormalForm nf;
  nf.a = a;
  nf.c.assign(r, Rational(0));

  for (int s = r - 1; s >= 0; --s) {
    int u = normal_form_index(s, n);
    Diagonal beta = graded_project(cur, -s).delta;
    Rational cs = diag_sum(beta);
    nf.c[s] = cs;

    // Target correction in t cap sl_n pushing beta onto cs * e(u).
    Diagonal target(n);
    for (int i = 1; i <= n; ++i)
      target[i - 1] = (i == u) ? Rational(cs - beta[i - 1]) : Rational(-beta[i - 1]);

    GaugeFactor f{s, solve_phi(r, s, target, a, n)};
    bool trivial = true;
    for (const auto& v : f.gamma)
      if (v != 0) trivial = false;
    if (!trivial) {
      LaurentMatrix fm = factor_matrix(f, r, n);
      GaugeElement step{fm, trunc, {}};
      cur = apply_gauge(step, cur, GaugeMode::Adjoint);
      g.g = truncate_above(fm * g.g, trunc);
    }
    g.factors.push_back(std::move(f));
  }
  return {std::move(nf), std::move(g)};
}

NormalForm canonical_invariants(const LaurentMatrix& x, int r, int n,
                                long trunc) {
  return normalize_functional(x, r, n, trunc).first;
}

GaugeElement adjust_residue(const LaurentMatrix& x, int r, int n,
                            const Diagonal& d, long trunc) {
  if (static_cast<int>(d.size()) != n)
    throw std::invalid_argument("adjust_residue: diagonal has wrong length");
  auto [nf, g] = normalize_functional(x, r, n, trunc);

  // Corollary hypothesis: the target diagonal carries the full residue trace.
  Rational res_tr = x.trace().coeff(0);
  if (diag_sum(d) != res_tr)
    throw std::invalid_argument("adjust_residue: Tr(D) != Res(Tr(X dz/z))");

  // Current residue diagonal is c_0 e_{nn}; move it to d with one more
  // degree-r factor.
  Diagonal target(n);
  for (int i = 1; i <= n; ++i)
    target[i - 1] = d[i - 1] - (i == n ? nf.c[0] : Rational(0));
  GaugeFactor f{0, solve_phi(r, 0, target, nf.a, n)};
  LaurentMatrix fm = factor_matrix(f, r, n);
  g.g = truncate_above(fm * g.g, g.trunc);
  g.factors.push_back(std::move(f));
  return g;
}

}  // namespace coxds
