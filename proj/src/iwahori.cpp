#include "coxds/iwahori.hpp"

#include <numeric>

namespace coxds {

namespace {

inline long floordiv(long a, long b) {
  long q = a / b, r = a % b;
  return (r != 0 && ((r < 0) != (b < 0))) ? q - 1 : q;
}

inline long posmod(long a, long b) { return a - b * floordiv(a, b); }

}  // namespace

LaurentMatrix omega(int b) {
  if (b < 1) throw std::invalid_argument("omega: b must be positive");
  LaurentMatrix m(b);
  if (b == 1) {
    m.at(1, 1) = LaurentPoly(Rational(1), 1);
    return m;
  }
  for (int i = 1; i < b; ++i) m.at(i, i + 1) = LaurentPoly(Rational(1));
  m.at(b, 1) = LaurentPoly(Rational(1), 1);
  return m;
}

LaurentMatrix omega_power(int n, long p) {
  LaurentMatrix m(n);
  for (int i = 1; i <= n; ++i) {
    int j = static_cast<int>(posmod(i - 1 + p, n)) + 1;
    long k = (p - (j - i)) / n;
    m.at(i, j) = LaurentPoly(Rational(1), k);
  }
  return m;
}

std::optional<long> iwahori_degree(const LaurentMatrix& x) {
  std::optional<long> deg;
  for (int i = 1; i <= x.n; ++i)
    for (int j = 1; j <= x.n; ++j)
      for (const auto& [k, c] : x.at(i, j).coeffs) {
        long d = unit_degree(x.n, k, i, j);
        if (!deg || d < *deg) deg = d;
      }
  return deg;
}

GradedComponent graded_project(const LaurentMatrix& x, long d) {
  GradedComponent out;
  out.degree = d;
  out.delta.assign(x.n, Rational(0));
  for (int i = 1; i <= x.n; ++i) {
    int j = static_cast<int>(posmod(i - 1 + d, x.n)) + 1;
    long k = (d - (j - i)) / x.n;
    out.delta[i - 1] = x.at(i, j).coeff(k);
  }
  return out;
}

LaurentMatrix embed(const GradedComponent& comp, int n) {
  LaurentMatrix m(n);
  for (int i = 1; i <= n; ++i) {
    if (comp.delta[i - 1] == 0) continue;
    int j = static_cast<int>(posmod(i - 1 + comp.degree, n)) + 1;
    long k = (comp.degree - (j - i)) / n;
    m.at(i, j) = LaurentPoly(comp.delta[i - 1], k);
  }
  return m;
}

LaurentMatrix truncate_above(const LaurentMatrix& x, long cutoff) {
  LaurentMatrix out(x.n);
  for (int i = 1; i <= x.n; ++i)
    for (int j = 1; j <= x.n; ++j)
      for (const auto& [k, c] : x.at(i, j).coeffs)
        if (unit_degree(x.n, k, i, j) < cutoff) out.at(i, j).set(k, c);
  return out;
}

ConstMatrix subdiag_N(int r, int n) {
  if (r < 1 || r > n) throw std::invalid_argument("subdiag_N: need 0 < r <= n");
  ConstMatrix m(n);
  for (int i = r + 1; i <= n; ++i) m.at(i, i - r) = 1;
  return m;
}

ConstMatrix superdiag_E(int u, int n) {
  if (u < 1 || u > n) throw std::invalid_argument("superdiag_E: need 0 < u <= n");
  ConstMatrix m(n);
  for (int i = 1; i <= u; ++i) m.at(i, i + n - u) = 1;
  return m;
}

LeadingCheck coxeter_leading_check(const LaurentMatrix& x, int r) {
  if (std::gcd(r, x.n) != 1)
    throw std::invalid_argument("coxeter_leading_check: gcd(r,n) must be 1");
  auto deg = iwahori_degree(x);
  if (!deg || *deg != -r) return {LeadingKind::WrongDepth, 0};
  GradedComponent lead = graded_project(x, -r);
  Rational a = 1;
  for (const auto& v : lead.delta) a *= v;
  if (a == 0) return {LeadingKind::NilpotentLeading, 0};
  return {LeadingKind::RegularSemisimple, a};
}

}  // namespace coxds
