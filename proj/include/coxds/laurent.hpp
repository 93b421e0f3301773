#pragma once

#include <map>
#include <optional>

#include "coxds/rational.hpp"

namespace coxds {

// Laurent polynomial in z with exact rational coefficients and finite
// support.  Zero coefficients are never stored.
struct LaurentPoly {
  std::map<long, Rational> coeffs;  // exponent -> nonzero coefficient

  LaurentPoly() = default;
  explicit LaurentPoly(const Rational& c, long power = 0) {
    if (c != 0) coeffs[power] = c;
  }

  bool is_zero() const { return coeffs.empty(); }
  bool is_constant() const;
  Rational coeff(long power) const;

  void set(long power, const Rational& c);
  void add(long power, const Rational& c);

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  LaurentPoly scaled(const Rational& c) const;
  LaurentPoly shifted(long dpow) const;  // multiply by z^dpow
  LaurentPoly z_ddz() const;             // z d/dz

  bool operator==(const LaurentPoly& o) const { return coeffs == o.coeffs; }
};

class ConstMatrix;  // constmatrix.hpp

// Square matrix over Laurent polynomials, entries stored densely, 1-based
// accessors to match the e_{ij} conventions used throughout.
struct LaurentMatrix {
  int n = 0;
  std::vector<LaurentPoly> entries;  // row-major, n*n

  LaurentMatrix() = default;
  explicit LaurentMatrix(int rank) : n(rank), entries(rank * rank) {
    if (rank < 1) throw std::invalid_argument("matrix rank must be positive");
  }

  static LaurentMatrix identity(int rank);
  static LaurentMatrix unit(int rank, int i, int j, const Rational& c = 1,
                            long power = 0);  // c * z^power * e_{ij}

  LaurentPoly& at(int i, int j) { return entries[(i - 1) * n + (j - 1)]; }
  const LaurentPoly& at(int i, int j) const { return entries[(i - 1) * n + (j - 1)]; }

  bool is_zero() const;
  bool is_constant() const;

  LaurentMatrix& operator+=(const LaurentMatrix& o);
  LaurentMatrix& operator-=(const LaurentMatrix& o);
  friend LaurentMatrix operator+(LaurentMatrix a, const LaurentMatrix& b) { return a += b; }
  friend LaurentMatrix operator-(LaurentMatrix a, const LaurentMatrix& b) { return a -= b; }
  LaurentMatrix scaled(const Rational& c) const;
  LaurentMatrix z_ddz() const;

  LaurentPoly trace() const;
  bool operator==(const LaurentMatrix& o) const {
    return n == o.n && entries == o.entries;
  }
};

LaurentMatrix matrix_mul(const LaurentMatrix& a, const LaurentMatrix& b);
inline LaurentMatrix operator*(const LaurentMatrix& a, const LaurentMatrix& b) {
  return matrix_mul(a, b);
}

// Coefficient of z^0, entrywise: Res(X dz/z) under the paper's pairing.
ConstMatrix residue_form(const LaurentMatrix& x);

}  // namespace coxds
