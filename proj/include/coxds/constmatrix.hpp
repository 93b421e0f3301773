#pragma once

#include "coxds/laurent.hpp"

namespace coxds {

// Monic-or-not dense polynomial over Q, coefficients in ascending order.
struct Poly {
  std::vector<Rational> c;  // c[k] is the x^k coefficient

  Poly() = default;
  explicit Poly(std::vector<Rational> cs) : c(std::move(cs)) { trim(); }

  void trim();
  int degree() const { return static_cast<int>(c.size()) - 1; }
  bool is_zero() const { return c.empty(); }
  Rational coeff(int k) const {
    return (k >= 0 && k < static_cast<int>(c.size())) ? c[k] : Rational(0);
  }
  Rational eval(const Rational& x) const;
  bool operator==(const Poly& o) const { return c == o.c; }

  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
};

// z-free square matrix over Q.
class ConstMatrix {
 public:
  ConstMatrix() = default;
  explicit ConstMatrix(int rank) : n_(rank), a_(rank * rank) {
    if (rank < 1) throw std::invalid_argument("matrix rank must be positive");
  }

  static ConstMatrix identity(int rank);
  static ConstMatrix diagonal(const Diagonal& d);

  int rank_size() const { return n_; }
  Rational& at(int i, int j) { return a_[(i - 1) * n_ + (j - 1)]; }
  const Rational& at(int i, int j) const { return a_[(i - 1) * n_ + (j - 1)]; }

  bool is_zero() const;
  Rational trace() const;
  Diagonal diagonal_part() const;

  ConstMatrix& operator+=(const ConstMatrix& o);
  ConstMatrix& operator-=(const ConstMatrix& o);
  friend ConstMatrix operator+(ConstMatrix a, const ConstMatrix& b) { return a += b; }
  friend ConstMatrix operator-(ConstMatrix a, const ConstMatrix& b) { return a -= b; }
  friend ConstMatrix operator*(const ConstMatrix& a, const ConstMatrix& b);
  ConstMatrix scaled(const Rational& c) const;

  LaurentMatrix laurent(long power = 0) const;  // embed as z^power * this

  bool operator==(const ConstMatrix& o) const { return n_ == o.n_ && a_ == o.a_; }

 private:
  int n_ = 0;
  std::vector<Rational> a_;
};

// Exact rank via rational Gaussian elimination.
int rank(const ConstMatrix& y);

// Monic characteristic polynomial, Faddeev-LeVerrier.
Poly char_poly(const ConstMatrix& y);

// Throws if the matrix has any z-dependence.
ConstMatrix constant_part(const LaurentMatrix& x);

// Exact inverse; throws on singular input.
ConstMatrix inverse(const ConstMatrix& y);

}  // namespace coxds
