#include "coxds/laurent.hpp"

#include "coxds/constmatrix.hpp"

namespace coxds {

bool LaurentPoly::is_constant() const {
  return coeffs.empty() || (coeffs.size() == 1 && coeffs.begin()->first == 0);
}

Rational LaurentPoly::coeff(long power) const {
  auto it = coeffs.find(power);
  return it == coeffs.end() ? Rational(0) : it->second;
}

void LaurentPoly::set(long power, const Rational& c) {
  if (c == 0)
    coeffs.erase(power);
  else
    coeffs[power] = c;
}

void LaurentPoly::add(long power, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = coeffs.emplace(power, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) coeffs.erase(it);
  }
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  for (const auto& [p, c] : o.coeffs) add(p, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  for (const auto& [p, c] : o.coeffs) add(p, -c);
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly out;
  for (const auto& [pa, ca] : a.coeffs)
    for (const auto& [pb, cb] : b.coeffs) out.add(pa + pb, ca * cb);
  return out;
}

LaurentPoly LaurentPoly::scaled(const Rational& c) const {
  LaurentPoly out;
  if (c == 0) return out;
  for (const auto& [p, v] : coeffs) out.coeffs[p] = v * c;
  return out;
}

LaurentPoly LaurentPoly::shifted(long dpow) const {
  LaurentPoly out;
  for (const auto& [p, v] : coeffs) out.coeffs[p + dpow] = v;
  return out;
}

LaurentPoly LaurentPoly::z_ddz() const {
  LaurentPoly out;
  for (const auto& [p, v] : coeffs) out.add(p, v * Rational(p));
  return out;
}

LaurentMatrix LaurentMatrix::identity(int rank) {
  LaurentMatrix m(rank);
  for (int i = 1; i <= rank; ++i) m.at(i, i) = LaurentPoly(Rational(1));
  return m;
}

LaurentMatrix LaurentMatrix::unit(int rank, int i, int j, const Rational& c,
                                  long power) {
  LaurentMatrix m(rank);
  m.at(i, j) = LaurentPoly(c, power);
  return m;
}

bool LaurentMatrix::is_zero() const {
  for (const auto& e : entries)
    if (!e.is_zero()) return false;
  return true;
}

bool LaurentMatrix::is_constant() const {
  for (const auto& e : entries)
    if (!e.is_constant()) return false;
  return true;
}

LaurentMatrix& LaurentMatrix::operator+=(const LaurentMatrix& o) {
  if (n != o.n) throw std::invalid_argument("matrix rank mismatch");
  for (size_t k = 0; k < entries.size(); ++k) entries[k] += o.entries[k];
  return *this;
}

LaurentMatrix& LaurentMatrix::operator-=(const LaurentMatrix& o) {
  if (n != o.n) throw std::invalid_argument("matrix rank mismatch");
  for (size_t k = 0; k < entries.size(); ++k) entries[k] -= o.entries[k];
  return *this;
}

LaurentMatrix LaurentMatrix::scaled(const Rational& c) const {
  LaurentMatrix out(n);
  for (size_t k = 0; k < entries.size(); ++k) out.entries[k] = entries[k].scaled(c);
  return out;
}

LaurentMatrix LaurentMatrix::z_ddz() const {
  LaurentMatrix out(n);
  for (size_t k = 0; k < entries.size(); ++k) out.entries[k] = entries[k].z_ddz();
  return out;
}

LaurentPoly LaurentMatrix::trace() const {
  LaurentPoly t;
  for (int i = 1; i <= n; ++i) t += at(i, i);
  return t;
}

LaurentMatrix matrix_mul(const LaurentMatrix& a, const LaurentMatrix& b) {
  if (a.n != b.n) throw std::invalid_argument("matrix rank mismatch");
  LaurentMatrix out(a.n);
  for (int i = 1; i <= a.n; ++i)
    for (int k = 1; k <= a.n; ++k) {
      if (a.at(i, k).is_zero()) continue;
      for (int j = 1; j <= a.n; ++j) {
        if (b.at(k, j).is_zero()) continue;
        out.at(i, j) += a.at(i, k) * b.at(k, j);
      }
    }
  return out;
}

ConstMatrix residue_form(const LaurentMatrix& x) {
  ConstMatrix out(x.n);
  for (int i = 1; i <= x.n; ++i)
    for (int j = 1; j <= x.n; ++j) out.at(i, j) = x.at(i, j).coeff(0);
  return out;
}

}  // namespace coxds
