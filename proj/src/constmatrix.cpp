#include "coxds/constmatrix.hpp"

namespace coxds {

void Poly::trim() {
  while (!c.empty() && c.back() == 0) c.pop_back();
}

Rational Poly::eval(const Rational& x) const {
  Rational v = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) v = v * x + *it;
  return v;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly{};
  Poly out;
  out.c.assign(a.c.size() + b.c.size() - 1, Rational(0));
  for (size_t i = 0; i < a.c.size(); ++i)
    for (size_t j = 0; j < b.c.size(); ++j) out.c[i + j] += a.c[i] * b.c[j];
  out.trim();
  return out;
}

Poly operator-(const Poly& a, const Poly& b) {
  Poly out = a;
  if (out.c.size() < b.c.size()) out.c.resize(b.c.size(), Rational(0));
  for (size_t i = 0; i < b.c.size(); ++i) out.c[i] -= b.c[i];
  out.trim();
  return out;
}

ConstMatrix ConstMatrix::identity(int rank) {
  ConstMatrix m(rank);
  for (int i = 1; i <= rank; ++i) m.at(i, i) = 1;
  return m;
}

ConstMatrix ConstMatrix::diagonal(const Diagonal& d) {
  ConstMatrix m(static_cast<int>(d.size()));
  for (int i = 1; i <= m.n_; ++i) m.at(i, i) = d[i - 1];
  return m;
}

bool ConstMatrix::is_zero() const {
  for (const auto& x : a_)
    if (x != 0) return false;
  return true;
}

Rational ConstMatrix::trace() const {
  Rational t = 0;
  for (int i = 1; i <= n_; ++i) t += at(i, i);
  return t;
}

Diagonal ConstMatrix::diagonal_part() const {
  Diagonal d(n_);
  for (int i = 1; i <= n_; ++i) d[i - 1] = at(i, i);
  return d;
}

ConstMatrix& ConstMatrix::operator+=(const ConstMatrix& o) {
  if (n_ != o.n_) throw std::invalid_argument("matrix rank mismatch");
  for (size_t k = 0; k < a_.size(); ++k) a_[k] += o.a_[k];
  return *this;
}

ConstMatrix& ConstMatrix::operator-=(const ConstMatrix& o) {
  if (n_ != o.n_) throw std::invalid_argument("matrix rank mismatch");
  for (size_t k = 0; k < a_.size(); ++k) a_[k] -= o.a_[k];
  return *this;
}

ConstMatrix operator*(const ConstMatrix& a, const ConstMatrix& b) {
  if (a.n_ != b.n_) throw std::invalid_argument("matrix rank mismatch");
  ConstMatrix out(a.n_);
  for (int i = 1; i <= a.n_; ++i)
    for (int k = 1; k <= a.n_; ++k) {
      if (a.at(i, k) == 0) continue;
      for (int j = 1; j <= a.n_; ++j) out.at(i, j) += a.at(i, k) * b.at(k, j);
    }
  return out;
}

ConstMatrix ConstMatrix::scaled(const Rational& c) const {
  ConstMatrix out(n_);
  for (size_t k = 0; k < a_.size(); ++k) out.a_[k] = a_[k] * c;
  return out;
}

LaurentMatrix ConstMatrix::laurent(long power) const {
  LaurentMatrix out(n_);
  for (int i = 1; i <= n_; ++i)
    for (int j = 1; j <= n_; ++j) out.at(i, j) = LaurentPoly(at(i, j), power);
  return out;
}

int rank(const ConstMatrix& y) {
  const int n = y.rank_size();
  std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m[i][j] = y.at(i + 1, j + 1);

  int r = 0;
  for (int col = 0; col < n && r < n; ++col) {
    int pivot = -1;
    for (int row = r; row < n; ++row)
      if (m[row][col] != 0) {
        pivot = row;
        break;
      }
    if (pivot < 0) continue;
    std::swap(m[r], m[pivot]);
    for (int row = r + 1; row < n; ++row) {
      if (m[row][col] == 0) continue;
      Rational f = m[row][col] / m[r][col];
      for (int j = col; j < n; ++j) m[row][j] -= f * m[r][j];
    }
    ++r;
  }
  return r;
}

Poly char_poly(const ConstMatrix& y) {
  const int n = y.rank_size();
  // Faddeev-LeVerrier: M_1 = A, c_{n-k} = -tr(A M_k)/k, M_{k+1} = A M_k + c_{n-k} I.
  std::vector<Rational> c(n + 1);
  c[n] = 1;
  ConstMatrix m = ConstMatrix::identity(n);
  for (int k = 1; k <= n; ++k) {
    m = y * m;
    Rational ck = -m.trace() / k;
    c[n - k] = ck;
    for (int i = 1; i <= n; ++i) m.at(i, i) += ck;
  }
  return Poly(std::move(c));
}

ConstMatrix constant_part(const LaurentMatrix& x) {
  if (!x.is_constant())
    throw std::invalid_argument("matrix is not constant in z");
  return residue_form(x);
}

ConstMatrix inverse(const ConstMatrix& y) {
  const int n = y.rank_size();
  std::vector<std::vector<Rational>> m(n, std::vector<Rational>(2 * n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) m[i][j] = y.at(i + 1, j + 1);
    m[i][n + i] = 1;
  }
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int row = col; row < n; ++row)
      if (m[row][col] != 0) {
        pivot = row;
        break;
      }
    if (pivot < 0) throw std::invalid_argument("singular matrix");
    std::swap(m[col], m[pivot]);
    Rational inv = 1 / m[col][col];
    for (int j = 0; j < 2 * n; ++j) m[col][j] *= inv;
    for (int row = 0; row < n; ++row) {
      if (row == col || m[row][col] == 0) continue;
      Rational f = m[row][col];
      for (int j = 0; j < 2 * n; ++j) m[row][j] -= f * m[col][j];
    }
  }
  ConstMatrix out(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out.at(i + 1, j + 1) = m[i][n + j];
  return out;
}

}  // namespace coxds
