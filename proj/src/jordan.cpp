#include "coxds/jordan.hpp"

#include <algorithm>
#include <stdexcept>

namespace coxds {

namespace {

std::vector<mpz_class> divisors(const mpz_class& m_in) {
  mpz_class m = abs(m_in);
  if (m > mpz_class("1000000000000"))
    throw std::runtime_error("rational root extraction: coefficient too large");
  std::vector<mpz_class> out;
  for (mpz_class i = 1; i * i <= m; ++i) {
    if (m % i == 0) {
      out.push_back(i);
      out.push_back(m / i);
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// Divides p by (x - root); the division must be exact.
Poly deflate(const Poly& p, const Rational& root) {
  int d = p.degree();
  std::vector<Rational> q(d);
  Rational carry = p.c[d];
  for (int k = d - 1; k >= 0; --k) {
    q[k] = carry;
    carry = p.c[k] + root * carry;
  }
  if (carry != 0) throw std::logic_error("deflate: not a root");
  return Poly(std::move(q));
}

}  // namespace

std::vector<std::pair<Rational, int>> rational_roots(const Poly& p) {
  if (p.is_zero()) throw std::invalid_argument("rational_roots: zero polynomial");
  std::map<Rational, int> found;
  Poly cur = p;
  while (cur.degree() >= 1) {
    if (cur.c[0] == 0) {
      ++found[Rational(0)];
      std::vector<Rational> shifted(cur.c.begin() + 1, cur.c.end());
      cur = Poly(std::move(shifted));
      continue;
    }
    // Clear denominators, then apply the rational root theorem.
    mpz_class den_lcm = 1;
    for (const auto& c : cur.c)
      mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
    std::vector<mpz_class> ic;
    for (const auto& c : cur.c)
      ic.push_back(c.get_num() * (den_lcm / c.get_den()));

    bool hit = false;
    for (const auto& num : divisors(ic.front())) {
      for (const auto& den : divisors(ic.back())) {
        for (int sign : {1, -1}) {
          Rational cand(sign * num, den);
          cand.canonicalize();
          if (cur.eval(cand) == 0) {
            ++found[cand];
            cur = deflate(cur, cand);
            hit = true;
            break;
          }
        }
        if (hit) break;
      }
      if (hit) break;
    }
    if (!hit) break;
  }
  return {found.begin(), found.end()};
}

namespace {

// Jordan partition of eigenvalue a from the rank sequence of (Y - aI)^k.
// Returns nullopt if a is not an eigenvalue.
std::optional<Partition> eigen_partition(const ConstMatrix& y, const Rational& a,
                                         int* algebraic_mult) {
  const int n = y.rank_size();
  ConstMatrix m = y - ConstMatrix::identity(n).scaled(a);
  std::vector<int> ranks{n};
  ConstMatrix pow = ConstMatrix::identity(n);
  while (true) {
    pow = pow * m;
    int r = rank(pow);
    ranks.push_back(r);
    if (r == ranks[ranks.size() - 2]) break;
  }
  *algebraic_mult = n - ranks.back();
  if (*algebraic_mult == 0) return std::nullopt;

  std::vector<int> conj;
  for (size_t k = 1; k < ranks.size(); ++k) {
    int d = ranks[k - 1] - ranks[k];
    if (d > 0) conj.push_back(d);
  }
  return Partition(std::move(conj)).conjugate();
}

}  // namespace

OrbitType jordan_type(const ConstMatrix& y,
                      const std::optional<std::vector<Rational>>& eigenvalues) {
  const int n = y.rank_size();
  std::vector<Rational> evs;
  if (eigenvalues) {
    evs = *eigenvalues;
    std::sort(evs.begin(), evs.end());
    evs.erase(std::unique(evs.begin(), evs.end()), evs.end());
  } else {
    for (const auto& [a, m] : rational_roots(char_poly(y))) evs.push_back(a);
  }

  std::vector<OrbitBlock> blocks;
  int total = 0;
  for (const auto& a : evs) {
    int mult = 0;
    auto part = eigen_partition(y, a, &mult);
    if (!part) continue;
    total += mult;
    blocks.push_back({a, std::move(*part)});
  }
  if (total != n)
    throw std::invalid_argument(
        eigenvalues ? "jordan_type: eigenvalue list does not cover all roots"
                    : "jordan_type: characteristic polynomial does not split over Q");
  return OrbitType(std::move(blocks));
}

bool in_orbit(const ConstMatrix& y, const OrbitType& o) {
  if (y.rank_size() != o.rank()) return false;
  Poly q{{Rational(1)}};
  for (const auto& [a, m] : o.char_data()) {
    Poly lin{{-a, Rational(1)}};
    for (int i = 0; i < m; ++i) q = q * lin;
  }
  if (!(char_poly(y) == q)) return false;
  return jordan_type(y, o.eigenvalues()) == o;
}

}  // namespace coxds
