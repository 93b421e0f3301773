#pragma once

#include <gmpxx.h>
#include <stdexcept>
#include <string>
#include <vector>

namespace coxds {

// Exact rational scalar.  mpq_class keeps gcd(|num|,den)=1 and den>0, which
// is exactly the canonical form we need; all arithmetic stays exact.
using Rational = mpq_class;

inline Rational rat(long num, long den = 1) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

// Serialized form is "p/q", or just "p" when q=1.
std::string rat_str(const Rational& q);
Rational rat_parse(const std::string& s);

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

using Diagonal = std::vector<Rational>;

inline Rational diag_sum(const Diagonal& d) {
  Rational s = 0;
  for (const auto& x : d) s += x;
  return s;
}

}  // namespace coxds
