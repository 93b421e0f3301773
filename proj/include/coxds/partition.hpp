#pragma once

#include <vector>

#include "coxds/rational.hpp"

namespace coxds {

enum class Cmp { Equal, Greater, Less, Incomparable };

// Nonincreasing sequence of positive integers.
struct Partition {
  std::vector<int> parts;

  Partition() = default;
  explicit Partition(std::vector<int> p);

  int sum() const;
  int count() const { return static_cast<int>(parts.size()); }
  Partition conjugate() const;

  bool operator==(const Partition& o) const { return parts == o.parts; }
  bool operator<(const Partition& o) const { return parts < o.parts; }
};

// Dominance order on Part(n): lambda >= mu iff |lambda| <= |mu| and every
// prefix sum of lambda dominates the corresponding prefix sum of mu.
// Throws if the two partitions have different sums.
Cmp dominance_compare(const Partition& lambda, const Partition& mu);

// The unique dominance-minimum among partitions of n with at most r parts:
// with n = kr + r', the multiset {(k+1)^{r'}, k^{r-r'}}.
Partition lambda_rn(int r, int n);

// All partitions of n, optionally restricted to at most max_parts parts.
std::vector<Partition> partitions_of(int n, int max_parts = -1);

}  // namespace coxds
