#include "coxds/partition.hpp"

#include <algorithm>
#include <stdexcept>

namespace coxds {

Partition::Partition(std::vector<int> p) : parts(std::move(p)) {
  for (size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] < 1) throw std::invalid_argument("partition parts must be >= 1");
    if (i > 0 && parts[i] > parts[i - 1])
      throw std::invalid_argument("partition must be nonincreasing");
  }
}

int Partition::sum() const {
  int s = 0;
  for (int p : parts) s += p;
  return s;
}

Partition Partition::conjugate() const {
  Partition out;
  if (parts.empty()) return out;
  for (int j = 1; j <= parts[0]; ++j) {
    int cnt = 0;
    for (int p : parts)
      if (p >= j) ++cnt;
    out.parts.push_back(cnt);
  }
  return out;
}

namespace {

// One direction of (dom): lambda >= mu?
bool dominates(const Partition& la, const Partition& mu) {
  if (la.count() > mu.count()) return false;
  int sa = 0, sb = 0;
  for (int j = 0; j < la.count(); ++j) {
    sa += la.parts[j];
    sb += j < mu.count() ? mu.parts[j] : 0;
    if (sa < sb) return false;
  }
  return true;
}

}  // namespace

Cmp dominance_compare(const Partition& lambda, const Partition& mu) {
  if (lambda.sum() != mu.sum())
    throw std::invalid_argument("dominance_compare: partitions of different integers");
  bool ge = dominates(lambda, mu);
  bool le = dominates(mu, lambda);
  if (ge && le) return Cmp::Equal;
  if (ge) return Cmp::Greater;
  if (le) return Cmp::Less;
  return Cmp::Incomparable;
}

Partition lambda_rn(int r, int n) {
  if (r < 1 || n < 1) throw std::invalid_argument("lambda_rn: r, n must be positive");
  int k = n / r, rp = n % r;
  Partition out;
  for (int i = 0; i < rp; ++i) out.parts.push_back(k + 1);
  if (k > 0)
    for (int i = 0; i < r - rp; ++i) out.parts.push_back(k);
  return out;
}

namespace {

void gen(int remaining, int max_part, int parts_left, std::vector<int>& cur,
         std::vector<Partition>& out) {
  if (remaining == 0) {
    Partition p;
    p.parts = cur;
    out.push_back(std::move(p));
    return;
  }
  if (parts_left == 0) return;
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    cur.push_back(p);
    gen(remaining - p, p, parts_left - 1, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_of(int n, int max_parts) {
  if (n < 0) throw std::invalid_argument("partitions_of: n must be >= 0");
  std::vector<Partition> out;
  std::vector<int> cur;
  gen(n, n, max_parts < 0 ? n : max_parts, cur, out);
  return out;
}

}  // namespace coxds
