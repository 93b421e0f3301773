#include "coxds/orbit.hpp"

#include <algorithm>
#include <stdexcept>

namespace coxds {

OrbitType::OrbitType(std::vector<OrbitBlock> b) : blocks(std::move(b)) {
  std::sort(blocks.begin(), blocks.end(),
            [](const OrbitBlock& x, const OrbitBlock& y) {
              return x.eigenvalue < y.eigenvalue;
            });
  for (size_t i = 0; i + 1 < blocks.size(); ++i)
    if (blocks[i].eigenvalue == blocks[i + 1].eigenvalue)
      throw std::invalid_argument("orbit eigenvalues must be distinct");
  for (const auto& blk : blocks)
    if (blk.partition.count() == 0)
      throw std::invalid_argument("orbit block with empty partition");
}

int OrbitType::rank() const {
  int n = 0;
  for (const auto& b : blocks) n += b.partition.sum();
  return n;
}

CharData OrbitType::char_data() const {
  CharData q;
  for (const auto& b : blocks) q.emplace_back(b.eigenvalue, b.partition.sum());
  return q;
}

std::vector<Rational> OrbitType::eigenvalues() const {
  std::vector<Rational> e;
  for (const auto& b : blocks) e.push_back(b.eigenvalue);
  return e;
}

Rational OrbitType::trace() const {
  Rational t = 0;
  for (const auto& b : blocks) t += b.eigenvalue * b.partition.sum();
  return t;
}

bool OrbitType::operator<(const OrbitType& o) const {
  return std::lexicographical_compare(
      blocks.begin(), blocks.end(), o.blocks.begin(), o.blocks.end(),
      [](const OrbitBlock& x, const OrbitBlock& y) {
        if (x.eigenvalue != y.eigenvalue) return x.eigenvalue < y.eigenvalue;
        return x.partition < y.partition;
      });
}

CharData make_char_data(std::vector<std::pair<Rational, int>> q) {
  std::sort(q.begin(), q.end(),
            [](const auto& x, const auto& y) { return x.first < y.first; });
  for (size_t i = 0; i + 1 < q.size(); ++i)
    if (q[i].first == q[i + 1].first)
      throw std::invalid_argument("repeated eigenvalue in characteristic data");
  for (const auto& [a, m] : q)
    if (m < 1) throw std::invalid_argument("multiplicities must be positive");
  return q;
}

OrbitType generator_orbit(int r, const CharData& q) {
  std::vector<OrbitBlock> blocks;
  for (const auto& [a, m] : q) blocks.push_back({a, lambda_rn(r, m)});
  return OrbitType(std::move(blocks));
}

Cmp closure_compare(const OrbitType& a, const OrbitType& b) {
  if (a.char_data() != b.char_data())
    throw std::invalid_argument("closure_compare: characteristic polynomials differ");
  bool ge = true, le = true;
  for (size_t i = 0; i < a.blocks.size(); ++i) {
    switch (dominance_compare(a.blocks[i].partition, b.blocks[i].partition)) {
      case Cmp::Equal:
        break;
      case Cmp::Greater:
        le = false;
        break;
      case Cmp::Less:
        ge = false;
        break;
      case Cmp::Incomparable:
        ge = le = false;
        break;
    }
    if (!ge && !le) return Cmp::Incomparable;
  }
  if (ge && le) return Cmp::Equal;
  return ge ? Cmp::Greater : Cmp::Less;
}

long orbit_dimension(const OrbitType& o) {
  long n = o.rank();
  long cent = 0;
  for (const auto& b : o.blocks)
    for (int p : b.partition.conjugate().parts) cent += static_cast<long>(p) * p;
  return n * n - cent;
}

bool nonresonant(const std::vector<Rational>& eigenvalues) {
  for (size_t i = 0; i < eigenvalues.size(); ++i)
    for (size_t j = i + 1; j < eigenvalues.size(); ++j)
      if (is_integer(eigenvalues[i] - eigenvalues[j])) return false;
  return true;
}

std::vector<OrbitType> enumerate_orbits(const CharData& q, int cap) {
  int n = 0;
  for (const auto& [a, m] : q) n += m;
  if (n > cap) throw std::length_error("enumeration cap exceeded");

  std::vector<std::vector<Partition>> choices;
  for (const auto& [a, m] : q) choices.push_back(partitions_of(m));

  std::vector<OrbitType> out;
  std::vector<OrbitBlock> cur(q.size());
  for (size_t i = 0; i < q.size(); ++i) cur[i].eigenvalue = q[i].first;

  // Odometer over the product of partition sets.
  std::vector<size_t> idx(q.size(), 0);
  for (;;) {
    for (size_t i = 0; i < q.size(); ++i) cur[i].partition = choices[i][idx[i]];
    out.push_back(OrbitType(cur));
    size_t i = 0;
    while (i < q.size() && ++idx[i] == choices[i].size()) idx[i++] = 0;
    if (i == q.size()) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<OrbitType> enumerate_filter(int r, const CharData& q, int cap) {
  OrbitType gen = generator_orbit(r, q);
  std::vector<OrbitType> out;
  for (auto& o : enumerate_orbits(q, cap)) {
    Cmp c = closure_compare(o, gen);
    if (c == Cmp::Greater || c == Cmp::Equal) out.push_back(std::move(o));
  }
  return out;
}

}  // namespace coxds
