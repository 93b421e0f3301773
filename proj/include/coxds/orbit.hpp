#pragma once

#include <map>
#include <utility>

#include "coxds/partition.hpp"

namespace coxds {

// Multiplicity data of a characteristic polynomial q = prod (x-a_i)^{m_i},
// with distinct eigenvalues.
using CharData = std::vector<std::pair<Rational, int>>;

struct OrbitBlock {
  Rational eigenvalue;
  Partition partition;

  bool operator==(const OrbitBlock& o) const {
    return eigenvalue == o.eigenvalue && partition == o.partition;
  }
};

// Adjoint orbit type: a Jordan partition per eigenvalue.  Blocks are kept
// sorted by eigenvalue so equality is structural.
struct OrbitType {
  std::vector<OrbitBlock> blocks;

  OrbitType() = default;
  explicit OrbitType(std::vector<OrbitBlock> b);

  int rank() const;  // total size n
  CharData char_data() const;
  std::vector<Rational> eigenvalues() const;
  Rational trace() const;

  bool operator==(const OrbitType& o) const { return blocks == o.blocks; }
  bool operator<(const OrbitType& o) const;
};

CharData make_char_data(std::vector<std::pair<Rational, int>> q);

// O^r_q: partition lambda^{r,m_i} at each eigenvalue.
OrbitType generator_orbit(int r, const CharData& q);

// Closure order = product of the dominance orders over matching eigenvalues.
// Throws if the characteristic polynomials differ.
Cmp closure_compare(const OrbitType& a, const OrbitType& b);

// n^2 - sum over blocks of sum of squares of conjugate-partition parts.
long orbit_dimension(const OrbitType& o);

// True iff no two of the given eigenvalues differ by an integer (this
// includes distinctness: a difference of zero is an integer).
bool nonresonant(const std::vector<Rational>& eigenvalues);

inline constexpr int kDefaultEnumerationCap = 12;

// All of Orb(q) (product of partition sets), canonically sorted.
std::vector<OrbitType> enumerate_orbits(const CharData& q,
                                        int cap = kDefaultEnumerationCap);

// The principal filter {O : O >= O^r_q}, i.e. orbits with at most r Jordan
// blocks per eigenvalue.
std::vector<OrbitType> enumerate_filter(int r, const CharData& q,
                                        int cap = kDefaultEnumerationCap);

}  // namespace coxds
