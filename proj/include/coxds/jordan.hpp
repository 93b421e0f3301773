#pragma once

#include <optional>

#include "coxds/constmatrix.hpp"
#include "coxds/orbit.hpp"

namespace coxds {

// Rational roots of p with multiplicities, by rational-root extraction and
// repeated deflation.  The roots found are exactly the rational ones; the
// polynomial splits over Q iff the multiplicities sum to deg(p).
std::vector<std::pair<Rational, int>> rational_roots(const Poly& p);

// Jordan type of a constant matrix: for each eigenvalue a the partition
// whose conjugate is (rank((Y-aI)^{k-1}) - rank((Y-aI)^k))_k.  If the
// eigenvalue list is omitted it is recovered by rational-root extraction;
// throws if the characteristic polynomial does not split over Q, or if a
// provided list misses a root.
OrbitType jordan_type(const ConstMatrix& y,
                      const std::optional<std::vector<Rational>>& eigenvalues = {});

// Membership = equal characteristic polynomial and equal Jordan type.
bool in_orbit(const ConstMatrix& y, const OrbitType& o);

}  // namespace coxds
