#pragma once

#include <cstdint>
#include <string>

#include "coxds/gauge.hpp"
#include "coxds/jordan.hpp"

namespace coxds {

// Raised when a bounded internal search runs out of budget; distinct from
// validation errors because existence is still guaranteed mathematically.
struct limit_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DSInstance {
  CoxeterFormalType formal_type;
  OrbitType orbit;

  void validate() const;  // gcd, rank sum, nonresonance
};

enum class DSResult { Yes, NoTraceMismatch, NoOrbitTooSmall };

// Theorem-level decision: yes iff n p_0 = -sum m_i a_i and the orbit lies in
// the principal filter generated by O^r_q.
DSResult ds_decide(const DSInstance& inst);

// All orbits in Orb(q) with a positive answer for the given formal type.
std::vector<OrbitType> ds_enumerate(const CoxeterFormalType& ft, const CharData& q,
                                    int cap = kDefaultEnumerationCap);

struct Witness {
  LaurentMatrix alpha;  // nonpositive z-powers only; represents alpha = X dz/z
  ConstMatrix y;        // residue partner: residue_form(alpha) + y = 0
};

// Constructs a witness for a yes-instance: gauges the formal type so that
// -Res lands in O^r_q (grouped diagonal + subdiagonal slot), then raises the
// orbit with a strictly upper triangular completion found by seeded search.
// Throws limit_error if the completion budget is exhausted.
Witness witness_build(const DSInstance& inst, std::uint64_t seed = 0);

struct Verdict {
  bool valid = false;
  std::string reason;  // empty when valid
};

Verdict witness_verify(const Witness& w, const DSInstance& inst);

// Search used by witness_build, exposed for direct testing: a strictly upper
// triangular z with jordan_type(y0 + z) realizing the target orbit.
ConstMatrix krupnik_completion(const ConstMatrix& y0, const OrbitType& target,
                               std::uint64_t seed);

}  // namespace coxds
