#pragma once

#include "coxds/orbit.hpp"

namespace coxds {

struct RigidityReport {
  int n = 0;
  int r = 0;
  OrbitType orbit;       // nilpotent
  long irr = 0;          // Irr(ad) = r(n-1)
  long dim_orbit = 0;    // n^2 - dim C(N_O)
  long n_nabla = 0;      // (r-n-1)(n-1) + dim(O)
  bool rigid = false;    // n_nabla == 0
  bool divisibility = false;  // r | (n-1) or r | (n+1)
  bool is_generator = false;  // orbit == O^r_{x^n}
};

// Numerical rigidity criterion for a Coxeter connection with unipotent
// monodromy.  n_nabla is computed both from the fixed-space bookkeeping
// r(n-1) - 1 - (n^2 - dim O) + 2 and from the closed form; the two must
// agree.  Requires gcd(r,n)=1 and a nilpotent orbit.
RigidityReport numerical_criterion(int n, int r, const OrbitType& orbit);

// Classification: the rigid framable Coxeter connections with unipotent
// monodromy are exactly O = O^r_{x^n} with r | (n-1) or r | (n+1).
bool classify_rigid(int n, int r);

}  // namespace coxds
