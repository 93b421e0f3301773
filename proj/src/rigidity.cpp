#include "coxds/rigidity.hpp"

#include <numeric>
#include <stdexcept>

namespace coxds {

RigidityReport numerical_criterion(int n, int r, const OrbitType& orbit) {
  if (n < 1 || r < 1 || std::gcd(r, n) != 1)
    throw std::invalid_argument("numerical_criterion: gcd(r,n) must be 1");
  if (orbit.rank() != n)
    throw std::invalid_argument("numerical_criterion: orbit rank differs from n");
  if (orbit.blocks.size() != 1 || orbit.blocks[0].eigenvalue != 0)
    throw std::invalid_argument("numerical_criterion: orbit must be nilpotent");

  RigidityReport rep;
  rep.n = n;
  rep.r = r;
  rep.orbit = orbit;
  rep.irr = static_cast<long>(r) * (n - 1);
  rep.dim_orbit = orbit_dimension(orbit);

  // Fixed spaces: dim gl^{I_0} = dim gl^{I} = 1 (scalars), dim gl^{I_inf} =
  // dim C(N_O) = n^2 - dim(O).
  long via_fixed_spaces =
      rep.irr - 1 - (static_cast<long>(n) * n - rep.dim_orbit) + 2;
  rep.n_nabla = static_cast<long>(r - n - 1) * (n - 1) + rep.dim_orbit;
  if (via_fixed_spaces != rep.n_nabla)
    throw std::logic_error("numerical_criterion: formula cross-check failed");

  rep.rigid = rep.n_nabla == 0;
  rep.divisibility = ((n - 1) % r == 0) || ((n + 1) % r == 0);
  rep.is_generator = orbit == generator_orbit(r, {{Rational(0), n}});
  return rep;
}

bool classify_rigid(int n, int r) {
  if (n < 1 || r < 1 || std::gcd(r, n) != 1)
    throw std::invalid_argument("classify_rigid: gcd(r,n) must be 1");
  return ((n - 1) % r == 0) || ((n + 1) % r == 0);
}

}  // namespace coxds
