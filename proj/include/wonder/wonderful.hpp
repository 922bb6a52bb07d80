#pragma once

#include <string>
#include <vector>

#include "wonder/rootsys.hpp"

namespace wonder {

/// The G x G-orbit O_J of the wonderful compactification of the adjoint
/// group, identified by J. Dimensions are for the adjoint group:
/// dim G = |Phi| + rank, dim L_J = |Phi_J| + rank, dim C_J = rank - |J|.
struct OrbitDescriptor {
  SimpleSubset J;
  std::vector<int> parabolic_roots;  // {a : <lambda_J, a> >= 0}
  std::vector<int> levi_roots;       // Phi_J
  int unipotent_count = 0;           // |Phi+ \ Phi_J+|
  int stab_dim = 0;
  int orbit_dim = 0;
  std::string levi_type;
};

int group_dim(const RootSystem& rs);

OrbitDescriptor orbit(const RootSystem& rs, SimpleSubset J);

/// All 2^rank orbits, ordered by |J| and then by mask.
std::vector<OrbitDescriptor> orbit_lattice(const RootSystem& rs);

}  // namespace wonder
