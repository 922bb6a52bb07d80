#include "wonder/wonderful.hpp"

#include <algorithm>

namespace wonder {

int group_dim(const RootSystem& rs) { return rs.size() + rs.rank(); }

OrbitDescriptor orbit(const RootSystem& rs, SimpleSubset J) {
  OrbitDescriptor d;
  d.J = J;
  for (int a = 0; a < rs.size(); ++a) {
    const int pairing = rs.lambda_pairing(J, a);
    if (pairing >= 0) d.parabolic_roots.push_back(a);
    if (pairing == 0) d.levi_roots.push_back(a);
  }
  if (d.levi_roots != rs.sub_system(J)) throw std::logic_error("centralizer of lambda_J is not the Levi of J");
  const int levi_positive = static_cast<int>(d.levi_roots.size()) / 2;
  d.unipotent_count = rs.num_positive() - levi_positive;

  // Stab(x_J) = (R_u(P_J^-) x R_u(P_J)) . diag(L_J) . (C_J x C_J)
  const int rank = rs.rank();
  const int levi_dim = static_cast<int>(d.levi_roots.size()) + rank;
  const int center_dim = rank - J.size();
  d.stab_dim = 2 * d.unipotent_count + levi_dim + center_dim;
  d.orbit_dim = 2 * group_dim(rs) - d.stab_dim;
  if (d.orbit_dim != group_dim(rs) - rank + J.size()) throw std::logic_error("orbit dimension mismatch");
  d.levi_type = rs.subdiagram_type(J);
  return d;
}

std::vector<OrbitDescriptor> orbit_lattice(const RootSystem& rs) {
  std::vector<std::uint32_t> masks(std::size_t{1} << rs.rank());
  for (std::uint32_t m = 0; m < masks.size(); ++m) masks[m] = m;
  std::stable_sort(masks.begin(), masks.end(), [](std::uint32_t a, std::uint32_t b) {
    return SimpleSubset(a).size() < SimpleSubset(b).size();
  });
  std::vector<OrbitDescriptor> out;
  out.reserve(masks.size());
  for (auto m : masks) out.push_back(orbit(rs, SimpleSubset(m)));
  return out;
}

}  // namespace wonder
