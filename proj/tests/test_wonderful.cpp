#include <doctest.h>

#include <algorithm>
#include <set>

#include "wonder/wonderful.hpp"

using namespace wonder;

namespace {

RootSystem rs_of(const char* t) { return RootSystem(parse_dynkin(t)); }

const char* kTypes[] = {"A1", "A2", "A3", "A4", "B2", "B3", "C3", "D4", "G2", "F4", "E6", "A2xA1", "B2xG2"};

}  // namespace

TEST_CASE("orbit examples") {
  const auto a2 = rs_of("A2");
  CHECK(group_dim(a2) == 8);
  CHECK(orbit(a2, SimpleSubset::full(2)).orbit_dim == 8);
  CHECK(orbit(rs_of("A1"), SimpleSubset{}).orbit_dim == 2);
  const auto o = orbit(a2, SimpleSubset(0b01));
  CHECK(o.orbit_dim == 7);
  CHECK(o.stab_dim == 9);
  CHECK(o.levi_type == "A1");
  CHECK(o.unipotent_count == 2);
  CHECK(o.levi_roots.size() == 2);
  CHECK(o.parabolic_roots.size() == 4);
}

TEST_CASE("orbit_lattice examples") {
  auto dims = [](const RootSystem& rs) {
    std::vector<int> d;
    for (const auto& o : orbit_lattice(rs)) d.push_back(o.orbit_dim);
    return d;
  };
  CHECK(dims(rs_of("A1")) == std::vector<int>{2, 3});
  CHECK(dims(rs_of("A2")) == std::vector<int>{6, 7, 7, 8});
  for (const char* t : kTypes) {
    const auto rs = rs_of(t);
    const auto lattice = orbit_lattice(rs);
    CHECK(lattice.size() == (1u << rs.rank()));
    for (std::size_t k = 1; k < lattice.size(); ++k) {
      const auto a = lattice[k - 1].J, b = lattice[k].J;
      CHECK((a.size() < b.size() || (a.size() == b.size() && a.mask() < b.mask())));
    }
  }
}

TEST_CASE("orbit descriptor invariants") {
  for (const char* t : kTypes) {
    const auto rs = rs_of(t);
    const int dim_g = group_dim(rs);
    CHECK(dim_g == rs.size() + rs.rank());
    int divisors = 0;
    for (const auto& o : orbit_lattice(rs)) {
      const auto sub = rs.sub_system(o.J);
      CHECK(std::set<int>(o.levi_roots.begin(), o.levi_roots.end()) == std::set<int>(sub.begin(), sub.end()));
      CHECK(o.orbit_dim == dim_g - rs.rank() + o.J.size());
      CHECK(o.stab_dim + o.orbit_dim == 2 * dim_g);
      CHECK(o.unipotent_count == rs.num_positive() - static_cast<int>(sub.size()) / 2);
      CHECK(o.levi_type == rs.subdiagram_type(o.J));

      const std::set<int> parabolic(o.parabolic_roots.begin(), o.parabolic_roots.end());
      for (int a = 0; a < rs.num_positive(); ++a) CHECK(parabolic.count(a) == 1);
      std::set<int> both;
      for (int a : parabolic)
        if (parabolic.count(rs.negate(a))) both.insert(a);
      CHECK(both == std::set<int>(sub.begin(), sub.end()));
      for (int a = 0; a < rs.size(); ++a) {
        CHECK((rs.lambda_pairing(o.J, a) >= 0) == (parabolic.count(a) == 1));
        CHECK((rs.lambda_pairing(o.J, a) == 0) == rs.in_sub_system(a, o.J));
      }
      if (o.J.size() == rs.rank() - 1) {
        ++divisors;
        CHECK(o.orbit_dim == dim_g - 1);
      }
      if (o.J.empty()) CHECK(o.orbit_dim == 2 * rs.num_positive());
      if (o.J.size() == rs.rank()) CHECK(o.orbit_dim == dim_g);
    }
    CHECK(divisors == rs.rank());
  }
}

TEST_CASE("orbit dimension is strictly monotone under inclusion") {
  for (const char* t : kTypes) {
    const auto rs = rs_of(t);
    const auto lattice = orbit_lattice(rs);
    for (const auto& a : lattice)
      for (const auto& b : lattice)
        if (a.J.subset_of(b.J) && !(a.J == b.J)) CHECK(a.orbit_dim < b.orbit_dim);
  }
}
