#include "wonder/degen.hpp"

#include <algorithm>

namespace wonder {

void require_faithful(const RootSystem& rs, SimpleSubset I) {
  if (!rs.is_faithful(I)) throw DomainError("I is not faithful: it contains a connected component of the Dynkin diagram");
}

std::vector<FiberComponent> fiber_components(const WeylGroup& g, SimpleSubset I, SimpleSubset J) {
  const auto& rs = g.roots();
  require_faithful(rs, I);
  const QuotientData q(g, I);
  const ElementId wJ = g.longest_in(J);
  const auto levi = rs.sub_system(J);

  std::vector<FiberComponent> out;
  for (ElementId w : double_min_reps(g, J, I)) {
    FiberComponent c;
    c.w = w;
    c.left = q.canonicalize(g.multiply(wJ, w));
    const ElementId winv = g.inverse(w);
    for (int a : levi) {
      const int b = g.act(winv, a);
      if (!rs.is_positive(b) && !rs.in_sub_system(b, I)) ++c.levi_dim;
    }
    c.xminus_dim = q.cell_dims(c.left).opposite;
    c.x_dim = q.cell_dims(w).cell;
    c.total_dim = c.levi_dim + c.xminus_dim + c.x_dim;
    out.push_back(c);
  }
  return out;
}

int component_count(const WeylGroup& g, SimpleSubset I, SimpleSubset J) {
  require_faithful(g.roots(), I);
  return static_cast<int>(double_min_reps(g, J, I).size());
}

std::vector<SchubertPair> closed_fiber(const WeylGroup& g, SimpleSubset I) {
  require_faithful(g.roots(), I);
  const QuotientData q(g, I);
  std::vector<SchubertPair> out;
  for (ElementId w : q.reps()) out.push_back({w, w});
  return out;
}

std::vector<FiberComponent> full_flag_fiber(const WeylGroup& g, SimpleSubset J) {
  auto comps = fiber_components(g, SimpleSubset{}, J);
  const int levi_positive = static_cast<int>(g.roots().sub_system(J).size()) / 2;
  for (const auto& c : comps)
    if (c.levi_dim != levi_positive) throw std::logic_error("L_J cap wB is not B_J");
  return comps;
}

std::vector<std::pair<ElementId, ElementId>> fixed_point_profile(const WeylGroup& g, SimpleSubset I, ElementId w) {
  const QuotientData q(g, I);
  if (!q.is_rep(w)) throw std::invalid_argument("fixed_point_profile: w is not in W^I");
  const auto& reps = q.reps();
  std::vector<std::pair<ElementId, ElementId>> out;
  for (ElementId u : reps) {
    if (!g.bruhat_leq(u, w)) continue;
    for (ElementId v : reps) {
      if (!g.bruhat_leq(w, v)) continue;
      for (ElementId x : reps)
        if (g.bruhat_leq(x, u) && g.bruhat_leq(v, x)) {
          out.emplace_back(u, v);
          break;
        }
    }
  }
  return out;
}

std::vector<int> weight_set(const WeylGroup& g, SimpleSubset I, ElementId w) {
  if (!is_min_in_right_coset(g, w, I)) throw std::invalid_argument("weight_set: w is not in W^I");
  const auto& rs = g.roots();
  std::vector<char> in_levi_image(rs.size(), 0);  // w(Phi_I)
  std::vector<char> in_complement_image(rs.size(), 0);  // w(Phi \ Phi_I)
  for (int a = 0; a < rs.size(); ++a)
    (rs.in_sub_system(a, I) ? in_levi_image : in_complement_image)[g.act(w, a)] = 1;
  std::vector<int> first, second;
  for (int b = rs.num_positive(); b < rs.size(); ++b) {
    if (in_complement_image[b]) first.push_back(b);
    if (!in_levi_image[b]) second.push_back(b);
  }
  if (first != second) throw std::logic_error("weight_set: the two expressions differ");
  return first;
}

std::vector<int> common_unipotent_roots(const WeylGroup& g, SimpleSubset I) {
  const auto& rs = g.roots();
  const QuotientData q(g, I);
  std::vector<int> out;
  for (int a = 0; a < rs.num_positive(); ++a) {
    bool everywhere = true;
    for (ElementId w : q.reps()) {
      const int b = g.act(g.inverse(w), a);
      if (!rs.is_positive(b) && !rs.in_sub_system(b, I)) {
        everywhere = false;
        break;
      }
    }
    if (everywhere) out.push_back(a);
  }
  return out;
}

std::vector<int> uncovered_simple_roots(const WeylGroup& g, SimpleSubset I) {
  const auto& rs = g.roots();
  const QuotientData q(g, I);
  std::vector<int> out;
  for (int i = 0; i < rs.rank(); ++i) {
    const int alpha = rs.simple_root(i);
    const bool covered = std::any_of(q.reps().begin(), q.reps().end(), [&](ElementId w) {
      return !rs.in_sub_system(g.act(g.inverse(w), alpha), I);
    });
    if (!covered) out.push_back(i);
  }
  return out;
}

}  // namespace wonder
