#include "wonder/cosets.hpp"

#include <algorithm>
#include <string>

namespace wonder {

bool is_min_in_right_coset(const WeylGroup& g, ElementId w, SimpleSubset I) {
  for (int i : I.indices())
    if (g.is_right_descent(w, i)) return false;
  return true;
}

QuotientData::QuotientData(const WeylGroup& g, SimpleSubset I) : g_(&g), I_(I) {
  member_.assign(g.size(), 0);
  for (std::size_t w = 0; w < g.size(); ++w)
    if (is_min_in_right_coset(g, static_cast<ElementId>(w), I)) {
      reps_.push_back(static_cast<ElementId>(w));
      member_[w] = 1;
    }
  const auto& rs = g.roots();
  int levi_positive = 0;
  for (int k : rs.sub_system(I))
    if (rs.is_positive(k)) ++levi_positive;
  dim_x_ = rs.num_positive() - levi_positive;
  longest_I_ = g.longest_in(I);
}

ElementId QuotientData::canonicalize(ElementId w) const {
  const auto gens = I_.indices();
  for (bool moved = true; moved;) {
    moved = false;
    for (int i : gens)
      if (g_->is_right_descent(w, i)) {
        w = g_->right_mul(w, i);
        moved = true;
      }
  }
  return w;
}

void QuotientData::require_rep(ElementId w) const {
  if (w < 0 || static_cast<std::size_t>(w) >= member_.size() || !member_[w])
    throw std::invalid_argument("element " + std::to_string(w) + " is not a minimal coset representative");
}

ElementId QuotientData::involution_image(ElementId w) const {
  require_rep(w);
  return g_->multiply(g_->multiply(g_->longest(), w), longest_I_);
}

CellDims QuotientData::cell_dims(ElementId w) const {
  require_rep(w);
  const auto& rs = g_->roots();
  const ElementId winv = g_->inverse(w);
  CellDims d;
  for (int a = 0; a < rs.size(); ++a) {
    const int b = g_->act(winv, a);
    if (rs.is_positive(b) || rs.in_sub_system(b, I_)) continue;
    if (rs.is_positive(a))
      ++d.cell;
    else
      ++d.opposite;
  }
  if (d.cell != g_->length(w) || d.cell + d.opposite != dim_x_)
    throw std::logic_error("cell dimensions disagree with the length function");
  return d;
}

std::vector<ElementId> double_min_reps(const WeylGroup& g, SimpleSubset J, SimpleSubset I) {
  std::vector<ElementId> out;
  for (std::size_t k = 0; k < g.size(); ++k) {
    const auto w = static_cast<ElementId>(k);
    if (is_min_in_right_coset(g, w, I) && is_min_in_right_coset(g, g.inverse(w), J)) out.push_back(w);
  }
  return out;
}

std::vector<ElementId> double_coset(const WeylGroup& g, SimpleSubset left, ElementId w, SimpleSubset right) {
  std::vector<char> seen(g.size(), 0);
  std::vector<ElementId> out{w};
  seen[w] = 1;
  const auto lg = left.indices();
  const auto rg = right.indices();
  auto visit = [&](ElementId x) {
    if (!seen[x]) {
      seen[x] = 1;
      out.push_back(x);
    }
  };
  for (std::size_t k = 0; k < out.size(); ++k) {
    const ElementId x = out[k];
    for (int i : lg) visit(g.left_mul(i, x));
    for (int i : rg) visit(g.right_mul(x, i));
  }
  std::sort(out.begin(), out.end());
  return out;
}

ElementId double_max_rep(const WeylGroup& g, SimpleSubset J, SimpleSubset I, ElementId w) {
  const auto coset = double_coset(g, I, w, J);
  int best = -1;
  ElementId arg = -1;
  int ties = 0;
  for (ElementId x : coset) {
    if (g.length(x) > best) {
      best = g.length(x);
      arg = x;
      ties = 1;
    } else if (g.length(x) == best) {
      ++ties;
    }
  }
  if (ties != 1) throw std::logic_error("double coset has no unique longest element");
  return arg;
}

}  // namespace wonder
