#include "wonder/weyl.hpp"

#include <algorithm>
#include <bit>
#include <string>
#include <unordered_map>

namespace wonder {

WeylGroup::WeylGroup(RootSystem rs) : rs_(std::move(rs)) {
  const int n = rank();
  width_ = rs_.size();
  const auto order = static_cast<std::size_t>(rs_.type().weyl_order());

  perms_.reserve(order * width_);
  length_.reserve(order);
  parent_.reserve(order);
  last_.reserve(order);
  right_.assign(order * n, -1);

  // An element is determined by the images of the simple roots.
  std::unordered_map<std::string, ElementId> index;
  index.reserve(order * 2);
  std::string key(n, '\0');

  for (int r = 0; r < width_; ++r) perms_.push_back(static_cast<std::uint8_t>(r));
  for (int j = 0; j < n; ++j) key[j] = static_cast<char>(rs_.simple_root(j));
  index.emplace(key, 0);
  length_.push_back(0);
  parent_.push_back(-1);
  last_.push_back(-1);

  for (std::size_t w = 0; w < length_.size(); ++w) {
    const std::size_t base = w * width_;
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) key[j] = static_cast<char>(perms_[base + rs_.reflect(i, rs_.simple_root(j))]);
      auto [it, inserted] = index.try_emplace(key, static_cast<ElementId>(length_.size()));
      if (inserted) {
        if (length_.size() >= order) throw std::logic_error("Weyl group exceeds its classical order");
        for (int r = 0; r < width_; ++r) perms_.push_back(perms_[base + rs_.reflect(i, r)]);
        length_.push_back(length_[w] + 1);
        parent_.push_back(static_cast<ElementId>(w));
        last_.push_back(static_cast<std::int8_t>(i));
      }
      right_[w * n + i] = it->second;
    }
  }
  if (length_.size() != order) throw std::logic_error("Weyl group order differs from the classical formula");

  inverse_.resize(order);
  for (std::size_t w = 0; w < order; ++w) {
    ElementId x = identity();
    for (auto y = static_cast<ElementId>(w); y != identity(); y = parent_[y]) x = right_mul(x, last_[y]);
    inverse_[w] = x;
  }
  longest_ = static_cast<ElementId>(order - 1);

  if (order <= kDenseBruhatLimit) build_bruhat_matrix();
}

ElementId WeylGroup::from_word(std::span<const int> word) const {
  ElementId x = identity();
  for (int i : word) {
    if (i < 0 || i >= rank()) throw std::invalid_argument("simple index out of range in word");
    x = right_mul(x, i);
  }
  return x;
}

ElementId WeylGroup::multiply(ElementId u, ElementId w) const {
  int letters[128];
  int k = 0;
  for (ElementId y = w; y != identity(); y = parent_[y]) letters[k++] = last_[y];
  while (k > 0) u = right_mul(u, letters[--k]);
  return u;
}

std::vector<int> WeylGroup::reduced_word(ElementId w) const {
  std::vector<int> word;
  word.reserve(length(w));
  while (w != identity()) {
    int i = 0;
    while (!is_left_descent(w, i)) ++i;
    word.push_back(i);
    w = left_mul(i, w);
  }
  return word;
}

ElementId WeylGroup::longest_in(SimpleSubset I) const {
  ElementId w = identity();
  for (bool grew = true; grew;) {
    grew = false;
    for (int i : I.indices())
      if (!is_right_descent(w, i)) {
        w = right_mul(w, i);
        grew = true;
      }
  }
  return w;
}

std::vector<ElementId> WeylGroup::parabolic_subgroup(SimpleSubset I) const {
  std::vector<char> seen(size(), 0);
  std::vector<ElementId> out{identity()};
  seen[identity()] = 1;
  const auto gens = I.indices();
  for (std::size_t k = 0; k < out.size(); ++k)
    for (int i : gens) {
      const ElementId x = right_mul(out[k], i);
      if (!seen[x]) {
        seen[x] = 1;
        out.push_back(x);
      }
    }
  std::sort(out.begin(), out.end());
  return out;
}

void WeylGroup::build_bruhat_matrix() {
  words_per_row_ = (size() + 63) / 64;
  below_.assign(size() * words_per_row_, 0);
  below_[0] |= 1;
  // [e, w] = [e, ws] u [e, ws]s for a right descent s of w
  for (std::size_t w = 1; w < size(); ++w) {
    const ElementId p = parent_[w];
    const int s = last_[w];
    std::uint64_t* row = below_.data() + w * words_per_row_;
    const std::uint64_t* prow = below_.data() + static_cast<std::size_t>(p) * words_per_row_;
    for (std::size_t k = 0; k < words_per_row_; ++k) {
      row[k] |= prow[k];
      for (std::uint64_t bits = prow[k]; bits; bits &= bits - 1) {
        const auto u = static_cast<ElementId>(k * 64 + std::countr_zero(bits));
        const ElementId us = right_mul(u, s);
        row[us / 64] |= std::uint64_t{1} << (us % 64);
      }
    }
  }
}

bool WeylGroup::bruhat_leq(ElementId u, ElementId w) const {
  if (!below_.empty()) return (below_[static_cast<std::size_t>(w) * words_per_row_ + u / 64] >> (u % 64)) & 1u;
  return bruhat_leq_subword(u, w);
}

bool WeylGroup::bruhat_leq_subword(ElementId u, ElementId w) const {
  // Walk the reduced word of w from the right: with w = w's, u <= w iff
  // us <= w' when s is a right descent of u, and u <= w' otherwise.
  for (ElementId x = w; x != identity(); x = parent_[x]) {
    if (length(u) > length(x)) return false;
    const int s = last_[x];
    if (is_right_descent(u, s)) u = right_mul(u, s);
  }
  return u == identity();
}

bool WeylGroup::w_orbit_in_subsystem(int i, SimpleSubset I) const {
  const int alpha = rs_.simple_root(i);
  for (std::size_t w = 0; w < size(); ++w)
    if (!rs_.in_sub_system(act(static_cast<ElementId>(w), alpha), I)) return false;
  return true;
}

}  // namespace wonder
