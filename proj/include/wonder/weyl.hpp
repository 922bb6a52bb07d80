#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "wonder/rootsys.hpp"

namespace wonder {

/// Dense identifier of an element inside one enumerated WeylGroup.
using ElementId = std::int32_t;

/// The Weyl group of a root system, fully enumerated.
///
/// Elements are stored as permutations of the root index set. Ids follow a
/// breadth-first enumeration by right multiplication with the simple
/// reflections, so ids increase with length and, within one length, with the
/// lexicographically least reduced word. Id 0 is the identity.
///
/// A WeylGroup is immutable after construction.
class WeylGroup {
 public:
  explicit WeylGroup(RootSystem rs);

  const RootSystem& roots() const { return rs_; }
  int rank() const { return rs_.rank(); }
  std::size_t size() const { return length_.size(); }
  static constexpr ElementId identity() { return 0; }

  int length(ElementId w) const { return length_[w]; }
  std::span<const std::uint8_t> perm(ElementId w) const {
    return {perms_.data() + static_cast<std::size_t>(w) * width_, static_cast<std::size_t>(width_)};
  }
  /// Image of root `index` under w.
  int act(ElementId w, int index) const { return perms_[static_cast<std::size_t>(w) * width_ + index]; }

  ElementId right_mul(ElementId w, int i) const { return right_[static_cast<std::size_t>(w) * rank() + i]; }
  ElementId left_mul(int i, ElementId w) const { return inverse(right_mul(inverse(w), i)); }
  ElementId multiply(ElementId u, ElementId w) const;
  ElementId inverse(ElementId w) const { return inverse_[w]; }
  ElementId simple_reflection(int i) const { return right_mul(identity(), i); }
  /// Product of simple reflections; `word` holds 0-based simple indices.
  ElementId from_word(std::span<const int> word) const;

  bool is_right_descent(ElementId w, int i) const { return !rs_.is_positive(act(w, rs_.simple_root(i))); }
  bool is_left_descent(ElementId w, int i) const {
    return !rs_.is_positive(act(inverse(w), rs_.simple_root(i)));
  }

  /// Lexicographically least reduced word (0-based), by repeatedly stripping
  /// the smallest left descent.
  std::vector<int> reduced_word(ElementId w) const;

  ElementId longest() const { return longest_; }
  /// Longest element of the parabolic subgroup generated by `I`.
  ElementId longest_in(SimpleSubset I) const;
  /// Elements of the parabolic subgroup W_I, ascending ids.
  std::vector<ElementId> parabolic_subgroup(SimpleSubset I) const;

  /// Bruhat order. Uses the dense matrix when it exists, the subword check
  /// otherwise.
  bool bruhat_leq(ElementId u, ElementId w) const;
  /// Subword-property check along the canonical reduced word of w.
  bool bruhat_leq_subword(ElementId u, ElementId w) const;
  bool has_bruhat_matrix() const { return !below_.empty(); }

  /// True iff the W-orbit of the simple root alpha_i lies in Phi_I.
  bool w_orbit_in_subsystem(int i, SimpleSubset I) const;

  static constexpr std::size_t kDenseBruhatLimit = 10'000;

 private:
  void build_bruhat_matrix();

  RootSystem rs_;
  int width_ = 0;
  std::vector<std::uint8_t> perms_;
  std::vector<int> length_;
  std::vector<ElementId> right_;
  std::vector<ElementId> inverse_;
  std::vector<ElementId> parent_;  // w = parent * s_{last_}
  std::vector<std::int8_t> last_;
  ElementId longest_ = 0;
  std::size_t words_per_row_ = 0;
  std::vector<std::uint64_t> below_;  // row w: bit u set iff u <= w
};

}  // namespace wonder
