#pragma once

#include <utility>
#include <vector>

#include "wonder/weyl.hpp"

namespace wonder {

struct CellDims {
  int cell = 0;      // dim C_w
  int opposite = 0;  // dim C^-_w

  friend bool operator==(const CellDims&, const CellDims&) = default;
};

/// Minimal coset representatives W^I of W/W_I together with Bruhat-cell
/// dimensions on X = G/P_I. Holds a reference to the group, which must
/// outlive it.
class QuotientData {
 public:
  QuotientData(const WeylGroup& g, SimpleSubset I);

  const WeylGroup& group() const { return *g_; }
  SimpleSubset I() const { return I_; }
  /// W^I in ascending id order.
  const std::vector<ElementId>& reps() const { return reps_; }
  bool is_rep(ElementId w) const { return member_[w] != 0; }
  /// dim X = |Phi+| - |Phi_I+|.
  int dim_X() const { return dim_x_; }

  /// The element of W^I in the coset w W_I.
  ElementId canonicalize(ElementId w) const;
  /// w_Delta w w_I, for w in W^I.
  ElementId involution_image(ElementId w) const;
  /// Cell dimensions by root counting, for w in W^I.
  CellDims cell_dims(ElementId w) const;

 private:
  void require_rep(ElementId w) const;

  const WeylGroup* g_;
  SimpleSubset I_;
  std::vector<ElementId> reps_;
  std::vector<char> member_;
  int dim_x_ = 0;
  ElementId longest_I_ = 0;
};

/// True iff w(alpha_i) > 0 for every i in I.
bool is_min_in_right_coset(const WeylGroup& g, ElementId w, SimpleSubset I);

/// ^J W^I = { w : w(I) > 0 and w^{-1}(J) > 0 }, ascending ids.
std::vector<ElementId> double_min_reps(const WeylGroup& g, SimpleSubset J, SimpleSubset I);

/// The unique longest element of W_I w W_J. Throws std::logic_error if the
/// exhaustive scan finds more than one element of maximal length.
ElementId double_max_rep(const WeylGroup& g, SimpleSubset J, SimpleSubset I, ElementId w);

/// All elements of W_left w W_right, ascending ids.
std::vector<ElementId> double_coset(const WeylGroup& g, SimpleSubset left, ElementId w, SimpleSubset right);

}  // namespace wonder
