#pragma once

// Irreducible components of the degenerations of the diagonal in X x X,
// X = G/P_I, at the orbit representative x_J of the wonderful
// compactification.
//
// Component Z_w, for w in ^J W^I, is the diag(L_J)-sweep of
// w_J X^-_{u} x X_w with u the W^I representative of w_J w. Its dimension
// is computed on the open cell of L_J x^{L_J cap wP} (w_J C^-_u x C_w):
//     levi  = dim L_J / (L_J cap wP) = #{a in Phi_J : w^{-1}(a) in Phi- \ Phi_I}
//     total = levi + dim C^-_u + dim C_w

#include <utility>
#include <vector>

#include "wonder/cosets.hpp"

namespace wonder {

struct FiberComponent {
  ElementId w = 0;     // index of X_w, in ^J W^I
  ElementId left = 0;  // index of X^-, canonicalize(w_J w) in W^I
  int levi_dim = 0;
  int xminus_dim = 0;  // dim X^-_left
  int x_dim = 0;       // dim X_w
  int total_dim = 0;

  friend bool operator==(const FiberComponent&, const FiberComponent&) = default;
};

struct SchubertPair {
  ElementId xminus = 0;
  ElementId x = 0;

  friend bool operator==(const SchubertPair&, const SchubertPair&) = default;
  friend auto operator<=>(const SchubertPair&, const SchubertPair&) = default;
};

/// Throws DomainError unless G acts faithfully on G/P_I.
void require_faithful(const RootSystem& rs, SimpleSubset I);

/// One component per w in ^J W^I, in ascending id order.
std::vector<FiberComponent> fiber_components(const WeylGroup& g, SimpleSubset I, SimpleSubset J);
int component_count(const WeylGroup& g, SimpleSubset I, SimpleSubset J);

/// The total degeneration: (X^-_w, X_w) for w in W^I.
std::vector<SchubertPair> closed_fiber(const WeylGroup& g, SimpleSubset I);

/// Full flag variety (I empty); every component has levi_dim = |Phi_J+|.
std::vector<FiberComponent> full_flag_fiber(const WeylGroup& g, SimpleSubset J);

/// T x T-fixed points (u, v) of Z_0 cap (X_w x X^-_w), by exhaustive scan of
/// (W^I)^3: some x in W^I has x <= u and v <= x, and u <= w <= v.
std::vector<std::pair<ElementId, ElementId>> fixed_point_profile(const WeylGroup& g, SimpleSubset I, ElementId w);

/// Weights of the tangent action at (e_w, e_w):
/// Phi- cap w(Phi \ Phi_I), checked equal to Phi- \ w(Phi_I). Root indices, ascending.
std::vector<int> weight_set(const WeylGroup& g, SimpleSubset I, ElementId w);

/// Positive roots a with w^{-1}(a) in Phi+ u Phi_I for every w in W^I, i.e.
/// the root spaces of the intersection of all U cap wP. Empty when I is faithful.
std::vector<int> common_unipotent_roots(const WeylGroup& g, SimpleSubset I);

/// Simple roots a for which no w in W^I has w^{-1}(a) outside Phi_I.
std::vector<int> uncovered_simple_roots(const WeylGroup& g, SimpleSubset I);

}  // namespace wonder
