#pragma once

// Degenerations of the diagonal in P^n x P^n, described directly through
// decompositions V = V_0 + ... + V_r of k^{n+1}, and the Hilbert-polynomial
// obstruction to the total degeneration being Gorenstein.
//
// Index convention: P^n = G/P_I for G of type A_n with I = {alpha_2..alpha_n}
// (the stabilizer of the line k v_1). An element of W^I is determined by
// w(1); the simple roots outside J are the cut positions of the blocks.

#include <optional>
#include <string_view>
#include <vector>

#include "wonder/rational_poly.hpp"
#include "wonder/weyl.hpp"

namespace wonder {

struct Composition {
  int n = 0;
  std::vector<int> blocks;  // dim V_0, ..., dim V_r; sum n+1
  std::vector<int> cuts;    // 1-based j with alpha_j not in J, ascending

  int r() const { return static_cast<int>(blocks.size()) - 1; }
};

/// Blocks are the runs of {1..n+1} between consecutive cuts Delta \ J.
Composition composition_from_J(int n, SimpleSubset J);

struct PnComponent {
  int i = 0;
  int w_of_one = 0;  // Z_i = Z(w_k) with k = dim V_{<i} + 1
  int before = 0;    // dim V_{<i}
  int block = 0;     // dim V_i
  int after = 0;     // dim V_{>i}
  int levi_dim = 0;  // dim P(V_i)
  int xminus_dim = 0;
  int x_dim = 0;
  bool smooth = true;
  bool blowup_end = false;
};

std::vector<PnComponent> pn_components(const Composition& c);

/// dim of Z_i cap Z_{i+1} = P(V_{<=i}) x P(V_{>i}); throws std::out_of_range
/// unless 0 <= i < r.
int pairwise_intersection_dim(const Composition& c, int i);

/// Image of `point` (1-based) under w, for w in the Weyl group of a single
/// A_n component acting on {1..n+1}.
int permutation_image(const WeylGroup& g, ElementId w, int point);

/// (2m+1)(2m+2)...(2m+n)/n!.
RationalPolynomial diag_hilbert_poly(int n);

enum class DualityVariant { Paper, Signed };

DualityVariant parse_variant(std::string_view text);
std::string_view to_string(DualityVariant v);

/// Integer p in [-2n, 2n] of least |p| (negative first) with
/// h(-m) == s * h(m+p), s = 1 (Paper) or (-1)^n (Signed), by polynomial comparison.
std::optional<int> gorenstein_obstruction_by_scan(int n, DualityVariant variant);
/// The same answer by matching root multisets and leading coefficients.
std::optional<int> gorenstein_obstruction_by_roots(int n, DualityVariant variant);
/// Both routes; throws std::logic_error if they disagree.
std::optional<int> gorenstein_obstruction(int n, DualityVariant variant);

}  // namespace wonder
