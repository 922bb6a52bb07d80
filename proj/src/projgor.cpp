#include "wonder/projgor.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "wonder/rootsys.hpp"

namespace wonder {

Composition composition_from_J(int n, SimpleSubset J) {
  if (n < 1) throw std::invalid_argument("composition_from_J: n must be positive");
  if (!J.subset_of(SimpleSubset::full(n))) throw std::invalid_argument("composition_from_J: J outside 1..n");
  Composition c;
  c.n = n;
  int start = 0;
  for (int j = 1; j <= n; ++j)
    if (!J.contains(j - 1)) {
      c.cuts.push_back(j);
      c.blocks.push_back(j - start);
      start = j;
    }
  c.blocks.push_back(n + 1 - start);
  return c;
}

std::vector<PnComponent> pn_components(const Composition& c) {
  std::vector<PnComponent> out;
  const int r = c.r();
  int before = 0;
  for (int i = 0; i <= r; ++i) {
    PnComponent z;
    z.i = i;
    z.before = before;
    z.block = c.blocks[i];
    z.after = c.n + 1 - before - z.block;
    z.w_of_one = before + 1;
    // x in P(V_{<i} + l), y in P(V_{>i} + l), l a line in V_i
    z.levi_dim = z.block - 1;
    z.x_dim = z.before;
    z.xminus_dim = z.after;
    z.blowup_end = r > 0 && (i == 0 || i == r);
    z.smooth = z.block == 1 || i == 0 || i == r;
    out.push_back(z);
    before += z.block;
  }
  return out;
}

int pairwise_intersection_dim(const Composition& c, int i) {
  if (i < 0 || i >= c.r()) throw std::out_of_range("pairwise_intersection_dim: index out of range");
  int upto = 0;
  for (int k = 0; k <= i; ++k) upto += c.blocks[k];
  return (upto - 1) + (c.n + 1 - upto - 1);
}

int permutation_image(const WeylGroup& g, ElementId w, int point) {
  const auto& type = g.roots().type();
  if (type.components.size() != 1 || type.components[0].family != 'A')
    throw std::invalid_argument("permutation_image: type A_n only");
  const auto word = g.reduced_word(w);
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    const int i = *it + 1;  // s_i swaps i and i+1
    if (point == i)
      point = i + 1;
    else if (point == i + 1)
      point = i;
  }
  return point;
}

RationalPolynomial diag_hilbert_poly(int n) {
  if (n < 1) throw std::invalid_argument("diag_hilbert_poly: n must be positive");
  RationalPolynomial h = RationalPolynomial::constant(1);
  BigInt fact = 1;
  for (int i = 1; i <= n; ++i) {
    h = h * RationalPolynomial::linear(2, i);
    fact *= i;
  }
  return Rational(1, fact) * h;
}

DualityVariant parse_variant(std::string_view text) {
  if (text == "paper") return DualityVariant::Paper;
  if (text == "signed") return DualityVariant::Signed;
  throw UsageError("unknown variant '" + std::string(text) + "' (expected paper or signed)");
}

std::string_view to_string(DualityVariant v) { return v == DualityVariant::Paper ? "paper" : "signed"; }

namespace {

int duality_sign(int n, DualityVariant variant) {
  return variant == DualityVariant::Paper ? 1 : (n % 2 == 0 ? 1 : -1);
}

}  // namespace

std::optional<int> gorenstein_obstruction_by_scan(int n, DualityVariant variant) {
  const auto h = diag_hilbert_poly(n);
  const auto lhs = h.compose_affine(-1, 0);
  const Rational sign = duality_sign(n, variant);
  for (int step = 0; step <= 4 * n; ++step) {
    const int p = step % 2 == 1 ? -(step + 1) / 2 : step / 2;
    if (lhs == sign * h.compose_affine(1, p)) return p;
  }
  return std::nullopt;
}

std::optional<int> gorenstein_obstruction_by_roots(int n, DualityVariant variant) {
  // Roots, doubled: h(-m) vanishes at 2m = 1..n, h(m+p) at 2m = -i-2p.
  // Leading coefficients: (-2)^n/n! against s * 2^n/n!.
  if (duality_sign(n, variant) != (n % 2 == 0 ? 1 : -1)) return std::nullopt;
  std::vector<int> left(n);
  for (int i = 1; i <= n; ++i) left[i - 1] = i;
  for (int step = 0; step <= 4 * n; ++step) {
    const int p = step % 2 == 1 ? -(step + 1) / 2 : step / 2;
    std::vector<int> right(n);
    for (int i = 1; i <= n; ++i) right[i - 1] = -i - 2 * p;
    std::sort(right.begin(), right.end());
    if (right == left) return p;
  }
  return std::nullopt;
}

std::optional<int> gorenstein_obstruction(int n, DualityVariant variant) {
  const auto scan = gorenstein_obstruction_by_scan(n, variant);
  if (scan != gorenstein_obstruction_by_roots(n, variant))
    throw std::logic_error("gorenstein_obstruction: scan and root matching disagree");
  return scan;
}

}  // namespace wonder
