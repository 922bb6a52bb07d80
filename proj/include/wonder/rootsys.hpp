#pragma once

// Finite crystallographic root systems built from Dynkin-type strings.
//
// Conventions
//   * Simple roots are numbered as in Bourbaki within each irreducible
//     component; components are concatenated in input order.
//   * Simple indices are 0-based in the C++ API. Every text and JSON format
//     (Dynkin strings aside) uses 1-based indices.
//   * cartan(i, j) = <alpha_j, alpha_i^vee>, so the simple reflection s_i acts
//     on a root with coordinates b (simple-root basis) by
//         s_i(b) = b - (sum_j cartan(i, j) * b_j) alpha_i.
//     For B2 this gives s_2(alpha_1) = alpha_1 + 2 alpha_2 (alpha_2 short).

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace wonder {

/// Malformed user input: bad Dynkin string, bad index list.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Well-formed input outside the mathematical domain (rank cap, non-faithful I).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

inline constexpr std::uint64_t kMaxWeylOrder = 1'000'000;

struct DynkinComponent {
  char family = 'A';
  int rank = 1;

  friend bool operator==(const DynkinComponent&, const DynkinComponent&) = default;
};

struct DynkinType {
  std::vector<DynkinComponent> components;

  int rank() const;
  std::string to_string() const;
  /// Order of the Weyl group, from the classical order formulas.
  std::uint64_t weyl_order() const;

  friend bool operator==(const DynkinType&, const DynkinType&) = default;
};

/// Parses TYPE := COMP ("x" COMP)*, COMP := LETTER DIGITS.
DynkinType parse_dynkin(std::string_view text);

/// A set of simple roots, stored as a bitmask over 0-based indices.
class SimpleSubset {
 public:
  constexpr SimpleSubset() = default;
  constexpr explicit SimpleSubset(std::uint32_t mask) : mask_(mask) {}

  static SimpleSubset full(int rank) { return SimpleSubset(rank >= 32 ? ~0u : ((1u << rank) - 1u)); }
  /// From 1-based indices; throws UsageError when an index is outside 1..rank.
  static SimpleSubset from_one_based(const std::vector<int>& indices, int rank);
  /// Parses "1,3,4" (1-based); the empty string is the empty set.
  static SimpleSubset parse(std::string_view text, int rank);

  constexpr std::uint32_t mask() const { return mask_; }
  constexpr bool contains(int i) const { return (mask_ >> i) & 1u; }
  constexpr bool empty() const { return mask_ == 0; }
  int size() const;
  bool subset_of(SimpleSubset other) const { return (mask_ & ~other.mask_) == 0; }
  SimpleSubset complement(int rank) const { return SimpleSubset(full(rank).mask_ & ~mask_); }
  SimpleSubset with(int i) const { return SimpleSubset(mask_ | (1u << i)); }

  std::vector<int> indices() const;            // 0-based, ascending
  std::vector<int> one_based() const;          // 1-based, ascending

  friend constexpr bool operator==(SimpleSubset, SimpleSubset) = default;

 private:
  std::uint32_t mask_ = 0;
};

/// Exact integer coordinates in the simple-root basis.
using Root = std::vector<int>;

class RootSystem {
 public:
  /// Throws DomainError when the Weyl group order exceeds `max_weyl_order`
  /// (which itself may not exceed kMaxWeylOrder).
  explicit RootSystem(DynkinType type, std::uint64_t max_weyl_order = kMaxWeylOrder);

  const DynkinType& type() const { return type_; }
  int rank() const { return rank_; }
  int cartan(int i, int j) const { return cartan_[i * rank_ + j]; }

  /// All roots: positives sorted by height then coordinates, then the
  /// negatives in the same order.
  int size() const { return static_cast<int>(roots_.size()); }
  int num_positive() const { return num_positive_; }
  const Root& root(int index) const { return roots_[index]; }
  bool is_positive(int index) const { return index < num_positive_; }
  int negate(int index) const {
    return index < num_positive_ ? index + num_positive_ : index - num_positive_;
  }
  int simple_root(int i) const { return simple_index_[i]; }
  int height(int index) const;

  /// Index of `r`, or -1 if `r` is not a root.
  int find(const Root& r) const;

  /// s_i applied to root `index` (table lookup).
  int reflect(int i, int index) const { return reflection_[i * size() + index]; }
  /// s_i applied to an arbitrary root vector; throws std::invalid_argument if
  /// `r` is not a root.
  Root reflect(int i, const Root& r) const;

  /// Indices of the roots whose support lies in `subset`.
  std::vector<int> sub_system(SimpleSubset subset) const;
  bool in_sub_system(int index, SimpleSubset subset) const;
  SimpleSubset support(int index) const;

  /// <lambda_J, beta>: coefficient sum of beta over the simple roots outside J.
  int lambda_pairing(SimpleSubset J, int index) const;

  /// True iff no connected component of the Dynkin diagram lies inside I.
  bool is_faithful(SimpleSubset I) const;
  /// Masks of the connected components of the Dynkin diagram.
  std::vector<SimpleSubset> diagram_components() const;

  /// Type of the Dynkin sub-diagram on `subset`, e.g. "A1xA1"; "" when empty.
  std::string subdiagram_type(SimpleSubset subset) const;

 private:
  DynkinType type_;
  int rank_ = 0;
  std::vector<int> cartan_;
  std::vector<Root> roots_;
  int num_positive_ = 0;
  std::vector<int> simple_index_;
  std::vector<int> reflection_;
  std::vector<std::uint32_t> support_;
  std::map<Root, int> lookup_;
};

}  // namespace wonder
