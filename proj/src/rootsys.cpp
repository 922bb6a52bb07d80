#include "wonder/rootsys.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <charconv>
#include <deque>
#include <numeric>
#include <set>
#include <sstream>

namespace wonder {

namespace {

bool admissible(char family, int rank) {
  switch (family) {
    case 'A': return rank >= 1;
    case 'B': return rank >= 2;
    case 'C': return rank >= 3;
    case 'D': return rank >= 4;
    case 'E': return rank >= 6 && rank <= 8;
    case 'F': return rank == 4;
    case 'G': return rank == 2;
    default: return false;
  }
}

// Saturating product; anything past 2^62 is "too big" for every caller.
std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
  constexpr std::uint64_t kSat = std::uint64_t{1} << 62;
  if (a != 0 && b > kSat / a) return kSat;
  return std::min(a * b, kSat);
}

std::uint64_t factorial(int n) {
  std::uint64_t f = 1;
  for (int k = 2; k <= n; ++k) f = sat_mul(f, static_cast<std::uint64_t>(k));
  return f;
}

std::uint64_t pow2(int n) {
  std::uint64_t p = 1;
  for (int k = 0; k < n; ++k) p = sat_mul(p, 2);
  return p;
}

std::uint64_t component_order(const DynkinComponent& c) {
  switch (c.family) {
    case 'A': return factorial(c.rank + 1);
    case 'B':
    case 'C': return sat_mul(pow2(c.rank), factorial(c.rank));
    case 'D': return sat_mul(pow2(c.rank - 1), factorial(c.rank));
    case 'E': return c.rank == 6 ? 51840 : c.rank == 7 ? 2903040 : 696729600;
    case 'F': return 1152;
    case 'G': return 12;
  }
  return 0;
}

// Bourbaki Cartan matrix of one irreducible component, written into the
// block starting at `offset` of a rank x rank matrix.
void fill_cartan(const DynkinComponent& c, int offset, int rank, std::vector<int>& m) {
  auto set = [&](int i, int j, int v) { m[(offset + i) * rank + offset + j] = v; };
  const int n = c.rank;
  for (int i = 0; i < n; ++i) set(i, i, 2);
  auto edge = [&](int i, int j) {
    set(i, j, -1);
    set(j, i, -1);
  };
  switch (c.family) {
    case 'A':
      for (int i = 0; i + 1 < n; ++i) edge(i, i + 1);
      break;
    case 'B':
      for (int i = 0; i + 1 < n; ++i) edge(i, i + 1);
      set(n - 1, n - 2, -2);  // alpha_n short
      break;
    case 'C':
      for (int i = 0; i + 1 < n; ++i) edge(i, i + 1);
      set(n - 2, n - 1, -2);  // alpha_n long
      break;
    case 'D':
      for (int i = 0; i + 2 < n; ++i) edge(i, i + 1);
      edge(n - 3, n - 1);
      break;
    case 'E':
      edge(0, 2);
      edge(1, 3);
      for (int i = 2; i + 1 < n; ++i) edge(i, i + 1);
      break;
    case 'F':
      edge(0, 1);
      edge(1, 2);
      edge(2, 3);
      set(2, 1, -2);  // alpha_3, alpha_4 short
      break;
    case 'G':
      set(0, 1, -3);  // alpha_1 short
      set(1, 0, -1);
      break;
  }
}

}  // namespace

int DynkinType::rank() const {
  int r = 0;
  for (const auto& c : components) r += c.rank;
  return r;
}

std::string DynkinType::to_string() const {
  std::string s;
  for (std::size_t k = 0; k < components.size(); ++k) {
    if (k) s += 'x';
    s += components[k].family;
    s += std::to_string(components[k].rank);
  }
  return s;
}

std::uint64_t DynkinType::weyl_order() const {
  std::uint64_t order = 1;
  for (const auto& c : components) order = sat_mul(order, component_order(c));
  return order;
}

DynkinType parse_dynkin(std::string_view text) {
  if (text.empty()) throw UsageError("empty Dynkin type");
  DynkinType t;
  std::size_t pos = 0;
  while (true) {
    if (pos >= text.size()) throw UsageError("Dynkin type '" + std::string(text) + "': missing component");
    const char letter = static_cast<char>(std::toupper(static_cast<unsigned char>(text[pos])));
    if (!std::isalpha(static_cast<unsigned char>(text[pos])))
      throw UsageError("Dynkin type '" + std::string(text) + "': expected a family letter");
    ++pos;
    const std::size_t digits = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (digits == pos) throw UsageError("Dynkin type '" + std::string(text) + "': expected a rank after '" + letter + "'");
    if (letter == 'H' || letter == 'I')
      throw UsageError(std::string("non-crystallographic family '") + letter + "' is not supported");
    if (std::string_view("ABCDEFG").find(letter) == std::string_view::npos)
      throw UsageError(std::string("unknown Dynkin family '") + letter + "'");
    int rank = 0;
    auto [ptr, ec] = std::from_chars(text.data() + digits, text.data() + pos, rank);
    if (ec != std::errc() || !admissible(letter, rank))
      throw UsageError("inadmissible rank for family " + std::string(1, letter) + ": '" +
                       std::string(text.substr(digits, pos - digits)) + "'");
    t.components.push_back({letter, rank});
    if (pos == text.size()) break;
    if (text[pos] != 'x' && text[pos] != 'X')
      throw UsageError("Dynkin type '" + std::string(text) + "': expected 'x' between components");
    ++pos;
  }
  return t;
}

SimpleSubset SimpleSubset::from_one_based(const std::vector<int>& indices, int rank) {
  std::uint32_t mask = 0;
  for (int i : indices) {
    if (i < 1 || i > rank)
      throw UsageError("simple-root index " + std::to_string(i) + " outside 1.." + std::to_string(rank));
    mask |= 1u << (i - 1);
  }
  return SimpleSubset(mask);
}

SimpleSubset SimpleSubset::parse(std::string_view text, int rank) {
  std::vector<int> indices;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find(',', pos);
    if (end == std::string_view::npos) end = text.size();
    const auto item = text.substr(pos, end - pos);
    int value = 0;
    auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
    if (item.empty() || ec != std::errc() || ptr != item.data() + item.size())
      throw UsageError("malformed index list '" + std::string(text) + "'");
    indices.push_back(value);
    pos = end + 1;
    if (end + 1 == text.size()) throw UsageError("malformed index list '" + std::string(text) + "'");
  }
  return from_one_based(indices, rank);
}

int SimpleSubset::size() const { return std::popcount(mask_); }

std::vector<int> SimpleSubset::indices() const {
  std::vector<int> out;
  for (int i = 0; i < 32; ++i)
    if (contains(i)) out.push_back(i);
  return out;
}

std::vector<int> SimpleSubset::one_based() const {
  auto out = indices();
  for (int& i : out) ++i;
  return out;
}

RootSystem::RootSystem(DynkinType type, std::uint64_t max_weyl_order) : type_(std::move(type)) {
  if (type_.components.empty()) throw UsageError("empty Dynkin type");
  max_weyl_order = std::min(max_weyl_order, kMaxWeylOrder);
  const auto order = type_.weyl_order();
  if (order > max_weyl_order)
    throw DomainError("rank cap exceeded: |W(" + type_.to_string() + ")| = " +
                      (order >= (std::uint64_t{1} << 62) ? std::string("overflow") : std::to_string(order)) +
                      " > " + std::to_string(max_weyl_order));
  rank_ = type_.rank();
  cartan_.assign(static_cast<std::size_t>(rank_ * rank_), 0);
  int offset = 0;
  for (const auto& c : type_.components) {
    fill_cartan(c, offset, rank_, cartan_);
    offset += c.rank;
  }

  auto apply = [&](int i, const Root& b) {
    int pairing = 0;
    for (int j = 0; j < rank_; ++j) pairing += cartan(i, j) * b[j];
    Root out = b;
    out[i] -= pairing;
    return out;
  };

  std::set<Root> seen;
  std::deque<Root> queue;
  for (int i = 0; i < rank_; ++i) {
    Root e(rank_, 0);
    e[i] = 1;
    seen.insert(e);
    queue.push_back(e);
  }
  while (!queue.empty()) {
    Root b = std::move(queue.front());
    queue.pop_front();
    for (int i = 0; i < rank_; ++i) {
      Root image = apply(i, b);
      if (seen.insert(image).second) queue.push_back(std::move(image));
    }
  }

  std::vector<Root> positives;
  for (const auto& r : seen)
    if (std::all_of(r.begin(), r.end(), [](int c) { return c >= 0; })) positives.push_back(r);
  // height ascending, then descending lexicographic so that alpha_1..alpha_r
  // occupy indices 0..r-1
  std::sort(positives.begin(), positives.end(), [](const Root& a, const Root& b) {
    const int ha = std::accumulate(a.begin(), a.end(), 0);
    const int hb = std::accumulate(b.begin(), b.end(), 0);
    if (ha != hb) return ha < hb;
    return a > b;
  });
  if (2 * positives.size() != seen.size()) throw std::logic_error("root closure is not symmetric");
  if (positives.size() > 127) throw DomainError("root system too large for the permutation encoding");

  num_positive_ = static_cast<int>(positives.size());
  roots_ = positives;
  for (const auto& r : positives) {
    Root neg = r;
    for (int& c : neg) c = -c;
    roots_.push_back(std::move(neg));
  }
  for (int k = 0; k < size(); ++k) lookup_.emplace(roots_[k], k);

  simple_index_.resize(rank_);
  for (int i = 0; i < rank_; ++i) {
    Root e(rank_, 0);
    e[i] = 1;
    simple_index_[i] = find(e);
  }

  reflection_.resize(static_cast<std::size_t>(rank_ * size()));
  for (int i = 0; i < rank_; ++i)
    for (int k = 0; k < size(); ++k) {
      const int image = find(apply(i, roots_[k]));
      if (image < 0) throw std::logic_error("root system not closed under reflections");
      reflection_[i * size() + k] = image;
    }

  support_.resize(size());
  for (int k = 0; k < size(); ++k) {
    std::uint32_t m = 0;
    for (int i = 0; i < rank_; ++i)
      if (roots_[k][i] != 0) m |= 1u << i;
    support_[k] = m;
  }
}

int RootSystem::height(int index) const {
  const auto& r = roots_[index];
  return std::accumulate(r.begin(), r.end(), 0);
}

int RootSystem::find(const Root& r) const {
  auto it = lookup_.find(r);
  return it == lookup_.end() ? -1 : it->second;
}

Root RootSystem::reflect(int i, const Root& r) const {
  if (i < 0 || i >= rank_) throw std::invalid_argument("simple index out of range");
  const int k = find(r);
  if (k < 0) throw std::invalid_argument("not a root");
  return roots_[reflect(i, k)];
}

std::vector<int> RootSystem::sub_system(SimpleSubset subset) const {
  std::vector<int> out;
  for (int k = 0; k < size(); ++k)
    if (in_sub_system(k, subset)) out.push_back(k);
  return out;
}

bool RootSystem::in_sub_system(int index, SimpleSubset subset) const {
  return (support_[index] & ~subset.mask()) == 0;
}

SimpleSubset RootSystem::support(int index) const { return SimpleSubset(support_[index]); }

int RootSystem::lambda_pairing(SimpleSubset J, int index) const {
  int sum = 0;
  for (int i = 0; i < rank_; ++i)
    if (!J.contains(i)) sum += roots_[index][i];
  return sum;
}

std::vector<SimpleSubset> RootSystem::diagram_components() const {
  std::vector<SimpleSubset> out;
  int offset = 0;
  for (const auto& c : type_.components) {
    std::uint32_t m = 0;
    for (int i = 0; i < c.rank; ++i) m |= 1u << (offset + i);
    out.emplace_back(m);
    offset += c.rank;
  }
  return out;
}

bool RootSystem::is_faithful(SimpleSubset I) const {
  for (auto comp : diagram_components())
    if (comp.subset_of(I)) return false;
  return true;
}

std::string RootSystem::subdiagram_type(SimpleSubset subset) const {
  auto adjacent = [&](int i, int j) { return i != j && cartan(i, j) != 0; };
  std::vector<std::string> names;
  std::uint32_t remaining = subset.mask();
  while (remaining) {
    // connected component containing the lowest remaining node
    std::vector<int> nodes;
    std::vector<int> stack{std::countr_zero(remaining)};
    remaining &= ~(1u << stack.back());
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      nodes.push_back(v);
      for (int u = 0; u < rank_; ++u)
        if (((remaining >> u) & 1u) && adjacent(u, v)) {
          remaining &= ~(1u << u);
          stack.push_back(u);
        }
    }
    const int n = static_cast<int>(nodes.size());
    std::map<int, int> degree;
    int double_i = -1, double_j = -1;
    bool triple = false;
    for (int a : nodes)
      for (int b : nodes)
        if (adjacent(a, b)) {
          ++degree[a];
          const int mult = cartan(a, b) * cartan(b, a);
          if (mult == 3) triple = true;
          if (mult == 2 && a < b) double_i = a, double_j = b;
        }
    std::string name;
    if (n == 1) {
      name = "A1";
    } else if (triple) {
      name = "G2";
    } else if (double_i >= 0) {
      if (n == 2) {
        name = "B2";
      } else if (degree[double_i] == 2 && degree[double_j] == 2) {
        name = "F4";
      } else {
        // end node of the double bond; short end means type B
        const int end = degree[double_i] == 1 ? double_i : double_j;
        const int inner = end == double_i ? double_j : double_i;
        name = std::string(cartan(end, inner) == -2 ? "B" : "C") + std::to_string(n);
      }
    } else {
      int branch = -1;
      for (int a : nodes)
        if (degree[a] == 3) branch = a;
      if (branch < 0) {
        name = "A" + std::to_string(n);
      } else {
        std::vector<int> arms;
        for (int start : nodes) {
          if (!adjacent(start, branch)) continue;
          int len = 0, prev = branch, cur = start;
          while (cur >= 0) {
            ++len;
            int next = -1;
            for (int u : nodes)
              if (u != prev && u != cur && adjacent(u, cur)) next = u;
            prev = cur;
            cur = next;
          }
          arms.push_back(len);
        }
        std::sort(arms.begin(), arms.end());
        if (arms[0] == 1 && arms[1] == 1)
          name = "D" + std::to_string(n);
        else
          name = "E" + std::to_string(n);
      }
    }
    names.push_back(name);
  }
  std::string out;
  for (std::size_t k = 0; k < names.size(); ++k) out += (k ? "x" : "") + names[k];
  return out;
}

}  // namespace wonder
