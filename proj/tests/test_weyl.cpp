#include <doctest.h>

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "oracles.hpp"
#include "wonder/projgor.hpp"
#include "wonder/weyl.hpp"

using namespace wonder;
using oracle::word;

namespace {

WeylGroup group_of(const char* t) { return WeylGroup(RootSystem(parse_dynkin(t))); }

std::vector<int> one_based(std::vector<int> w) {
  for (int& i : w) ++i;
  return w;
}

}  // namespace

TEST_CASE("generate: group orders") {
  CHECK(group_of("A1").size() == 2);
  CHECK(group_of("A2").size() == 6);
  CHECK(group_of("B3").size() == 48);
  CHECK(group_of("D4").size() == 192);
  CHECK(group_of("G2").size() == 12);
  CHECK(group_of("F4").size() == 1152);
  CHECK(group_of("E6").size() == 51840);
  CHECK(group_of("B2xA1").size() == 16);
}

TEST_CASE("multiply, inverse, act examples") {
  const auto g = group_of("A2");
  const auto& rs = g.roots();
  for (std::size_t k = 0; k < g.size(); ++k) {
    const auto w = static_cast<ElementId>(k);
    CHECK(g.multiply(WeylGroup::identity(), w) == w);
    CHECK(g.multiply(w, WeylGroup::identity()) == w);
    CHECK(g.multiply(w, g.inverse(w)) == WeylGroup::identity());
  }
  CHECK(g.act(word(g, {1}), rs.find({0, 1})) == rs.find({1, 1}));
  CHECK(g.inverse(word(g, {1, 2})) == word(g, {2, 1}));
}

TEST_CASE("group axioms on permutations") {
  for (const char* t : {"A3", "B2xA1", "G2"}) {
    const auto g = group_of(t);
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> pick(0, static_cast<int>(g.size()) - 1);
    for (int trial = 0; trial < 300; ++trial) {
      const ElementId u = pick(rng), v = pick(rng), w = pick(rng);
      CHECK(g.multiply(g.multiply(u, v), w) == g.multiply(u, g.multiply(v, w)));
      const ElementId uv = g.multiply(u, v);
      for (int r = 0; r < g.roots().size(); ++r) CHECK(g.act(uv, r) == g.act(u, g.act(v, r)));
    }
  }
}

TEST_CASE("longest_in examples and exhaustive oracle") {
  const auto g = group_of("A2");
  CHECK(g.longest_in(SimpleSubset{}) == WeylGroup::identity());
  const ElementId w0 = g.longest_in(SimpleSubset::full(2));
  CHECK(w0 == g.longest());
  CHECK(g.length(w0) == 3);
  CHECK(one_based(g.reduced_word(w0)) == std::vector<int>{1, 2, 1});
  CHECK(g.longest_in(SimpleSubset(0b01)) == word(g, {1}));

  for (const char* t : {"A3", "B3", "G2", "A2xA1", "D4"}) {
    const auto h = group_of(t);
    for (std::uint32_t m = 0; m < (1u << h.rank()); ++m)
      CHECK(h.longest_in(SimpleSubset(m)) == oracle::longest_by_search(h, SimpleSubset(m)));
  }
}

TEST_CASE("reduced_word examples and lex-least oracle") {
  const auto g = group_of("A2");
  CHECK(g.reduced_word(WeylGroup::identity()).empty());
  CHECK(one_based(g.reduced_word(word(g, {1}))) == std::vector<int>{1});
  CHECK(one_based(g.reduced_word(g.longest())) == std::vector<int>{1, 2, 1});

  for (const char* t : {"A3", "B3", "C3", "G2", "A1xA1xA1", "D4"}) {
    const auto h = group_of(t);
    for (std::size_t k = 0; k < h.size(); ++k) {
      const auto w = static_cast<ElementId>(k);
      const auto rw = h.reduced_word(w);
      CHECK(static_cast<int>(rw.size()) == h.length(w));
      CHECK(h.from_word(rw) == w);
      CHECK(rw == oracle::lex_least_reduced_word(h, w));
    }
  }
}

TEST_CASE("BFS ids: by length, then by least reduced word") {
  for (const char* t : {"A3", "B3", "G2", "F4"}) {
    const auto g = group_of(t);
    for (std::size_t k = 1; k < g.size(); ++k) {
      const auto a = static_cast<ElementId>(k - 1), b = static_cast<ElementId>(k);
      REQUIRE(g.length(a) <= g.length(b));
      if (g.length(a) == g.length(b)) CHECK(g.reduced_word(a) < g.reduced_word(b));
    }
  }
  // ids are reproducible
  const auto g1 = group_of("B3"), g2 = group_of("B3");
  for (std::size_t k = 0; k < g1.size(); ++k) {
    const auto w = static_cast<ElementId>(k);
    CHECK(std::ranges::equal(g1.perm(w), g2.perm(w)));
  }
}

TEST_CASE("length invariants") {
  for (const char* t : {"A4", "B3", "C3", "D4", "G2", "F4", "B2xA1"}) {
    const auto g = group_of(t);
    const auto& rs = g.roots();
    int maximal = 0;
    for (std::size_t k = 0; k < g.size(); ++k) {
      const auto w = static_cast<ElementId>(k);
      int inv = 0;
      for (int a = 0; a < rs.num_positive(); ++a)
        if (!rs.is_positive(g.act(w, a))) ++inv;
      CHECK(inv == g.length(w));
      CHECK(g.length(w) == g.length(g.inverse(w)));
      for (int r = 0; r < rs.size(); ++r) CHECK(g.act(w, rs.negate(r)) == rs.negate(g.act(w, r)));
      for (int i = 0; i < g.rank(); ++i) CHECK(std::abs(g.length(g.right_mul(w, i)) - g.length(w)) == 1);
      if (g.length(w) == rs.num_positive()) ++maximal;
    }
    CHECK(maximal == 1);
    CHECK(g.length(g.longest()) == rs.num_positive());
  }
}

TEST_CASE("longest element acts as -1 exactly where expected") {
  auto is_minus_one = [](const WeylGroup& g) {
    const auto& rs = g.roots();
    for (int r = 0; r < rs.size(); ++r)
      if (g.act(g.longest(), r) != rs.negate(r)) return false;
    return true;
  };
  for (const char* t : {"A1", "B2", "B3", "C3", "C4", "D4", "D6", "F4", "G2", "A1xA1", "B2xG2"}) {
    const auto g = group_of(t);
    CHECK_MESSAGE(is_minus_one(g), t);
    CHECK(g.multiply(g.longest(), g.longest()) == WeylGroup::identity());
  }
  for (const char* t : {"A2", "A3", "D5", "E6"}) CHECK_FALSE_MESSAGE(is_minus_one(group_of(t)), t);
}

TEST_CASE("type A is the symmetric group") {
  for (int n = 1; n <= 5; ++n) {
    const WeylGroup g(RootSystem(DynkinType{{{'A', n}}}));
    std::set<std::vector<int>> seen;
    for (std::size_t k = 0; k < g.size(); ++k) {
      const auto w = static_cast<ElementId>(k);
      const auto perm = oracle::type_a_permutation(g, w);
      seen.insert(perm);
      CHECK(oracle::inversions(perm) == g.length(w));
      for (int p = 1; p <= n + 1; ++p) CHECK(permutation_image(g, w, p) == perm[p - 1]);
    }
    std::size_t factorial = 1;
    for (int k = 2; k <= n + 1; ++k) factorial *= k;
    CHECK(seen.size() == factorial);
  }
}

TEST_CASE("bruhat_leq examples") {
  const auto g = group_of("A2");
  for (std::size_t k = 0; k < g.size(); ++k) {
    CHECK(g.bruhat_leq(WeylGroup::identity(), static_cast<ElementId>(k)));
    CHECK(g.bruhat_leq_subword(WeylGroup::identity(), static_cast<ElementId>(k)));
  }
  CHECK(g.bruhat_leq(word(g, {1}), word(g, {1, 2})));
  CHECK(g.bruhat_leq_subword(word(g, {1}), word(g, {1, 2})));
  CHECK_FALSE(g.bruhat_leq(word(g, {1}), word(g, {2})));
  CHECK_FALSE(g.bruhat_leq_subword(word(g, {1}), word(g, {2})));
}

TEST_CASE("bruhat order: subword, dense matrix and cover closure agree") {
  for (const char* t : {"A3", "B3", "G2", "A2xA1"}) {
    const auto g = group_of(t);
    REQUIRE(g.has_bruhat_matrix());
    const auto closure = oracle::bruhat_by_covers(g);
    for (std::size_t u = 0; u < g.size(); ++u)
      for (std::size_t w = 0; w < g.size(); ++w) {
        const bool expect = closure[w][u];
        CHECK(g.bruhat_leq_subword(static_cast<ElementId>(u), static_cast<ElementId>(w)) == expect);
        CHECK(g.bruhat_leq(static_cast<ElementId>(u), static_cast<ElementId>(w)) == expect);
      }
  }
}

TEST_CASE("bruhat order is a partial order") {
  const auto g = group_of("B3");
  const auto n = static_cast<ElementId>(g.size());
  for (ElementId u = 0; u < n; ++u) {
    CHECK(g.bruhat_leq(u, u));
    for (ElementId v = 0; v < n; ++v) {
      if (u != v && g.bruhat_leq(u, v)) CHECK_FALSE(g.bruhat_leq(v, u));
      if (!g.bruhat_leq(u, v)) continue;
      for (ElementId w = 0; w < n; ++w)
        if (g.bruhat_leq(v, w)) CHECK(g.bruhat_leq(u, w));
    }
  }
}

TEST_CASE("large groups answer Bruhat queries on demand") {
  const auto g = group_of("E6");
  CHECK_FALSE(g.has_bruhat_matrix());
  const auto small = group_of("A6");
  CHECK(small.has_bruhat_matrix());
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> pick(0, static_cast<int>(small.size()) - 1);
  for (int trial = 0; trial < 20000; ++trial) {
    const ElementId u = pick(rng), w = pick(rng);
    CHECK(small.bruhat_leq(u, w) == small.bruhat_leq_subword(u, w));
  }
  std::uniform_int_distribution<int> pick_e6(0, static_cast<int>(g.size()) - 1);
  for (int trial = 0; trial < 200; ++trial) {
    const ElementId w = pick_e6(rng);
    CHECK(g.bruhat_leq(WeylGroup::identity(), w));
    CHECK(g.bruhat_leq(w, g.longest()));
    CHECK(g.bruhat_leq(w, w));
    // u <= w whenever u is a prefix of a reduced word of w
    auto rw = g.reduced_word(w);
    if (rw.size() > 1) {
      rw.pop_back();
      CHECK(g.bruhat_leq(g.from_word(rw), w));
    }
  }
}

TEST_CASE("w_orbit_in_subsystem examples") {
  const auto a2 = group_of("A2");
  CHECK(a2.w_orbit_in_subsystem(0, SimpleSubset::full(2)));
  CHECK_FALSE(a2.w_orbit_in_subsystem(0, SimpleSubset(0b01)));
  CHECK(group_of("A1xA1").w_orbit_in_subsystem(0, SimpleSubset(0b01)));
}
