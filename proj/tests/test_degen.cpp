#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

#include "oracles.hpp"
#include "wonder/degen.hpp"
#include "wonder/sweep.hpp"

using namespace wonder;
using oracle::word;

namespace {

WeylGroup group_of(const char* t) { return WeylGroup(RootSystem(parse_dynkin(t))); }

const char* kSweepTypes[] = {"A1", "A2", "A3", "A4", "B2", "B3", "C3", "D4", "G2"};

}  // namespace

TEST_CASE("fiber_components examples") {
  const auto a1 = group_of("A1");
  const auto p1 = fiber_components(a1, SimpleSubset{}, SimpleSubset{});
  REQUIRE(p1.size() == 2);
  CHECK(p1[0] == FiberComponent{WeylGroup::identity(), WeylGroup::identity(), 0, 1, 0, 1});
  CHECK(p1[1] == FiberComponent{word(a1, {1}), word(a1, {1}), 0, 0, 1, 1});

  const auto a2 = group_of("A2");
  const auto ex = fiber_components(a2, SimpleSubset(0b10), SimpleSubset(0b01));
  REQUIRE(ex.size() == 2);
  for (const auto& c : ex) CHECK(c.total_dim == 2);

  for (const char* t : kSweepTypes) {
    const auto g = group_of(t);
    const auto full = SimpleSubset::full(g.rank());
    for (std::uint32_t m = 0; m < (1u << g.rank()); ++m) {
      const SimpleSubset I(m);
      if (!g.roots().is_faithful(I)) continue;
      const QuotientData q(g, I);
      const auto open = fiber_components(g, I, full);
      REQUIRE(open.size() == 1);
      CHECK(open[0].w == WeylGroup::identity());
      CHECK(open[0].levi_dim == q.dim_X());
      CHECK(open[0].xminus_dim == 0);
      CHECK(open[0].x_dim == 0);
    }
  }
}

TEST_CASE("component_count examples") {
  const auto a2 = group_of("A2");
  CHECK(component_count(a2, SimpleSubset(0b10), SimpleSubset{}) == 3);
  CHECK(component_count(a2, SimpleSubset(0b10), SimpleSubset(0b01)) == 2);
  CHECK(component_count(group_of("A3"), SimpleSubset(0b110), SimpleSubset::full(3)) == 1);
}

TEST_CASE("non-faithful I is refused") {
  const auto g = group_of("A1xA1");
  CHECK_THROWS_AS(fiber_components(g, SimpleSubset(0b01), SimpleSubset(0b01)), DomainError);
  CHECK_THROWS_AS(component_count(g, SimpleSubset(0b10), SimpleSubset{}), DomainError);
  CHECK_THROWS_AS(closed_fiber(group_of("A2"), SimpleSubset::full(2)), DomainError);
}

TEST_CASE("closed_fiber examples") {
  const auto a1 = group_of("A1");
  CHECK(closed_fiber(a1, SimpleSubset{}) ==
        std::vector<SchubertPair>{{WeylGroup::identity(), WeylGroup::identity()}, {word(a1, {1}), word(a1, {1})}});

  const auto a2 = group_of("A2");
  const QuotientData q(a2, SimpleSubset(0b10));
  std::multiset<std::pair<int, int>> dims;
  for (const auto& p : closed_fiber(a2, SimpleSubset(0b10)))
    dims.insert({q.cell_dims(p.xminus).opposite, q.cell_dims(p.x).cell});
  CHECK(dims == std::multiset<std::pair<int, int>>{{2, 0}, {1, 1}, {0, 2}});

  const QuotientData flags(a2, SimpleSubset{});
  const auto pairs = closed_fiber(a2, SimpleSubset{});
  CHECK(pairs.size() == 6);
  for (const auto& p : pairs) CHECK(flags.cell_dims(p.xminus).opposite + flags.cell_dims(p.x).cell == 3);
}

TEST_CASE("fixed_point_profile examples") {
  const auto a1 = group_of("A1");
  using Pairs = std::vector<std::pair<ElementId, ElementId>>;
  CHECK(fixed_point_profile(a1, SimpleSubset{}, WeylGroup::identity()) ==
        Pairs{{WeylGroup::identity(), WeylGroup::identity()}});
  const auto a2 = group_of("A2");
  const ElementId s1 = word(a2, {1}), s1s2 = word(a2, {1, 2});
  CHECK(fixed_point_profile(a2, SimpleSubset(0b10), s1) == Pairs{{s1, s1}});
  CHECK(fixed_point_profile(a2, SimpleSubset{}, s1s2) == Pairs{{s1s2, s1s2}});
  CHECK_THROWS_AS(fixed_point_profile(a2, SimpleSubset(0b10), s1s2), std::invalid_argument);
}

TEST_CASE("weight_set examples") {
  const auto a2 = group_of("A2");
  const auto& rs = a2.roots();
  const auto all_negative = weight_set(a2, SimpleSubset{}, WeylGroup::identity());
  CHECK(all_negative.size() == 3);
  for (int r : all_negative) CHECK_FALSE(rs.is_positive(r));

  auto ws = weight_set(a2, SimpleSubset(0b10), WeylGroup::identity());
  std::sort(ws.begin(), ws.end());
  std::vector<int> expect{rs.find({-1, 0}), rs.find({-1, -1})};
  std::sort(expect.begin(), expect.end());
  CHECK(ws == expect);

  std::set<int> covered;
  const QuotientData q(a2, SimpleSubset(0b10));
  for (ElementId w : q.reps())
    for (int r : weight_set(a2, SimpleSubset(0b10), w)) covered.insert(r);
  for (int i = 0; i < 2; ++i) CHECK(covered.count(rs.negate(rs.simple_root(i))) == 1);
}

TEST_CASE("full_flag_fiber examples") {
  CHECK(full_flag_fiber(group_of("A1"), SimpleSubset{}).size() == 2);
  const auto a2 = group_of("A2");
  CHECK(full_flag_fiber(a2, SimpleSubset::full(2)).size() == 1);
  const auto comps = full_flag_fiber(a2, SimpleSubset(0b01));
  CHECK(comps.size() == 3);
  for (const auto& c : comps) {
    CHECK(c.total_dim == 3);
    CHECK(c.levi_dim == 1);
  }
}

TEST_CASE("degeneration invariants over the sweep types") {
  for (const char* t : kSweepTypes) {
    const auto g = group_of(t);
    const auto& rs = g.roots();
    const auto full = SimpleSubset::full(g.rank());
    const auto subsets = 1u << g.rank();
    for (std::uint32_t mi = 0; mi < subsets; ++mi) {
      const SimpleSubset I(mi);
      if (!rs.is_faithful(I)) continue;
      const QuotientData q(g, I);
      std::map<std::uint32_t, int> counts;
      for (std::uint32_t mj = 0; mj < subsets; ++mj) {
        const SimpleSubset J(mj);
        const auto comps = fiber_components(g, I, J);
        counts[mj] = static_cast<int>(comps.size());
        CHECK(comps.size() == oracle::double_cosets(g, J, I).size());
        CHECK((comps.size() == 1) == (J == full));
        for (const auto& c : comps) {
          CHECK(c.total_dim == q.dim_X());
          CHECK(c.total_dim == oracle::component_total_dim(g, I, J, c.w));
          CHECK(c.total_dim == c.levi_dim + c.xminus_dim + c.x_dim);
          CHECK(q.is_rep(c.w));
          CHECK(q.is_rep(c.left));
        }
        if (J.empty()) {
          std::vector<SchubertPair> pairs;
          for (const auto& c : comps) pairs.push_back({c.left, c.w});
          CHECK(pairs == closed_fiber(g, I));
        }
      }
      for (const auto& [a, ca] : counts)
        for (const auto& [b, cb] : counts)
          if (SimpleSubset(a).subset_of(SimpleSubset(b))) CHECK(ca >= cb);

      for (ElementId w : q.reps()) {
        using Pairs = std::vector<std::pair<ElementId, ElementId>>;
        CHECK(fixed_point_profile(g, I, w) == Pairs{{w, w}});
        const auto ws = weight_set(g, I, w);
        CHECK(static_cast<int>(ws.size()) == q.dim_X());
        for (int r : ws) {
          CHECK_FALSE(rs.is_positive(r));
          CHECK_FALSE(rs.in_sub_system(g.act(g.inverse(w), r), I));
        }
      }
    }
  }
}

TEST_CASE("full flag: every component has Levi part B_J") {
  for (const char* t : kSweepTypes) {
    const auto g = group_of(t);
    for (std::uint32_t m = 0; m < (1u << g.rank()); ++m) {
      const SimpleSubset J(m);
      const auto comps = full_flag_fiber(g, J);
      CHECK(comps.size() == oracle::double_coset_min_reps(g, J, SimpleSubset{}).size());
    }
  }
}

TEST_CASE("sweep reports no failures") {
  const auto a2 = sweep(group_of("A2"));
  CHECK(a2.faithful_subsets == 3);
  CHECK(a2.subsets_per_I == 4);
  CHECK(a2.failures() == 0);
  CHECK_FALSE(a2.checks.empty());
  for (const auto& c : a2.checks) CHECK_MESSAGE(c.passed > 0, c.name);
  CHECK(sweep(group_of("G2")).failures() == 0);
  CHECK(sweep(group_of("B2xA1")).failures() == 0);
}
