#include "wonder/sweep.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "wonder/degen.hpp"

namespace wonder {

namespace {

constexpr std::size_t kMaxCounterexamples = 5;

std::string subset_text(SimpleSubset s) {
  std::string out = "{";
  for (int i : s.one_based()) out += (out.size() > 1 ? "," : "") + std::to_string(i);
  return out + "}";
}

std::string word_text(const WeylGroup& g, ElementId w) {
  std::string out = "[";
  for (int i : g.reduced_word(w)) out += (out.size() > 1 ? "," : "") + std::to_string(i + 1);
  return out + "]";
}

class Tally {
 public:
  explicit Tally(std::vector<CheckResult>& checks) : checks_(checks) {}

  void record(const std::string& name, bool ok, const std::string& detail) {
    auto& c = get(name);
    if (ok) {
      ++c.passed;
    } else {
      ++c.failed;
      if (c.counterexamples.size() < kMaxCounterexamples) c.counterexamples.push_back(detail);
    }
  }

 private:
  CheckResult& get(const std::string& name) {
    for (auto& c : checks_)
      if (c.name == name) return c;
    checks_.push_back({name, 0, 0, {}});
    return checks_.back();
  }
  std::vector<CheckResult>& checks_;
};

int double_coset_count(const WeylGroup& g, SimpleSubset J, SimpleSubset I) {
  std::vector<char> seen(g.size(), 0);
  int count = 0;
  for (std::size_t k = 0; k < g.size(); ++k) {
    if (seen[k]) continue;
    ++count;
    for (ElementId x : double_coset(g, J, static_cast<ElementId>(k), I)) seen[x] = 1;
  }
  return count;
}

}  // namespace

long long SweepReport::failures() const {
  long long total = 0;
  for (const auto& c : checks) total += c.failed;
  return total;
}

SweepReport sweep(const WeylGroup& g) {
  const auto& rs = g.roots();
  const int rank = rs.rank();
  const auto full = SimpleSubset::full(rank);
  SweepReport report;
  report.type = rs.type().to_string();
  report.subsets_per_I = 1 << rank;
  Tally tally(report.checks);

  for (std::uint32_t im = 0; im < (1u << rank); ++im) {
    const SimpleSubset I(im);
    if (!rs.is_faithful(I)) continue;
    ++report.faithful_subsets;
    const QuotientData q(g, I);
    const std::string tagI = "I=" + subset_text(I);

    std::map<std::uint32_t, int> counts;
    for (std::uint32_t jm = 0; jm < (1u << rank); ++jm) {
      const SimpleSubset J(jm);
      const std::string tag = tagI + " J=" + subset_text(J);
      std::vector<FiberComponent> comps;
      try {
        comps = fiber_components(g, I, J);
      } catch (const std::logic_error& e) {
        tally.record("equidimensionality", false, tag + ": " + e.what());
        continue;
      }
      for (const auto& c : comps)
        tally.record("equidimensionality", c.total_dim == q.dim_X(),
                     tag + " w=" + word_text(g, c.w) + " total=" + std::to_string(c.total_dim) +
                         " dim X=" + std::to_string(q.dim_X()));
      const int count = static_cast<int>(comps.size());
      counts[jm] = count;
      tally.record("reducibility", (count == 1) == (J == full), tag + " count=" + std::to_string(count));
      const int oracle = double_coset_count(g, J, I);
      tally.record("double-coset count", count == oracle,
                   tag + " count=" + std::to_string(count) + " cosets=" + std::to_string(oracle));

      if (J.empty()) {
        std::vector<SchubertPair> pairs;
        for (const auto& c : comps) pairs.push_back({c.left, c.w});
        tally.record("closed fiber", pairs == closed_fiber(g, I), tag);
      }
    }
    for (const auto& [jm, count] : counts)
      for (int i = 0; i < rank; ++i) {
        const SimpleSubset J(jm);
        if (J.contains(i) || !counts.count(J.with(i).mask())) continue;
        tally.record("monotone refinement", count >= counts[J.with(i).mask()],
                     tagI + " J=" + subset_text(J) + " vs " + subset_text(J.with(i)));
      }

    for (ElementId w : q.reps()) {
      const std::string tag = tagI + " w=" + word_text(g, w);
      const auto profile = fixed_point_profile(g, I, w);
      tally.record("fixed-point uniqueness",
                   profile.size() == 1 && profile[0] == std::make_pair(w, w),
                   tag + " profile size=" + std::to_string(profile.size()));
      bool identity_ok = true;
      std::vector<int> ws;
      try {
        ws = weight_set(g, I, w);
      } catch (const std::logic_error&) {
        identity_ok = false;
      }
      tally.record("weight-set identity", identity_ok && static_cast<int>(ws.size()) == q.dim_X(),
                   tag + " |Phi_w|=" + std::to_string(ws.size()));
    }
    tally.record("weight-set coverage", uncovered_simple_roots(g, I).empty(), tagI);
    tally.record("common unipotent roots", common_unipotent_roots(g, I).empty(), tagI);
  }
  return report;
}

}  // namespace wonder
