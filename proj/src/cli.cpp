#include "wonder/cli.hpp"

#include <CLI11.hpp>
#include <charconv>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <json.hpp>
#include <limits>
#include <optional>
#include <sstream>

#include "wonder/cosets.hpp"
#include "wonder/degen.hpp"
#include "wonder/projgor.hpp"
#include "wonder/sweep.hpp"
#include "wonder/wonderful.hpp"

namespace wonder::cli {

namespace {

using Json = nlohmann::ordered_json;

struct Options {
  std::string verb;
  std::string type;
  std::optional<std::string> I;
  std::optional<std::string> J;
  bool json = false;
  std::string variant = "paper";
  std::string out_path;
  std::uint64_t cap = kMaxWeylOrder;
};

Json word_json(const WeylGroup& g, ElementId w) {
  Json a = Json::array();
  for (int i : g.reduced_word(w)) a.push_back(i + 1);
  return a;
}

std::string word_text(const WeylGroup& g, ElementId w) {
  const auto word = g.reduced_word(w);
  if (word.empty()) return "e";
  std::string s;
  for (int i : word) s += "s" + std::to_string(i + 1);
  return s;
}

std::string subset_text(SimpleSubset s) {
  std::string out = "{";
  for (int i : s.one_based()) out += (out.size() > 1 ? "," : "") + std::to_string(i);
  return out + "}";
}

std::string root_text(const Root& r) {
  std::string s = "(";
  for (std::size_t k = 0; k < r.size(); ++k) s += (k ? "," : "") + std::to_string(r[k]);
  return s + ")";
}

Json rational_json(const Rational& q) {
  const BigInt num = boost::multiprecision::numerator(q);
  const BigInt den = boost::multiprecision::denominator(q);
  auto as_json = [](const BigInt& v) -> Json {
    if (v >= std::numeric_limits<long long>::min() && v <= std::numeric_limits<long long>::max())
      return static_cast<long long>(v);
    return v.str();
  };
  return Json::array({as_json(num), as_json(den)});
}

SimpleSubset require_subset(const std::optional<std::string>& text, const char* name, int rank,
                            const std::string& verb) {
  if (!text) throw UsageError("verb '" + verb + "' requires --" + name);
  return SimpleSubset::parse(*text, rank);
}

RootSystem make_roots(const Options& o) { return RootSystem(parse_dynkin(o.type), o.cap); }

Json components_json(const WeylGroup& g, const std::vector<FiberComponent>& comps) {
  Json arr = Json::array();
  for (const auto& c : comps)
    arr.push_back({{"w", word_json(g, c.w)},
                   {"left", word_json(g, c.left)},
                   {"dims", {{"levi", c.levi_dim}, {"xminus", c.xminus_dim}, {"x", c.x_dim}, {"total", c.total_dim}}}});
  return arr;
}

void components_text(std::ostream& os, const WeylGroup& g, const std::vector<FiberComponent>& comps) {
  os << std::left << std::setw(4) << "#" << std::setw(18) << "w" << std::setw(18) << "left (X^-)" << std::right
     << std::setw(6) << "levi" << std::setw(8) << "xminus" << std::setw(6) << "x" << std::setw(7) << "total"
     << "\n";
  int k = 0;
  for (const auto& c : comps)
    os << std::left << std::setw(4) << k++ << std::setw(18) << word_text(g, c.w) << std::setw(18)
       << word_text(g, c.left) << std::right << std::setw(6) << c.levi_dim << std::setw(8) << c.xminus_dim
       << std::setw(6) << c.x_dim << std::setw(7) << c.total_dim << "\n";
}

void cmd_roots(const Options& o, std::ostream& os) {
  const auto rs = make_roots(o);
  if (o.json) {
    Json cartan = Json::array();
    for (int i = 0; i < rs.rank(); ++i) {
      Json row = Json::array();
      for (int j = 0; j < rs.rank(); ++j) row.push_back(rs.cartan(i, j));
      cartan.push_back(row);
    }
    Json roots = Json::array();
    for (int k = 0; k < rs.size(); ++k) roots.push_back(rs.root(k));
    Json doc = {{"type", rs.type().to_string()},
                {"rank", rs.rank()},
                {"cartan", cartan},
                {"num_roots", rs.size()},
                {"num_positive", rs.num_positive()},
                {"roots", roots}};
    os << doc.dump(2) << "\n";
    return;
  }
  os << "type " << rs.type().to_string() << ", rank " << rs.rank() << ", " << rs.size() << " roots ("
     << rs.num_positive() << " positive)\n";
  os << "cartan:\n";
  for (int i = 0; i < rs.rank(); ++i) {
    os << " ";
    for (int j = 0; j < rs.rank(); ++j) os << std::setw(3) << rs.cartan(i, j);
    os << "\n";
  }
  os << "positive roots (simple-root coordinates):\n";
  for (int k = 0; k < rs.num_positive(); ++k)
    os << std::setw(4) << k << "  " << root_text(rs.root(k)) << "  height " << rs.height(k) << "\n";
}

void cmd_weyl(const Options& o, std::ostream& os) {
  const WeylGroup g(make_roots(o));
  std::vector<long long> by_length(g.length(g.longest()) + 1, 0);
  for (std::size_t w = 0; w < g.size(); ++w) ++by_length[g.length(static_cast<ElementId>(w))];
  std::optional<SimpleSubset> I;
  if (o.I) I = SimpleSubset::parse(*o.I, g.rank());
  if (o.json) {
    Json doc = {{"type", g.roots().type().to_string()},
                {"order", g.size()},
                {"num_reflections", g.roots().num_positive()},
                {"longest", {{"word", word_json(g, g.longest())}, {"length", g.length(g.longest())}}},
                {"length_distribution", by_length}};
    if (I) {
      const ElementId wI = g.longest_in(*I);
      doc["I"] = I->one_based();
      doc["longest_in_I"] = {{"word", word_json(g, wI)}, {"length", g.length(wI)}};
    }
    os << doc.dump(2) << "\n";
    return;
  }
  os << "W(" << g.roots().type().to_string() << "): order " << g.size() << ", " << g.roots().num_positive()
     << " reflections\n";
  os << "longest element: " << word_text(g, g.longest()) << " (length " << g.length(g.longest()) << ")\n";
  os << "elements by length:";
  for (auto c : by_length) os << " " << c;
  os << "\n";
  if (I) {
    const ElementId wI = g.longest_in(*I);
    os << "longest in W_I, I=" << subset_text(*I) << ": " << word_text(g, wI) << " (length " << g.length(wI)
       << ")\n";
  }
}

void cmd_cosets(const Options& o, std::ostream& os) {
  const WeylGroup g(make_roots(o));
  const auto I = require_subset(o.I, "I", g.rank(), o.verb);
  const QuotientData q(g, I);
  if (o.json) {
    Json reps = Json::array(), dims = Json::array();
    for (ElementId w : q.reps()) {
      reps.push_back(word_json(g, w));
      const auto d = q.cell_dims(w);
      dims.push_back(Json::array({d.cell, d.opposite}));
    }
    Json doc = {{"type", g.roots().type().to_string()},
                {"I", I.one_based()},
                {"dim_X", q.dim_X()},
                {"count", q.reps().size()},
                {"reps", reps},
                {"dims", dims}};
    os << doc.dump(2) << "\n";
    return;
  }
  os << "W^I for " << g.roots().type().to_string() << ", I=" << subset_text(I) << ": " << q.reps().size()
     << " representatives, dim X = " << q.dim_X() << "\n";
  os << std::left << std::setw(24) << "w" << std::right << std::setw(8) << "dim C" << std::setw(8) << "dim C-"
     << "\n";
  for (ElementId w : q.reps()) {
    const auto d = q.cell_dims(w);
    os << std::left << std::setw(24) << word_text(g, w) << std::right << std::setw(8) << d.cell << std::setw(8)
       << d.opposite << "\n";
  }
}

void cmd_orbits(const Options& o, std::ostream& os) {
  const auto rs = make_roots(o);
  const auto orbits = orbit_lattice(rs);
  if (o.json) {
    Json arr = Json::array();
    for (const auto& d : orbits)
      arr.push_back({{"J", d.J.one_based()},
                     {"levi", d.levi_type},
                     {"orbit_dim", d.orbit_dim},
                     {"stab_dim", d.stab_dim},
                     {"unipotent_count", d.unipotent_count},
                     {"levi_root_count", d.levi_roots.size()},
                     {"parabolic_root_count", d.parabolic_roots.size()}});
    Json doc = {{"type", rs.type().to_string()}, {"dim_G", group_dim(rs)}, {"orbits", arr}};
    os << doc.dump(2) << "\n";
    return;
  }
  os << "wonderful compactification of the adjoint group of type " << rs.type().to_string() << " (dim G = "
     << group_dim(rs) << "): " << orbits.size() << " orbits\n";
  os << std::left << std::setw(16) << "J" << std::setw(12) << "Levi" << std::right << std::setw(10) << "dim O_J"
     << std::setw(10) << "dim Stab" << "\n";
  for (const auto& d : orbits)
    os << std::left << std::setw(16) << subset_text(d.J) << std::setw(12) << (d.levi_type.empty() ? "T" : d.levi_type)
       << std::right << std::setw(10) << d.orbit_dim << std::setw(10) << d.stab_dim << "\n";
}

void emit_degen(const Options& o, std::ostream& os, const WeylGroup& g, SimpleSubset I, SimpleSubset J) {
  const auto comps = fiber_components(g, I, J);
  const QuotientData q(g, I);
  if (o.json) {
    Json doc = {{"type", g.roots().type().to_string()},
                {"I", I.one_based()},
                {"J", J.one_based()},
                {"dim_X", q.dim_X()},
                {"count", comps.size()},
                {"components", components_json(g, comps)}};
    os << doc.dump(2) << "\n";
    return;
  }
  os << "degeneration of the diagonal of G/P_I, type " << g.roots().type().to_string() << ", I=" << subset_text(I)
     << ", J=" << subset_text(J) << ": " << comps.size() << " component" << (comps.size() == 1 ? "" : "s")
     << ", dim X = " << q.dim_X() << "\n";
  components_text(os, g, comps);
}

void cmd_degen(const Options& o, std::ostream& os) {
  const WeylGroup g(make_roots(o));
  const auto I = require_subset(o.I, "I", g.rank(), o.verb);
  const auto J = require_subset(o.J, "J", g.rank(), o.verb);
  require_faithful(g.roots(), I);
  emit_degen(o, os, g, I, J);
}

void cmd_flagdegen(const Options& o, std::ostream& os) {
  const WeylGroup g(make_roots(o));
  const auto J = require_subset(o.J, "J", g.rank(), o.verb);
  full_flag_fiber(g, J);
  emit_degen(o, os, g, SimpleSubset{}, J);
}

int projective_dimension(const Options& o) {
  const auto t = parse_dynkin(o.type);
  if (t.components.size() != 1 || t.components[0].family != 'A')
    throw UsageError("verb '" + o.verb + "' expects a type A_n (P^n)");
  return t.components[0].rank;
}

void cmd_pn(const Options& o, std::ostream& os) {
  const int n = projective_dimension(o);
  const auto J = require_subset(o.J, "J", n, o.verb);
  const auto c = composition_from_J(n, J);
  const auto comps = pn_components(c);
  if (o.json) {
    Json arr = Json::array();
    for (const auto& z : comps)
      arr.push_back({{"i", z.i},
                     {"blocks", {z.before, z.block, z.after}},
                     {"smooth", z.smooth},
                     {"blowup_end", z.blowup_end},
                     {"w_of_1", z.w_of_one},
                     {"dims", {{"levi", z.levi_dim}, {"xminus", z.xminus_dim}, {"x", z.x_dim}, {"total", z.levi_dim + z.xminus_dim + z.x_dim}}}});
    Json meets = Json::array();
    for (int i = 0; i < c.r(); ++i) meets.push_back({{"i", i}, {"dim", pairwise_intersection_dim(c, i)}});
    Json doc = {{"n", n}, {"J", J.one_based()}, {"blocks", c.blocks}, {"cuts", c.cuts}, {"components", arr},
                {"intersections", meets}};
    os << doc.dump(2) << "\n";
    return;
  }
  os << "P^" << n << ", J=" << subset_text(J) << ": V = ";
  for (std::size_t k = 0; k < c.blocks.size(); ++k) os << (k ? " + " : "") << "V" << k << "(" << c.blocks[k] << ")";
  os << ", " << comps.size() << " component" << (comps.size() == 1 ? "" : "s") << "\n";
  os << std::setw(4) << "i" << std::setw(8) << "w(1)" << std::setw(8) << "dim Vi" << std::setw(10) << "smooth"
     << std::setw(12) << "blow-up" << "\n";
  for (const auto& z : comps)
    os << std::setw(4) << z.i << std::setw(8) << z.w_of_one << std::setw(8) << z.block << std::setw(10)
       << (z.smooth ? "yes" : "no") << std::setw(12) << (z.blowup_end ? "yes" : "no") << "\n";
  for (int i = 0; i < c.r(); ++i)
    os << "Z" << i << " meets Z" << i + 1 << " in dimension " << pairwise_intersection_dim(c, i) << "\n";
}

void cmd_gorenstein(const Options& o, std::ostream& os) {
  int n = 0;
  auto [ptr, ec] = std::from_chars(o.type.data(), o.type.data() + o.type.size(), n);
  if (ec != std::errc() || ptr != o.type.data() + o.type.size()) n = projective_dimension(o);
  if (n < 1 || n > 64) throw UsageError("gorenstein: n must lie in 1..64");
  const auto variant = parse_variant(o.variant);
  const auto h = diag_hilbert_poly(n);
  const auto p = gorenstein_obstruction(n, variant);
  if (o.json) {
    Json coeffs = Json::array();
    for (const auto& c : h.coeffs()) coeffs.push_back(rational_json(c));
    Json doc = {{"n", n}, {"variant", std::string(to_string(variant))}, {"hilbert", coeffs},
                {"hilbert_text", h.to_string()}, {"p", p ? Json(*p) : Json(nullptr)}};
    os << doc.dump(2) << "\n";
    return;
  }
  os << "chi(Z, O(m,m)) = " << h.to_string() << "\n";
  os << "variant " << to_string(variant) << ": ";
  if (p)
    os << "p = " << *p << "\n";
  else
    os << "no integer p (Z is not Gorenstein)\n";
}

int cmd_sweep(const Options& o, std::ostream& os) {
  const WeylGroup g(make_roots(o));
  const auto report = sweep(g);
  if (o.json) {
    Json checks = Json::array();
    for (const auto& c : report.checks)
      checks.push_back({{"name", c.name}, {"passed", c.passed}, {"failed", c.failed}, {"counterexamples", c.counterexamples}});
    Json doc = {{"type", report.type},
                {"faithful_I", report.faithful_subsets},
                {"J_per_I", report.subsets_per_I},
                {"checks", checks},
                {"failures", report.failures()}};
    os << doc.dump(2) << "\n";
  } else {
    os << "sweep " << report.type << ": " << report.faithful_subsets << " faithful I x " << report.subsets_per_I
       << " J\n";
    for (const auto& c : report.checks) {
      os << (c.failed ? "FAIL " : "ok   ") << std::left << std::setw(26) << c.name << std::right << std::setw(8)
         << c.passed << " passed" << std::setw(6) << c.failed << " failed\n";
      for (const auto& ce : c.counterexamples) os << "       " << ce << "\n";
    }
    os << report.failures() << " failures\n";
  }
  return report.failures() == 0 ? kOk : kCheckFailed;
}

int dispatch(const Options& o, std::ostream& os) {
  if (o.verb == "roots") return cmd_roots(o, os), kOk;
  if (o.verb == "weyl") return cmd_weyl(o, os), kOk;
  if (o.verb == "cosets") return cmd_cosets(o, os), kOk;
  if (o.verb == "orbits") return cmd_orbits(o, os), kOk;
  if (o.verb == "degen") return cmd_degen(o, os), kOk;
  if (o.verb == "flagdegen") return cmd_flagdegen(o, os), kOk;
  if (o.verb == "pn") return cmd_pn(o, os), kOk;
  if (o.verb == "gorenstein") return cmd_gorenstein(o, os), kOk;
  if (o.verb == "sweep") return cmd_sweep(o, os);
  throw UsageError("unknown verb '" + o.verb + "'");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Orbits of the wonderful compactification and degenerations of the diagonal of G/P"};
  app.set_help_flag("-h,--help", "Print this help message and exit");
  app.add_option("verb", o.verb, "command to run")
      ->required()
      ->check(CLI::IsMember({"roots", "weyl", "cosets", "orbits", "degen", "flagdegen", "pn", "gorenstein", "sweep"}));
  app.add_option("type", o.type, "Dynkin type, e.g. A3 or B2xA1 (gorenstein also accepts n)")->required();
  app.add_option("--I", o.I, "simple roots of the parabolic P, 1-based, comma separated");
  app.add_option("--J", o.J, "simple roots of the boundary orbit, 1-based, comma separated");
  app.add_flag("--json", o.json, "emit JSON");
  app.add_option("--variant", o.variant, "duality sign for gorenstein: paper | signed")->capture_default_str();
  app.add_option("--out", o.out_path, "write output to PATH instead of stdout");
  app.add_option("--cap", o.cap, "refuse Weyl groups larger than this (at most 1000000)")->capture_default_str();

  std::vector<const char*> argv{"wonder"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << "run with --help for usage\n";
    return kUsage;
  }

  try {
    if (o.cap > kMaxWeylOrder) throw UsageError("--cap may not exceed 1000000");
    std::ostringstream buffer;
    const int code = dispatch(o, buffer);
    if (o.out_path.empty()) {
      out << buffer.str();
    } else {
      std::ofstream file(o.out_path, std::ios::binary);
      if (!file) throw UsageError("cannot open output file '" + o.out_path + "'");
      file << buffer.str();
    }
    return code;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return kDomain;
  }
}

}  // namespace wonder::cli
