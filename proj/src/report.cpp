#include "msplit/report.hpp"

#include <charconv>
#include <cstdlib>
#include <sstream>

#include <json.hpp>

#include "msplit/errors.hpp"

namespace msplit {

using nlohmann::json;

namespace {

std::uint64_t parse_number(std::string_view key, std::string_view v) {
  std::uint64_t out = 0;
  const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (v.empty() || ec != std::errc{} || ptr != v.data() + v.size()) {
    throw InputError("budget '" + std::string(key) + "' needs a number, got '" +
                     std::string(v) + "'");
  }
  return out;
}

std::string quote(std::string_view s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + '"';
}

std::string one_based(const std::vector<std::size_t>& idx) {
  std::string out = "{";
  for (std::size_t t = 0; t < idx.size(); ++t) {
    out += (t ? "," : "") + std::to_string(idx[t] + 1);
  }
  return out + "}";
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

json vertex_json(const ContainmentGraph& g, int v) {
  return {{"id", v},
          {"split", ContainmentGraph::split_of(v) + 1},
          {"side", ContainmentGraph::side_of(v) == Side::kSmall ? "small" : "large"},
          {"part", g.part(v).braced()}};
}

json arcs_json(const std::vector<Arc>& arcs) {
  json out = json::array();
  for (const auto& a : arcs) out.push_back({a.from, a.to});
  return out;
}

json one_based_json(const std::vector<std::size_t>& idx) {
  json out = json::array();
  for (auto i : idx) out.push_back(i + 1);
  return out;
}

json checks_json(const std::vector<CheckRecord>& checks) {
  json out = json::array();
  for (const auto& c : checks) {
    json j = {{"name", c.name}, {"applicable", c.applicable}, {"violations", c.violations}};
    if (!c.notice.empty()) j["notice"] = c.notice;
    out.push_back(j);
  }
  return out;
}

void checks_text(std::ostream& os, const std::vector<CheckRecord>& checks) {
  for (const auto& c : checks) {
    os << "  " << c.name << ": ";
    if (!c.notice.empty()) {
      os << c.notice << '\n';
      continue;
    }
    os << "applicable " << c.applicable << ", "
       << (c.holds() ? "holds" : std::to_string(c.violations.size()) + " violation(s)") << '\n';
    for (const auto& v : c.violations) os << "    " << v << '\n';
  }
}

}  // namespace

Budgets parse_budgets(std::string_view spec) {
  Budgets b;
  while (!spec.empty()) {
    const std::size_t comma = spec.find(',');
    const std::string_view item = spec.substr(0, comma);
    spec = comma == std::string_view::npos ? std::string_view{} : spec.substr(comma + 1);
    if (item.empty()) continue;
    const std::size_t eq = item.find('=');
    if (eq == std::string_view::npos) {
      throw InputError("budget item '" + std::string(item) + "' is not key=value");
    }
    const std::string_view key = item.substr(0, eq);
    const std::uint64_t v = parse_number(key, item.substr(eq + 1));
    if (key == "nodes") {
      b.search.max_nodes = v;
      b.census.search.max_nodes = v;
      b.lattice.search.max_nodes = v;
    } else if (key == "subgraphs") {
      b.census.max_subgraphs = v;
    } else if (key == "lattice") {
      b.lattice.max_splits = v;
    } else if (key == "oracle-splits") {
      b.oracle.max_splits = v;
    } else if (key == "oracle-ground") {
      b.oracle.max_ground = v;
    } else {
      throw InputError("unknown budget key '" + std::string(key) + "'");
    }
  }
  return b;
}

Budgets budgets_from_env() {
  const char* spec = std::getenv("MSPLIT_BUDGET");
  return spec ? parse_budgets(spec) : Budgets{};
}

std::string dot_graph(const ContainmentGraph& g) {
  std::ostringstream os;
  os << "digraph containment {\n  rankdir=LR;\n";
  for (int v = 0; v < static_cast<int>(g.vertex_count()); ++v) {
    os << "  v" << v << " [label=" << quote(g.vertex_label(v)) << "];\n";
  }
  for (const auto& a : g.arcs()) os << "  v" << a.from << " -> v" << a.to << ";\n";
  os << "}\n";
  return os.str();
}

std::string dot_thin_subgraph(const ThinSubgraph& t) {
  const ContainmentGraph& g = t.graph();
  std::ostringstream os;
  os << "digraph thin {\n  rankdir=LR;\n";
  for (int v = 0; v < static_cast<int>(g.vertex_count()); ++v) {
    os << "  v" << v << " [label=" << quote(g.vertex_label(v)) << "];\n";
  }
  for (const auto& a : g.arcs()) {
    os << "  v" << a.from << " -> v" << a.to;
    if (t.is_critical(a.from, a.to)) {
      os << " [penwidth=2.5]";
    } else if (!t.has_arc(a.from, a.to)) {
      os << " [style=dashed, color=gray]";
    }
    os << ";\n";
  }
  os << "}\n";
  return os.str();
}

std::string dot_tree(const MTree& t, std::string_view name) {
  std::ostringstream os;
  os << "graph " << name << " {\n";
  for (std::size_t v = 0; v < t.vertex_count(); ++v) {
    os << "  t" << v << " [label=" << quote(t.label(v).braced()) << "];\n";
  }
  for (const auto& [a, b] : t.edges()) os << "  t" << a << " -- t" << b << ";\n";
  os << "}\n";
  return os.str();
}

namespace report {

std::string check_text(const CompatibilityResult& r, const std::vector<std::size_t>& minimal) {
  std::ostringstream os;
  if (r.truncated) {
    os << "undecided: search budget exhausted\n";
  } else if (r.compatible) {
    os << "compatible\n";
    os << "representation: " << canonical_form(*r.representation) << '\n';
    const ContainmentGraph& g = r.witness->graph();
    os << "witness arcs:\n";
    for (const auto& a : r.witness->arcs()) {
      os << "  " << g.vertex_label(a.from) << " -> " << g.vertex_label(a.to)
         << (r.witness->is_critical(a.from, a.to) ? "  (critical)" : "") << '\n';
    }
  } else {
    os << "incompatible; minimal witness: " << one_based(minimal) << '\n';
  }
  return os.str();
}

std::string check_json(const CompatibilityResult& r, const std::vector<std::size_t>& minimal) {
  json j = {{"command", "check"}, {"compatible", r.compatible}, {"truncated", r.truncated}};
  if (r.compatible) {
    const ContainmentGraph& g = r.witness->graph();
    json vertices = json::array();
    for (int v = 0; v < static_cast<int>(g.vertex_count()); ++v) {
      vertices.push_back(vertex_json(g, v));
    }
    j["witness"] = {{"vertices", vertices},
                    {"arcs", arcs_json(r.witness->arcs())},
                    {"critical", arcs_json(r.witness->critical_arcs())}};
    j["representation"] = canonical_form(*r.representation);
  } else if (!r.truncated) {
    j["minimal_incompatible_subset"] = one_based_json(minimal);
  }
  return j.dump(2) + "\n";
}

std::string census_text(const RepresentationCensus& c) {
  std::ostringstream os;
  os << c.thin_subgraph_count << " consistent thin subgraph"
     << (c.thin_subgraph_count == 1 ? "" : "s") << ", " << c.iso_classes.size()
     << " non-isomorphic representation" << (c.iso_classes.size() == 1 ? "" : "s")
     << ", unique: " << yes_no(c.unique) << '\n';
  for (const auto& k : c.iso_classes) {
    os << "  " << k.tree_form << "  (" << k.members << " subgraph"
       << (k.members == 1 ? "" : "s") << ")\n";
  }
  if (c.truncated) os << "truncated: census budget exhausted\n";
  for (const auto& v : c.bijection_violations) os << "bijection violation: " << v << '\n';
  return os.str();
}

std::string census_json(const RepresentationCensus& c) {
  json classes = json::array();
  for (const auto& k : c.iso_classes) {
    classes.push_back({{"subgraph", k.subgraph_descriptor},
                       {"tree", k.tree_form},
                       {"members", k.members}});
  }
  json j = {{"command", "census"},
            {"thin_subgraph_count", c.thin_subgraph_count},
            {"iso_classes", classes},
            {"unique", c.unique},
            {"truncated", c.truncated},
            {"bijection_violations", c.bijection_violations}};
  return j.dump(2) + "\n";
}

std::string analyze_text(const SplitSystem& system, const SystemAnalysis& a) {
  const ContainmentGraph g(system);
  std::ostringstream os;
  os << "system: " << a.n << " split" << (a.n == 1 ? "" : "s") << " on "
     << system.ground().braced() << '\n';
  for (std::size_t i = 0; i < system.size(); ++i) {
    os << "  S" << i + 1 << ": " << system[i].str() << '\n';
  }
  os << "delta: " << a.delta << '\n';
  os << "thin: " << yes_no(a.thin) << '\n';
  os << "compatible: " << (a.compat.truncated ? "undecided" : yes_no(a.compat.compatible))
     << '\n';
  if (a.compat.representation) {
    os << "representation: " << canonical_form(*a.compat.representation) << '\n';
  }
  auto list = [&](const char* title, const std::vector<int>& vs) {
    os << title << ":";
    if (vs.empty()) os << " none";
    for (std::size_t t = 0; t < vs.size(); ++t) os << (t ? ", " : " ") << g.vertex_label(vs[t]);
    os << '\n';
  };
  list("terminal sets", a.terminal.terminal);
  list("superterminal sets", a.terminal.superterminal);
  for (std::size_t t = 0; t < a.terminal.per_split_superterminal.size(); ++t) {
    os << "  S(" << g.part(a.terminal.per_split_superterminal[t]).braced() << "):";
    for (int v : a.terminal.containing_side[t]) os << ' ' << g.vertex_label(v) << ';';
    os << '\n';
  }
  os << "minimal incompatible subsets:";
  if (a.bounds.truncated) os << " not computed (over budget)";
  else if (a.bounds.minimal_incompatible_subsets.empty()) os << " none";
  for (const auto& s : a.bounds.minimal_incompatible_subsets) os << ' ' << one_based(s);
  os << '\n';
  if (!a.bounds.truncated) {
    os << "bounds: star " << yes_no(a.bounds.star_holds) << ", star3 "
       << yes_no(a.bounds.star3_holds) << ", ref43 " << yes_no(a.bounds.ref43_holds) << '\n';
  }
  os << "checks:\n";
  checks_text(os, a.theorems.checks);
  os << "open question (k, delta):";
  if (a.theorems.open_question.empty()) os << " none";
  for (const auto& [k, d] : a.theorems.open_question) os << " (" << k << ", " << d << ")";
  os << '\n';
  return os.str();
}

std::string analyze_json(const SplitSystem& system, const SystemAnalysis& a) {
  const ContainmentGraph g(system);
  auto vertices = [&](const std::vector<int>& vs) {
    json out = json::array();
    for (int v : vs) out.push_back(vertex_json(g, v));
    return out;
  };
  json sides = json::array();
  for (std::size_t t = 0; t < a.terminal.per_split_superterminal.size(); ++t) {
    sides.push_back({{"part", vertex_json(g, a.terminal.per_split_superterminal[t])},
                     {"sides", vertices(a.terminal.containing_side[t])}});
  }
  json minimal = json::array();
  for (const auto& s : a.bounds.minimal_incompatible_subsets) minimal.push_back(one_based_json(s));
  json open = json::array();
  for (const auto& [k, d] : a.theorems.open_question) open.push_back({k, d});
  json splits = json::array();
  for (const auto& s : system.splits()) splits.push_back(s.str());
  json j = {{"command", "analyze"},
            {"ground", system.ground().braced()},
            {"splits", splits},
            {"n", a.n},
            {"delta", a.delta},
            {"thin", a.thin},
            {"compatible", a.compat.compatible},
            {"truncated", a.compat.truncated},
            {"terminal", vertices(a.terminal.terminal)},
            {"superterminal", vertices(a.terminal.superterminal)},
            {"containing_side", sides},
            {"bounds",
             {{"minimal_incompatible_subsets", minimal},
              {"star", a.bounds.star_holds},
              {"star3", a.bounds.star3_holds},
              {"ref43", a.bounds.ref43_holds},
              {"truncated", a.bounds.truncated}}},
            {"checks", checks_json(a.theorems.checks)},
            {"open_question", open},
            {"superterminal_mismatches", a.theorems.superterminal_mismatches}};
  if (a.compat.representation) j["representation"] = canonical_form(*a.compat.representation);
  return j.dump(2) + "\n";
}

std::string oracle_text(const OracleResult& r) {
  std::ostringstream os;
  os << (r.compatible ? "compatible" : "incompatible") << " (" << r.trees.size()
     << " representation" << (r.trees.size() == 1 ? "" : "s") << " up to isomorphism)\n";
  for (const auto& t : r.trees) os << "  " << canonical_form(t) << '\n';
  return os.str();
}

std::string oracle_json(const OracleResult& r) {
  json trees = json::array();
  for (const auto& t : r.trees) trees.push_back(canonical_form(t));
  json j = {{"command", "oracle"}, {"compatible", r.compatible}, {"trees", trees}};
  return j.dump(2) + "\n";
}

std::string scan_text(const ScanReport& r) {
  const ScanBudget& b = r.budget;
  std::ostringstream os;
  os << "budget: max-delta " << b.max_delta << ", max-size " << b.max_size << ", max-splits "
     << b.max_splits << ", sizes ";
  if (b.sizes.empty()) os << "any";
  for (std::size_t t = 0; t < b.sizes.size(); ++t) os << (t ? "," : "") << b.sizes[t];
  os << ", equal-size " << yes_no(b.equal_size) << ", distinct " << yes_no(b.distinct) << '\n';
  os << "grounds: " << r.grounds << '\n';
  os << "systems: " << r.systems << " (compatible " << r.compatible << ", incompatible "
     << r.incompatible << ")\n";
  os << "thin: " << r.thin << '\n';
  os << "equal-size: " << r.equal_size << '\n';
  os << "2,3 distinct: " << r.two_three_distinct << '\n';
  os << "truncated: " << r.truncated << '\n';
  os << "engine calls: " << r.engine_calls << '\n';
  os << "checks:\n";
  checks_text(os, r.checks);
  os << "open question (k, delta) -> count:";
  if (r.open_question.empty()) os << " none";
  os << '\n';
  for (const auto& [kd, count] : r.open_question) {
    os << "  (" << kd.first << ", " << kd.second << "): " << count << '\n';
  }
  os << "superterminal definition mismatches: " << r.superterminal_mismatches << '\n';
  os << "violations: " << r.violation_count() << '\n';
  os << "runtime: " << r.seconds << " s, " << r.threads << " thread(s)\n";
  return os.str();
}

std::string scan_json(const ScanReport& r) {
  const ScanBudget& b = r.budget;
  json open = json::array();
  for (const auto& [kd, count] : r.open_question) {
    open.push_back({{"k", kd.first}, {"delta", kd.second}, {"count", count}});
  }
  json j = {{"command", "scan"},
            {"budget",
             {{"max_delta", b.max_delta},
              {"max_size", b.max_size},
              {"max_splits", b.max_splits},
              {"sizes", b.sizes},
              {"equal_size", b.equal_size},
              {"distinct", b.distinct}}},
            {"grounds", r.grounds},
            {"systems", r.systems},
            {"compatible", r.compatible},
            {"incompatible", r.incompatible},
            {"thin", r.thin},
            {"equal_size", r.equal_size},
            {"two_three_distinct", r.two_three_distinct},
            {"truncated", r.truncated},
            {"engine_calls", r.engine_calls},
            {"checks", checks_json(r.checks)},
            {"open_question", open},
            {"superterminal_mismatches", r.superterminal_mismatches},
            {"violations", r.violation_count()},
            {"runtime", {{"seconds", r.seconds}, {"threads", r.threads}}}};
  return j.dump(2) + "\n";
}

}  // namespace report

}  // namespace msplit
