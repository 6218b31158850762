// msplit: compatibility of split systems on multisets.
//
// Exit status: 0 success, 1 incompatible system or violated statement
// (check, analyze, scan), 2 input error, 3 budget exceeded.

#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "msplit/compat_engine.hpp"
#include "msplit/document.hpp"
#include "msplit/errors.hpp"
#include "msplit/oracle.hpp"
#include "msplit/report.hpp"
#include "msplit/scan.hpp"
#include "msplit/structure.hpp"

using namespace msplit;

namespace {

enum Exit { kOk = 0, kNegative = 1, kInput = 2, kBudget = 3 };

struct Options {
  std::string file;
  std::string format = "text";
  std::string budget;
  bool all = false;
  bool witness = false;
  ScanBudget scan;
};

Budgets budgets(const Options& o) {
  return o.budget.empty() ? budgets_from_env() : parse_budgets(o.budget);
}

SplitSystem load(const Options& o) { return parse_document(read_file(o.file)).system; }

bool structured(const Options& o) { return o.format == "structured"; }

int cmd_check(const Options& o) {
  const Budgets b = budgets(o);
  const SplitSystem system = load(o);
  const CompatibilityResult r = check_compatibility(system, b.search);
  std::vector<std::size_t> minimal;
  if (!r.compatible && !r.truncated) minimal = find_minimal_incompatible_subset(system, b.search);
  std::cout << (structured(o) ? report::check_json(r, minimal) : report::check_text(r, minimal));
  if (r.truncated) return kBudget;
  return r.compatible ? kOk : kNegative;
}

int cmd_represent(const Options& o) {
  const Budgets b = budgets(o);
  const SplitSystem system = load(o);
  std::vector<MTree> trees;
  bool truncated = false;
  if (o.all) {
    const RepresentationCensus c = census_representations(system, b.census);
    truncated = c.truncated;
    for (const auto& k : c.iso_classes) trees.push_back(k.tree);
  } else {
    const CompatibilityResult r = check_compatibility(system, b.search);
    truncated = r.truncated;
    if (r.representation) trees.push_back(*r.representation);
  }
  if (o.format == "dot") {
    for (std::size_t t = 0; t < trees.size(); ++t) {
      std::cout << dot_tree(trees[t], "mtree" + std::to_string(t + 1));
    }
  } else if (structured(o)) {
    std::cout << "{\n  \"command\": \"represent\",\n  \"trees\": [";
    for (std::size_t t = 0; t < trees.size(); ++t) {
      std::cout << (t ? ",\n    \"" : "\n    \"") << canonical_form(trees[t]) << '"';
    }
    std::cout << (trees.empty() ? "]" : "\n  ]") << ",\n  \"truncated\": "
              << (truncated ? "true" : "false") << "\n}\n";
  } else {
    if (trees.empty()) std::cout << "incompatible: no representation\n";
    for (const auto& t : trees) std::cout << canonical_form(t) << '\n';
  }
  if (truncated) return kBudget;
  return trees.empty() ? kNegative : kOk;
}

int cmd_census(const Options& o) {
  const RepresentationCensus c = census_representations(load(o), budgets(o).census);
  std::cout << (structured(o) ? report::census_json(c) : report::census_text(c));
  if (!c.bijection_violations.empty()) return kNegative;
  return c.truncated ? kBudget : kOk;
}

int cmd_analyze(const Options& o) {
  const SplitSystem system = load(o);
  const SystemAnalysis a = analyze_system(system, budgets(o).lattice);
  std::cout << (structured(o) ? report::analyze_json(system, a) : report::analyze_text(system, a));
  return a.theorems.any_violation() ? kNegative : kOk;
}

int cmd_graph(const Options& o) {
  const SplitSystem system = load(o);
  const ContainmentGraph g(system);
  if (o.witness) {
    const CompatibilityResult r = check_compatibility(system, budgets(o).search);
    if (!r.witness) {
      std::cerr << "msplit: no consistent thin subgraph to draw\n";
      return r.truncated ? kBudget : kNegative;
    }
    std::cout << dot_thin_subgraph(*r.witness);
  } else {
    std::cout << dot_graph(g);
  }
  return kOk;
}

int cmd_oracle(const Options& o) {
  const OracleResult r = oracle_compatible(load(o), budgets(o).oracle);
  std::cout << (structured(o) ? report::oracle_json(r) : report::oracle_text(r));
  return r.compatible ? kOk : kNegative;
}

int cmd_scan(const Options& o) {
  ScanBudget b = o.scan;
  b.lattice = budgets(o).lattice;
  const ScanReport r = scan(b);
  std::cout << (structured(o) ? report::scan_json(r) : report::scan_text(r));
  return r.violation_count() > 0 ? kNegative : kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Compatibility of split systems on multisets"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--format", o.format, "text, structured, or dot (represent, graph)")
      ->check(CLI::IsMember({"text", "structured", "dot"}));
  app.add_option("--budget", o.budget,
                 "nodes=N,subgraphs=N,lattice=N,oracle-splits=N,oracle-ground=N "
                 "(default from MSPLIT_BUDGET)");

  auto file_cmd = [&](const char* name, const char* help) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("file", o.file, "split-system file")->required();
    return sub;
  };
  CLI::App* check = file_cmd("check", "decide compatibility and print a witness");
  CLI::App* represent = file_cmd("represent", "print representations");
  represent->add_flag("--all", o.all, "one tree per isomorphism class");
  CLI::App* census = file_cmd("census", "count consistent thin subgraphs and representations");
  CLI::App* analyze = file_cmd("analyze", "terminal sets, bounds and statement checks");
  CLI::App* graph = file_cmd("graph", "containment graph as DOT");
  graph->add_flag("--witness", o.witness, "overlay the first consistent thin subgraph");
  CLI::App* oracle = file_cmd("oracle", "brute-force verdict over all trees");

  CLI::App* scan = app.add_subcommand("scan", "exhaustive scan of small split systems");
  scan->add_option("--max-delta", o.scan.max_delta)->required();
  scan->add_option("--max-size", o.scan.max_size)->required();
  scan->add_option("--max-splits", o.scan.max_splits)->required()->check(CLI::Range(1, 31));
  scan->add_option("--min-size", o.scan.min_size, "smallest ground size")
      ->capture_default_str();
  scan->add_option("--sizes", o.scan.sizes, "allowed split sizes")->delimiter(',');
  scan->add_flag("--equal-size", o.scan.equal_size, "all splits of one size");
  scan->add_flag("--distinct", o.scan.distinct, "no repeated split");
  scan->add_option("--jobs", o.scan.jobs, "threads")->check(CLI::NonNegativeNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInput;
  }

  try {
    if (*check) return cmd_check(o);
    if (*represent) return cmd_represent(o);
    if (*census) return cmd_census(o);
    if (*analyze) return cmd_analyze(o);
    if (*graph) return cmd_graph(o);
    if (*oracle) return cmd_oracle(o);
    if (*scan) return cmd_scan(o);
  } catch (const BudgetExceeded& e) {
    std::cerr << "msplit: budget exceeded: " << e.what() << '\n';
    return kBudget;
  } catch (const InputError& e) {
    std::cerr << "msplit: " << o.file << (o.file.empty() ? "" : ": ") << e.what() << '\n';
    return kInput;
  }
  return kInput;
}
