// rdom: Roman domination invariants, vertex-removal classes and the check
// harness from the command line.
#include <algorithm>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "rdom/canonical.hpp"
#include "rdom/classifier.hpp"
#include "rdom/enumeration.hpp"
#include "rdom/errors.hpp"
#include "rdom/explore.hpp"
#include "rdom/graph6.hpp"
#include "rdom/labelled_trees.hpp"
#include "rdom/solvers.hpp"
#include "rdom/verify.hpp"

using nlohmann::ordered_json;
using namespace rdom;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

// Bad arguments or input; exits with kExitUsage.
struct Usage : std::runtime_error {
  using std::runtime_error::runtime_error;
};

InstanceStream open_input(const std::string& path) {
  if (path.empty() || path == "-") {
    return read_graph6_stream(std::shared_ptr<std::istream>(&std::cin, [](std::istream*) {}));
  }
  return read_graph6_stream(path);
}

ordered_json set_json(VertexSet s) { return s.to_vector(); }

ordered_json function_json(const RomanFunction& f) {
  return {{"v0", set_json(f.v0)}, {"v1", set_json(f.v1)}, {"v2", set_json(f.v2)}};
}

ordered_json report_json(const std::string& g6, const ClassReport& r) {
  ordered_json j;
  j["graph"] = g6;
  j["order"] = r.order;
  j["size"] = r.size;
  j["gamma"] = r.gamma;
  j["gamma_r"] = r.gamma_r;
  j["differential"] = r.differential;
  j["is_roman"] = r.is_roman;
  j["in_R_UVR"] = r.in_R_UVR;
  j["in_R_CVR"] = r.in_R_CVR;
  j["in_dUVR"] = r.in_dUVR;
  j["in_dCVR"] = r.in_dCVR;
  j["in_dUVR_literal"] = r.in_dUVR_literal;
  j["in_dCVR_literal"] = r.in_dCVR_literal;
  j["is_URD"] = r.is_URD;
  j["bondage"] = r.bondage ? ordered_json(*r.bondage) : ordered_json(nullptr);
  ordered_json effects = ordered_json::array();
  for (RemovalEffect e : r.per_vertex_effect) effects.push_back(std::string(to_string(e)));
  j["per_vertex_effect"] = effects;
  return j;
}

ordered_json compute_one(const std::string& what, const Graph& g, bool functions) {
  ordered_json j;
  j["graph"] = write_graph6(g);
  if (what == "gamma") {
    const DominationSummary d = minimum_dominating_sets(g);
    j["gamma"] = d.gamma;
    j["unique"] = d.unique;
    if (functions) {
      ordered_json sets = ordered_json::array();
      for (VertexSet s : d.all_min_sets) sets.push_back(set_json(s));
      j["sets"] = sets;
    }
  } else if (what == "gamma-r") {
    j["gamma_r"] = roman_domination_number(g);
    if (functions) {
      ordered_json fs = ordered_json::array();
      for (const RomanFunction& f : gamma_r_functions(g)) fs.push_back(function_json(f));
      j["functions"] = fs;
    }
  } else if (what == "differential") {
    j["differential"] = differential_value(g);
    if (functions) {
      ordered_json sets = ordered_json::array();
      for (VertexSet s : differential_sets(g)) sets.push_back(set_json(s));
      j["sets"] = sets;
    }
  } else if (what == "bondage") {
    j["bondage"] = g.max_degree() >= 2 ? ordered_json(roman_bondage_number(g)) : ordered_json(nullptr);
  } else {
    ordered_json sets = ordered_json::array();
    for (VertexSet s : efficient_dominating_sets(g)) sets.push_back(set_json(s));
    j["eds"] = sets;
  }
  return j;
}

// Applies fn to every graph in the input, one JSON line each.
template <class Fn>
int for_each_input(const std::string& path, Fn&& fn) {
  InstanceStream in = open_input(path);
  while (auto item = in.next()) {
    try {
      std::cout << fn(item->graph).dump() << '\n';
    } catch (const LimitExceeded& e) {
      throw Usage("line " + std::to_string(item->line) + ": " + e.what());
    }
  }
  return kExitOk;
}

void print_lines(const std::vector<Graph>& graphs) {
  for (const Graph& g : graphs) std::cout << write_graph6(g) << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Roman domination and vertex-removal classes"};
  app.require_subcommand(1);

  // compute
  auto* compute = app.add_subcommand("compute", "Invariants of each graph6 input graph, one JSON line each");
  std::string what;
  std::string compute_input;
  bool with_sets = false;
  compute->add_option("what", what, "gamma | gamma-r | differential | bondage | eds")
      ->required()
      ->check(CLI::IsMember({"gamma", "gamma-r", "differential", "bondage", "eds"}));
  compute->add_option("input", compute_input, "graph6 file, '-' or omitted for stdin");
  compute->add_flag("--all", with_sets, "also list every optimal set or function");

  // classify
  auto* classify_cmd = app.add_subcommand("classify", "Full class report for each graph6 input graph");
  std::string classify_input;
  classify_cmd->add_option("input", classify_input, "graph6 file, '-' or omitted for stdin");

  // generate
  auto* generate = app.add_subcommand("generate", "Print a family as graph6 lines, ordered by order then canonical form");
  std::string kind;
  int gen_n = 0;
  int gen_max_n = 0;
  generate->add_option("kind", kind, "t-trees | free-trees | unicyclic")
      ->required()
      ->check(CLI::IsMember({"t-trees", "free-trees", "unicyclic"}));
  generate->add_option("--n", gen_n, "order (free-trees, unicyclic)");
  generate->add_option("--max-n", gen_max_n, "largest order (t-trees; all orders up to it otherwise)");

  // verify
  auto* verify_cmd = app.add_subcommand("verify", "Run the check registry over the exhaustive instance streams");
  verify::RunOptions run;
  bool as_table = false;
  bool as_json = false;
  bool timing = false;
  bool list = false;
  int inject = 0;
  verify_cmd->add_option("--suite", run.suite, "check id or 'all'")->capture_default_str();
  verify_cmd->add_option("--trees-max-n", run.limits.trees_max_n)->capture_default_str();
  verify_cmd->add_option("--graphs-max-n", run.limits.graphs_max_n)->capture_default_str();
  verify_cmd->add_option("--unicyclic-n", run.limits.unicyclic_n)->capture_default_str();
  verify_cmd->add_option("--threads", run.threads, "worker threads, 0 for all cores")->capture_default_str();
  auto* json_flag = verify_cmd->add_flag("--json", as_json, "JSON lines (default)");
  verify_cmd->add_flag("--table", as_table, "per-check summary table")->excludes(json_flag);
  verify_cmd->add_flag("--timing", timing, "add per-result seconds to JSON output");
  verify_cmd->add_flag("--list", list, "list registered checks and exit");
  verify_cmd->add_option("--inject-fault", inject, "report gamma_R one too high on graphs of this order");

  // explore
  auto* explore_cmd = app.add_subcommand("explore", "Exploratory tables for open questions");
  std::string problem;
  int explore_n = 0;
  explore_cmd->add_option("problem", problem, "unicyclic | sizes")->required()->check(CLI::IsMember({"unicyclic", "sizes"}));
  explore_cmd->add_option("--n", explore_n, "order")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*compute) {
      return for_each_input(compute_input, [&](const Graph& g) { return compute_one(what, g, with_sets); });
    }
    if (*classify_cmd) {
      return for_each_input(classify_input, [](const Graph& g) { return report_json(write_graph6(g), classify(g)); });
    }
    if (*generate) {
      if (kind == "t-trees") {
        if (gen_max_n < 1) throw Usage("t-trees needs --max-n");
        for (const LabelledTree& t : generate_t_family(gen_max_n).members) std::cout << serialize(t) << '\n';
        return kExitOk;
      }
      if ((gen_n > 0) == (gen_max_n > 0)) throw Usage(kind + " needs exactly one of --n and --max-n");
      const int lo = gen_n > 0 ? gen_n : (kind == "unicyclic" ? kMinUnicyclicOrder : 1);
      const int hi = gen_n > 0 ? gen_n : gen_max_n;
      for (int n = lo; n <= hi; ++n) {
        if (kind == "unicyclic") {
          print_lines(unicyclic_graphs(n).collect());
          continue;
        }
        std::vector<std::pair<std::string, Graph>> keyed;
        for (Graph& t : free_trees(n).collect()) keyed.emplace_back(tree_canonical_code(t), std::move(t));
        std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
        for (const auto& [code, t] : keyed) std::cout << write_graph6(t) << '\n';
      }
      return kExitOk;
    }
    if (*verify_cmd) {
      if (list) {
        for (const verify::CheckInfo& c : verify::checks()) {
          std::cout << ordered_json{{"id", c.id}, {"topic", c.topic}, {"domain", c.domain}, {"statement", c.statement}}.dump()
                    << '\n';
        }
        return kExitOk;
      }
      if (inject > 0) fault::arm_gamma_r_off_by_one(inject);
      const verify::Report report = verify::run_suite(run);
      if (as_table) {
        verify::write_table(report, run, std::cout);
      } else {
        verify::write_json_lines(report, run, std::cout, timing);
      }
      return report.ok() ? kExitOk : kExitCheckFailed;
    }
    if (*explore_cmd) {
      if (problem == "unicyclic") {
        if (explore_n < kMinUnicyclicOrder || explore_n > kMaxUnicyclicOrder) throw Usage("unicyclic order must be in 3..10");
        ordered_json members = ordered_json::array();
        for (const Graph& g : explore::unicyclic_members(explore_n)) members.push_back(write_graph6(g));
        std::cout << ordered_json{{"order", explore_n}, {"exhaustive", true}, {"members", members}}.dump() << '\n';
        return kExitOk;
      }
      const explore::SizeTable t = explore::max_sizes(explore_n);
      ordered_json rows = ordered_json::array();
      for (const explore::SizeRow& r : t.rows) {
        rows.push_back({{"gamma_r", r.gamma_r}, {"max_edges", r.max_edges}, {"witness", r.witness}, {"members", r.members}});
      }
      std::cout << ordered_json{{"order", t.order}, {"exhaustive", t.exhaustive}, {"source", t.source}, {"rows", rows}}.dump()
                << '\n';
      return kExitOk;
    }
  } catch (const std::runtime_error& e) {
    // Usage, Graph6Error (with line number), LimitExceeded, unreadable files.
    std::cerr << "rdom: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "rdom: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitOk;
}
