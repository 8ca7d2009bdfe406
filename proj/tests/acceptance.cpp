// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fail.
#include <chrono>
#include <functional>
#include <iostream>
#include <set>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "rdom/canonical.hpp"
#include "rdom/classifier.hpp"
#include "rdom/constructions.hpp"
#include "rdom/enumeration.hpp"
#include "rdom/graph6.hpp"
#include "rdom/labelled_trees.hpp"
#include "rdom/solvers.hpp"
#include "rdom/verify.hpp"

using namespace rdom;

namespace {

using Clock = std::chrono::steady_clock;

constexpr double kAc1Seconds = 300.0;
constexpr double kAc3Seconds = 600.0;
// Connected graphs on 1..7 vertices.
const std::vector<std::size_t> kConnectedCounts{1, 1, 2, 6, 21, 112, 853};
// Free trees on 1..12 vertices.
const std::vector<std::size_t> kFreeTreeCounts{1, 1, 1, 2, 3, 6, 11, 23, 47, 106, 235, 551};

struct Outcome {
  bool ok;
  std::string detail;
};

double since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

// Failures and passes of the named checks in a report.
Outcome tally(const verify::Report& r, const std::set<std::string>& ids) {
  std::size_t pass = 0, fail = 0;
  std::set<std::string> passing;
  std::string first;
  for (const verify::CheckResult& x : r.results) {
    if (!ids.count(x.check)) continue;
    if (x.verdict == verify::Verdict::kFail) {
      ++fail;
      if (first.empty()) first = x.check + " " + x.instance + ": " + x.witness;
    } else if (x.verdict == verify::Verdict::kPass) {
      ++pass;
      passing.insert(x.check);
    }
  }
  std::string detail = std::to_string(pass) + " pass, " + std::to_string(fail) + " fail";
  if (!first.empty()) detail += "; first: " + first;
  if (passing.size() != ids.size()) detail += "; a check had no passing instance";
  return {fail == 0 && passing.size() == ids.size(), detail};
}

verify::Report run(const std::string& suite, verify::Limits limits = {}) {
  verify::RunOptions o;
  o.suite = suite;
  o.limits = limits;
  return verify::run_suite(o);
}

Outcome ac1() {
  const auto t0 = Clock::now();
  std::size_t graphs = 0, mismatches = 0;
  bool counts_ok = true;
  for (int n = 1; n <= 6; ++n) {
    const auto gs = connected_graphs(n).collect();
    counts_ok = counts_ok && gs.size() == kConnectedCounts[n - 1];
    for (const Graph& g : gs) {
      ++graphs;
      mismatches += roman_domination_number(g) != oracle::gamma_r(g);
    }
  }
  const double secs = since(t0);
  return {counts_ok && mismatches == 0 && secs < kAc1Seconds,
          std::to_string(graphs) + " graphs, " + std::to_string(mismatches) + " mismatches, counts " +
              (counts_ok ? "match" : "differ") + ", " + std::to_string(secs) + " s"};
}

Outcome ac2() {
  std::size_t graphs = 0, failures = 0;
  for (int n = 1; n <= 6; ++n) {
    for (const Graph& g : connected_graphs(n).collect()) {
      ++graphs;
      const int d = differential_value(g);
      failures += roman_domination_number(g) + d != n || d != oracle::differential(g);
    }
  }
  return {failures == 0, std::to_string(graphs) + " graphs, " + std::to_string(failures) + " failures"};
}

Outcome ac3() {
  const auto t0 = Clock::now();
  bool counts_ok = true;
  for (int n = 1; n <= 12; ++n) counts_ok = counts_ok && free_trees(n).collect().size() == kFreeTreeCounts[n - 1];
  const verify::Report r = run("THM-MAIN");
  const Outcome o = tally(r, {"THM-MAIN"});
  const double secs = since(t0);
  return {o.ok && counts_ok && r.passed == 985 && secs < kAc3Seconds,
          o.detail + ", counts " + (counts_ok ? "match" : "differ") + ", " + std::to_string(secs) + " s"};
}

Outcome ac4() {
  const verify::Report r = run("REC-DECOMP");
  const Outcome o = tally(r, {"REC-DECOMP"});
  return {o.ok && r.passed == 985, o.detail};
}

Outcome ac5() {
  std::string detail;
  bool ok = true;
  for (int n = 4; n <= 5; ++n) {
    std::vector<Graph> best;
    for (const Graph& g : connected_graphs(n).collect()) {
      if (!in_class_R_UVR(g)) continue;
      if (!best.empty() && g.size() < best.front().size()) best.clear();
      if (best.empty() || g.size() == best.front().size()) best.push_back(g);
    }
    const bool this_ok = best.size() == 1 && best.front().size() == 2 * n - 3 &&
                         are_isomorphic(best.front(), join_graph(complete_graph(2), edgeless_graph(n - 2)));
    ok = ok && this_ok;
    detail += "n=" + std::to_string(n) + ": " + std::to_string(best.size()) + " minimum of size " +
              (best.empty() ? std::string("-") : std::to_string(best.front().size())) + (n == 4 ? "; " : "");
  }
  return {ok, detail};
}

Outcome ac6() {
  std::vector<Graph> members;
  for (const Graph& g : unicyclic_graphs(8).collect())
    if (in_class_R_UVR(g)) members.push_back(g);
  std::size_t trees = 0;
  for (const Graph& t : free_trees(8).collect()) trees += in_class_R_UVR(t);
  const bool ok = members.size() == 1 && members.front().size() == 8 && are_isomorphic(members.front(), figure3_graph()) && trees == 0;
  return {ok, std::to_string(members.size()) + " unicyclic member(s)" +
                  (members.empty() ? "" : " " + write_graph6(members.front())) + ", " + std::to_string(trees) + " tree members"};
}

Outcome ac7() {
  std::set<int> orders;
  for (const LabelledTree& t : generate_script_T(13)) orders.insert(t.order());
  const std::set<int> expected{3, 6, 7, 9, 10, 11, 12, 13};
  std::string detail = "orders";
  for (int n : orders) detail += " " + std::to_string(n);
  return {orders == expected, detail};
}

Outcome ac8() {
  std::size_t trees = 0, wrong = 0;
  for (const LabelledTree& t : generate_script_T(12)) {
    ++trees;
    wrong += roman_bondage_number(t.tree()) != 1;
  }
  const int c3 = roman_bondage_number(cycle_graph(3));
  const int c6 = roman_bondage_number(cycle_graph(6));
  const bool oracle_ok = oracle::bondage(cycle_graph(3), 3) == 2 && oracle::bondage(cycle_graph(6), 3) == 2;
  return {wrong == 0 && trees > 0 && c3 == 2 && c6 == 2 && oracle_ok,
          std::to_string(trees) + " trees, " + std::to_string(wrong) + " with b_R != 1; b_R(C_3)=" + std::to_string(c3) +
              " b_R(C_6)=" + std::to_string(c6)};
}

Outcome ac9() {
  const verify::Report r = run("PROP-3V2", {12, 7, 8});
  return tally(r, {"PROP-3V2"});
}

Outcome ac10(const verify::Report& all) {
  return tally(all, {"COR-SB", "COR-VDEL", "COR-EDEL", "PROP-T1", "OBS-SABC", "COR-UNILAB", "REM-E1"});
}

Outcome ac11(const verify::Report& all) {
  return tally(all, {"LEM-ON", "LEM-MINUS", "LEM-MINUSE", "THM-R", "THM-UN", "OBS-DISC", "OBS-PN3", "OBS-EQUI", "PROP-02"});
}

Outcome ac12() {
  fault::arm_gamma_r_off_by_one(5);
  const verify::Report r = run("all");
  fault::disarm();
  return {r.failed >= 1, std::to_string(r.failed) + " failures with gamma_R off by one at order 5"};
}

}  // namespace

int main() {
  const verify::Report all = run("all");
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"AC1", ac1},
      {"AC2", ac2},
      {"AC3", ac3},
      {"AC4", ac4},
      {"AC5", ac5},
      {"AC6", ac6},
      {"AC7", ac7},
      {"AC8", ac8},
      {"AC9", ac9},
      {"AC10", [&] { return ac10(all); }},
      {"AC11", [&] { return ac11(all); }},
      {"AC12", ac12},
  };
  bool ok = true;
  for (const auto& [id, fn] : criteria) {
    Outcome o;
    try {
      o = fn();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    ok = ok && o.ok;
    std::cout << id << ' ' << (o.ok ? "PASS" : "FAIL") << "  " << o.detail << std::endl;
  }
  return ok ? 0 : 1;
}
