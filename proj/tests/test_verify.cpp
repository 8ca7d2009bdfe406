#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>
#include <sstream>

#include "json.hpp"
#include "rdom/explore.hpp"
#include "rdom/graph6.hpp"
#include "rdom/constructions.hpp"
#include "rdom/solvers.hpp"
#include "rdom/verify.hpp"

using namespace rdom;
using namespace rdom::verify;

namespace {

RunOptions small(std::string suite, int trees, int graphs, int unicyclic = 3) {
  RunOptions o;
  o.suite = std::move(suite);
  o.limits = {trees, graphs, unicyclic};
  return o;
}

std::size_t count(const Report& r, Verdict v) {
  std::size_t k = 0;
  for (const CheckResult& x : r.results) k += x.verdict == v;
  return k;
}

}  // namespace

TEST_CASE("registry ids are unique and every check has a statement") {
  std::set<std::string> ids;
  for (const CheckInfo& c : checks()) {
    CHECK(ids.insert(c.id).second);
    CHECK_FALSE(c.statement.empty());
    CHECK_FALSE(c.domain.empty());
  }
  for (const char* id : {"EQ1", "LEM-ON", "LEM-MINUS", "LEM-MINUSE", "THM-R", "THM-UN", "THM-DIFF-I", "THM-DIFF-II", "OBS-DISC",
                         "OBS-PN3", "REM-E1", "PROP-3V2", "PROP-02", "COR-UVRBON", "COR-UVRTREE", "OBS-SABC", "COR-UNILAB",
                         "OBS-EQUI", "THM-MAIN", "COR-SB", "COR-VDEL", "COR-EDEL", "PROP-T1", "MINEDGE-I", "MINEDGE-II",
                         "MINEDGE-III"}) {
    CHECK_MESSAGE(ids.count(id), id);
  }
}

TEST_CASE("limits are validated") {
  CHECK_NOTHROW(validate(Limits{}));
  CHECK_THROWS_AS(validate(Limits{17, 6, 8}), std::invalid_argument);
  CHECK_THROWS_AS(validate(Limits{12, 8, 8}), std::invalid_argument);
  CHECK_THROWS_AS(validate(Limits{12, 6, 2}), std::invalid_argument);
  CHECK_THROWS_AS(run_suite(small("NO-SUCH-CHECK", 3, 3)), std::invalid_argument);
}

TEST_CASE("EQ1 over connected graphs up to order 5") {
  const Report r = run_suite(small("EQ1", 3, 5));
  CHECK(r.results.size() == 1 + 1 + 2 + 6 + 21);
  CHECK(r.passed == r.results.size());
}

TEST_CASE("THM-MAIN over trees up to order 10") {
  const Report r = run_suite(small("THM-MAIN", 10, 3));
  // 1+1+1+2+3+6+11+23+47+106 trees; orders 1 and 2 sit outside the hypothesis.
  CHECK(r.results.size() == 201);
  CHECK(r.passed == 199);
  CHECK(r.skipped == 2);
}

TEST_CASE("smoke run of every check is well formed") {
  const RunOptions o = small("all", 3, 3);
  const Report r = run_suite(o);
  CHECK(r.ok());
  CHECK(r.passed + r.failed + r.skipped + r.informational == r.results.size());

  std::ostringstream out;
  write_json_lines(r, o, out);
  std::istringstream lines(out.str());
  std::string line;
  std::size_t records = 0;
  nlohmann::json last;
  std::set<std::string> seen;
  while (std::getline(lines, line)) {
    last = nlohmann::json::parse(line);
    if (last.contains("summary")) break;
    ++records;
    seen.insert(last["check"].get<std::string>());
    CHECK(last.contains("instance"));
    CHECK_FALSE(last.contains("seconds"));
    if (last["verdict"] == "fail") CHECK(last.contains("witness"));
  }
  CHECK(records == r.results.size());
  CHECK(seen.size() == checks().size());
  REQUIRE(last.contains("summary"));
  CHECK(last["summary"]["ok"] == true);
  CHECK(last["summary"]["results"] == r.results.size());

  std::ostringstream table;
  write_table(r, o, table);
  CHECK(table.str().find("suite all:") != std::string::npos);
}

TEST_CASE("reports are identical across runs and thread counts") {
  RunOptions one = small("all", 7, 4, 5);
  one.threads = 1;
  RunOptions many = one;
  many.threads = 6;
  std::ostringstream a, b;
  write_json_lines(run_suite(one), one, a);
  write_json_lines(run_suite(many), many, b);
  CHECK(a.str() == b.str());
}

TEST_CASE("LEM-MINUSE flags sampled edges at order 7") {
  const Report r = run_suite(small("LEM-MINUSE", 3, 7));
  bool sampled = false;
  for (const CheckResult& x : r.results) sampled = sampled || x.note.find("sampled") != std::string::npos;
  CHECK(sampled);
  CHECK(r.ok());
}

TEST_CASE("a wrong gamma_R answer is caught") {
  fault::arm_gamma_r_off_by_one(5);
  const Report r = run_suite(small("all", 6, 5, 5));
  fault::disarm();
  CHECK(r.failed > 0);
  std::set<std::string> failing;
  for (const CheckResult& x : r.results) {
    if (x.verdict != Verdict::kFail) continue;
    failing.insert(x.check);
    CHECK_FALSE(x.witness.empty());
  }
  CHECK(failing.count("THM-DIFF-I"));
  CHECK(run_suite(small("all", 6, 5, 5)).ok());
}

TEST_CASE("PROP-3V2 reports equality outside cycles without failing") {
  const Report r = run_suite(small("PROP-3V2", 6, 5));
  CHECK(r.ok());
  CHECK(count(r, Verdict::kInfo) > 0);
}

TEST_CASE("explore unicyclic") {
  CHECK(explore::unicyclic_members(3).size() == 1);
  CHECK(explore::unicyclic_members(4).empty());
  const auto eight = explore::unicyclic_members(8);
  REQUIRE(eight.size() == 1);
  CHECK(eight.front().size() == 8);
}

TEST_CASE("explore sizes") {
  const explore::SizeTable five = explore::max_sizes(5);
  CHECK(five.exhaustive);
  REQUIRE(five.rows.size() == 1);
  CHECK(five.rows.front().gamma_r == 2);
  CHECK(five.rows.front().max_edges == 10);

  const explore::SizeTable eight = explore::max_sizes(8);
  CHECK_FALSE(eight.exhaustive);
  bool has_four = false;
  for (const auto& row : eight.rows) {
    has_four = has_four || row.gamma_r == 4;
    CHECK(parse_graph6(row.witness).size() == row.max_edges);
  }
  CHECK(has_four);
  CHECK_THROWS_AS(explore::max_sizes(0), std::invalid_argument);
}
