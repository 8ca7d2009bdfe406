#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace rdom::verify {

struct Limits {
  int trees_max_n = 12;
  int graphs_max_n = 6;
  int unicyclic_n = 8;
};

inline constexpr int kTreesCap = 16;
inline constexpr int kGraphsCap = 7;
inline constexpr int kUnicyclicMin = 3;
inline constexpr int kUnicyclicCap = 10;

// Throws std::invalid_argument when a limit is outside its cap.
void validate(const Limits& limits);

// kSkip: the instance is outside the statement's hypothesis.
// kInfo: reported, never asserted.
enum class Verdict { kPass, kFail, kSkip, kInfo };

std::string_view to_string(Verdict v);

struct CheckResult {
  std::string check;
  // graph6 of the instance, or a description for whole-family checks.
  std::string instance;
  // Name of a constructed graph, when there is one.
  std::string label;
  // Status string of a labelled tree.
  std::string statuses;
  Verdict verdict = Verdict::kPass;
  // Present on failure.
  std::string witness;
  std::string note;
  double seconds = 0.0;
};

struct CheckInfo {
  std::string id;
  std::string statement;
  std::string topic;
  std::string domain;
};

// Every registered check, in report order.
const std::vector<CheckInfo>& checks();

struct RunOptions {
  // A check id or "all".
  std::string suite = "all";
  Limits limits;
  // 0 picks the hardware concurrency.
  int threads = 0;
};

struct Report {
  std::vector<CheckResult> results;
  std::size_t passed = 0;
  std::size_t failed = 0;
  std::size_t skipped = 0;
  std::size_t informational = 0;
  double seconds = 0.0;

  bool ok() const { return failed == 0; }
};

// Results come out ordered by check, then domain, then instance, whatever
// the thread count. Throws std::invalid_argument for an unknown suite or
// limits out of range.
Report run_suite(const RunOptions& options);

// One JSON object per result, then {"summary": ...}. Timings only when
// `timing` is set, so that reports compare byte for byte.
void write_json_lines(const Report& report, const RunOptions& options, std::ostream& out, bool timing = false);
void write_table(const Report& report, const RunOptions& options, std::ostream& out);

}  // namespace rdom::verify
