#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "argmine/experiment.hpp"
#include "argmine/metrics.hpp"

namespace argmine {

// One scored run: a manifest's identity plus its score on one test file.
struct RunScore {
  std::string setting;  // model setting label, e.g. "roberta"
  Scheme scheme = Scheme::MonoEN;
  double fraction = 1.0;
  std::uint64_t seed = 0;
  std::string test_file = "test";
  ScoreEntry score;
};

struct ReportEntry {
  Task task = Task::Argumentative;
  std::string setting;
  Scheme scheme = Scheme::MonoEN;
  double fraction = 1.0;
  std::string test_file = "test";
  std::vector<std::uint64_t> seeds;
  RunAggregate aggregate;
  std::map<std::string, double> per_class_f1;   // type tasks, mean over runs
  std::map<std::string, double> component_f1;   // joint tasks, mean over runs
};

struct MetricsReport {
  std::vector<ReportEntry> entries;

  std::string to_json() const;
  // Throws ParseError on schema violations.
  static MetricsReport from_json(std::string_view text);

  // Single-task runs at fraction 1.0 on "test": rows are tasks, one
  // "F1 Pr Rec" column group per setting, F1 cells as ".89±.02".
  std::string detection_table() const;
  // Type tasks at fraction 1.0: "Macro F V P" per setting, one row per
  // (task, test file).
  std::string type_table() const;
};

// Groups runs by (task, setting, scheme, fraction, test file) and aggregates
// each group. Entry order is the sorted group key. Throws
// InvalidArgument("DUPLICATE_RUN") when one group repeats a seed.
MetricsReport build_report(const std::vector<RunScore>& runs);

// Merges b into a; groups present in both are combined run by run.
MetricsReport merge_reports(const MetricsReport& a, const MetricsReport& b);

// ".89", "-.03", "1.00"
std::string format_score(double value);

}  // namespace argmine
