#include "argmine/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <tuple>

#include "argmine/errors.hpp"
#include "argmine/utf8.hpp"
#include "json.hpp"

namespace argmine {

namespace {

using GroupKey = std::tuple<int, std::string, int, double, std::string>;

GroupKey key_of(const ReportEntry& e) {
  return {static_cast<int>(e.task), e.setting, static_cast<int>(e.scheme), e.fraction, e.test_file};
}

// Per-class means are kept as sums while grouping and divided at the end.
struct Group {
  ReportEntry entry;
  std::map<std::string, double> class_sums;
  std::map<std::string, double> component_sums;
};

void finish(Group& g) {
  g.entry.aggregate = aggregate_runs(g.entry.aggregate.runs);
  const auto n = static_cast<double>(g.entry.aggregate.runs.size());
  g.entry.per_class_f1.clear();
  g.entry.component_f1.clear();
  for (const auto& [name, sum] : g.class_sums) g.entry.per_class_f1[name] = sum / n;
  for (const auto& [name, sum] : g.component_sums) g.entry.component_f1[name] = sum / n;
}

void add_seeds(ReportEntry& into, const std::vector<std::uint64_t>& seeds) {
  for (auto s : seeds) {
    if (std::find(into.seeds.begin(), into.seeds.end(), s) != into.seeds.end()) {
      throw InvalidArgument("DUPLICATE_RUN", std::string(to_string(into.task)) + " / " + into.setting +
                                                 " has seed " + std::to_string(s) + " twice");
    }
    into.seeds.push_back(s);
  }
}

MetricsReport collect(std::map<GroupKey, Group>& groups) {
  MetricsReport report;
  for (auto& [key, g] : groups) {
    finish(g);
    report.entries.push_back(std::move(g.entry));
  }
  return report;
}

nlohmann::ordered_json prf_json(const PRF& p) {
  nlohmann::ordered_json out;
  out["precision"] = p.precision;
  out["recall"] = p.recall;
  out["f1"] = p.f1;
  return out;
}

PRF prf_from(const nlohmann::json& j) {
  return {j.at("precision").get<double>(), j.at("recall").get<double>(), j.at("f1").get<double>()};
}

std::string_view row_name(Task task, std::string_view test_file) {
  if (task == Task::TypeOfBoth) {
    if (test_file == "test_justification") return "Type of Just.";
    if (test_file == "test_conclusion") return "Type of Conc.";
    return "Type of both";
  }
  switch (task) {
    case Task::Argumentative: return "Arg./Non-Arg.";
    case Task::Justification: return "Justification";
    case Task::Conclusion: return "Conclusion";
    case Task::TypeOfJustification: return "Type of Just.";
    case Task::TypeOfConclusion: return "Type of Conc.";
    case Task::Collective: return "Collective";
    case Task::Property: return "Property";
    case Task::Pivot: return "Pivot";
    case Task::JointCollectiveProperty: return "Collective+Property";
    case Task::JointJustificationConclusion: return "Justification+Conclusion";
    default: return "";
  }
}

// Pads by code points so that "±" does not skew the columns.
std::string pad(const std::string& s, std::size_t width) {
  const std::size_t n = utf8::length(s);
  return n >= width ? s : s + std::string(width - n, ' ');
}

std::string render(const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> widths;
  for (const auto& row : rows) {
    if (widths.size() < row.size()) widths.resize(row.size(), 0);
    for (std::size_t c = 0; c < row.size(); ++c) widths[c] = std::max(widths[c], utf8::length(row[c]));
  }
  std::string out;
  for (const auto& row : rows) {
    std::string line;
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c) line += "  ";
      line += c + 1 == row.size() ? row[c] : pad(row[c], widths[c]);
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out += line + '\n';
  }
  return out;
}

std::string column_name(const ReportEntry& e) {
  return e.setting + " [" + std::string(to_string(e.scheme)) + "]";
}

}  // namespace

std::string format_score(double value) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", value);
  std::string s = buf;
  if (s == "-0.00") s = "0.00";
  if (s.rfind("0.", 0) == 0) s.erase(0, 1);
  if (s.rfind("-0.", 0) == 0) s.erase(1, 1);
  return s;
}

MetricsReport build_report(const std::vector<RunScore>& runs) {
  std::map<GroupKey, Group> groups;
  for (const auto& run : runs) {
    ReportEntry probe;
    probe.task = run.score.task;
    probe.setting = run.setting;
    probe.scheme = run.scheme;
    probe.fraction = run.fraction;
    probe.test_file = run.test_file;
    auto [it, inserted] = groups.try_emplace(key_of(probe));
    auto& g = it->second;
    if (inserted) g.entry = probe;
    add_seeds(g.entry, {run.seed});
    g.entry.aggregate.runs.push_back(run.score.headline);
    for (const auto& [name, prf] : run.score.per_class) g.class_sums[name] += prf.f1;
    for (const auto& [name, prf] : run.score.components) g.component_sums[name] += prf.f1;
  }
  return collect(groups);
}

MetricsReport merge_reports(const MetricsReport& a, const MetricsReport& b) {
  std::map<GroupKey, Group> groups;
  for (const auto* report : {&a, &b}) {
    for (const auto& e : report->entries) {
      auto [it, inserted] = groups.try_emplace(key_of(e));
      auto& g = it->second;
      if (inserted) {
        g.entry = e;
        g.entry.seeds.clear();
        g.entry.aggregate.runs.clear();
      }
      add_seeds(g.entry, e.seeds);
      const auto& runs = e.aggregate.runs;
      g.entry.aggregate.runs.insert(g.entry.aggregate.runs.end(), runs.begin(), runs.end());
      const auto n = static_cast<double>(runs.size());
      for (const auto& [name, f1] : e.per_class_f1) g.class_sums[name] += f1 * n;
      for (const auto& [name, f1] : e.component_f1) g.component_sums[name] += f1 * n;
    }
  }
  return collect(groups);
}

std::string MetricsReport::to_json() const {
  nlohmann::ordered_json out;
  out["entries"] = nlohmann::ordered_json::array();
  for (const auto& e : entries) {
    nlohmann::ordered_json j;
    j["task"] = std::string(to_string(e.task));
    j["setting"] = e.setting;
    j["scheme"] = std::string(to_string(e.scheme));
    j["fraction"] = e.fraction;
    j["test_file"] = e.test_file;
    j["seeds"] = e.seeds;
    j["mean_f1"] = e.aggregate.mean_f1;
    j["std_f1"] = e.aggregate.std_f1;
    j["mean_precision"] = e.aggregate.mean_precision;
    j["mean_recall"] = e.aggregate.mean_recall;
    j["runs"] = nlohmann::ordered_json::array();
    for (const auto& r : e.aggregate.runs) j["runs"].push_back(prf_json(r));
    j["per_class_f1"] = e.per_class_f1;
    j["component_f1"] = e.component_f1;
    out["entries"].push_back(std::move(j));
  }
  return out.dump(2) + "\n";
}

MetricsReport MetricsReport::from_json(std::string_view text) {
  try {
    const auto j = nlohmann::json::parse(text);
    MetricsReport report;
    for (const auto& item : j.at("entries")) {
      ReportEntry e;
      e.task = parse_task(item.at("task").get<std::string>());
      e.setting = item.at("setting").get<std::string>();
      e.scheme = parse_scheme(item.at("scheme").get<std::string>());
      e.fraction = item.at("fraction").get<double>();
      e.test_file = item.at("test_file").get<std::string>();
      e.seeds = item.at("seeds").get<std::vector<std::uint64_t>>();
      for (const auto& r : item.at("runs")) e.aggregate.runs.push_back(prf_from(r));
      if (e.aggregate.runs.empty() || e.aggregate.runs.size() != e.seeds.size()) {
        throw ParseError("BAD_REPORT", "entry needs one run per seed");
      }
      e.aggregate = aggregate_runs(e.aggregate.runs);
      e.per_class_f1 = item.value("per_class_f1", std::map<std::string, double>{});
      e.component_f1 = item.value("component_f1", std::map<std::string, double>{});
      report.entries.push_back(std::move(e));
    }
    return report;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError("BAD_REPORT", e.what());
  } catch (const InvalidArgument& e) {
    throw ParseError(e.code(), e.what());
  }
}

std::string MetricsReport::detection_table() const {
  static constexpr Task kRows[] = {
      Task::Argumentative,  Task::Justification,           Task::Conclusion,
      Task::TypeOfJustification, Task::TypeOfConclusion,   Task::Collective,
      Task::Property,       Task::Pivot,                   Task::JointCollectiveProperty,
      Task::JointJustificationConclusion,
  };
  std::vector<std::string> columns;
  std::map<std::pair<int, std::string>, const ReportEntry*> cells;
  for (const auto& e : entries) {
    if (e.fraction != 1.0 || e.test_file != "test" || e.task == Task::TypeOfBoth) continue;
    const auto col = column_name(e);
    if (std::find(columns.begin(), columns.end(), col) == columns.end()) columns.push_back(col);
    cells[{static_cast<int>(e.task), col}] = &e;
  }
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> header{""}, sub{""};
  for (const auto& c : columns) {
    header.insert(header.end(), {c, "", ""});
    sub.insert(sub.end(), {"F1", "Pr", "Rec"});
  }
  rows.push_back(header);
  rows.push_back(sub);
  for (auto task : kRows) {
    std::vector<std::string> row{std::string(row_name(task, "test"))};
    bool any = false;
    for (const auto& c : columns) {
      auto it = cells.find({static_cast<int>(task), c});
      if (it == cells.end()) {
        row.insert(row.end(), {"-", "-", "-"});
        continue;
      }
      any = true;
      const auto& a = it->second->aggregate;
      row.push_back(format_score(a.mean_f1) + "±" + format_score(a.std_f1));
      row.push_back(format_score(a.mean_precision));
      row.push_back(format_score(a.mean_recall));
    }
    if (any) rows.push_back(std::move(row));
  }
  return render(rows);
}

std::string MetricsReport::type_table() const {
  struct Row {
    Task task;
    std::string_view test_file;
  };
  static constexpr Row kRows[] = {
      {Task::TypeOfBoth, "test_justification"},
      {Task::TypeOfBoth, "test_conclusion"},
      {Task::TypeOfBoth, "test"},
      {Task::TypeOfJustification, "test"},
      {Task::TypeOfConclusion, "test"},
  };
  std::vector<std::string> columns;
  std::map<std::tuple<int, std::string, std::string>, const ReportEntry*> cells;
  for (const auto& e : entries) {
    if (e.fraction != 1.0 || !is_type_task(e.task)) continue;
    const auto col = column_name(e);
    if (std::find(columns.begin(), columns.end(), col) == columns.end()) columns.push_back(col);
    cells[{static_cast<int>(e.task), e.test_file, col}] = &e;
  }
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> header{"", ""}, sub{"", ""};
  for (const auto& c : columns) {
    header.insert(header.end(), {c, "", "", ""});
    sub.insert(sub.end(), {"Macro", "F", "V", "P"});
  }
  rows.push_back(header);
  rows.push_back(sub);
  for (const auto& r : kRows) {
    std::vector<std::string> row{std::string(row_name(r.task, r.test_file)),
                                 r.task == Task::TypeOfBoth ? "trained on both" : "trained alone"};
    bool any = false;
    for (const auto& c : columns) {
      auto it = cells.find({static_cast<int>(r.task), std::string(r.test_file), c});
      if (it == cells.end()) {
        row.insert(row.end(), {"-", "-", "-", "-"});
        continue;
      }
      any = true;
      const auto& e = *it->second;
      row.push_back(format_score(e.aggregate.mean_f1) + "±" + format_score(e.aggregate.std_f1));
      for (const char* cls : {"fact", "value", "policy"}) {
        auto f = e.per_class_f1.find(cls);
        row.push_back(f == e.per_class_f1.end() ? "-" : format_score(f->second));
      }
    }
    if (any) rows.push_back(std::move(row));
  }
  return render(rows);
}

}  // namespace argmine
