#pragma once

#include <optional>
#include <string>
#include <vector>

#include "argmine/report.hpp"

namespace argmine {

struct PlotOptions {
  Scheme scheme = Scheme::MonoEN;
  std::optional<std::string> setting;  // all settings when unset
  std::string test_file = "test";
  int width = 960;
  int height = 400;
};

struct AblationPoint {
  double fraction = 0.0;
  double f1 = 0.0;
};

struct AblationSeries {
  std::string label;  // task name, suffixed with the setting if several
  std::vector<AblationPoint> points;  // ascending fraction
  // F1 at each fraction as a percentage of the F1 at fraction 1.0; empty
  // when the series has no full-data point or that F1 is 0.
  std::vector<double> relative;
};

// Series of mean F1 over training fractions, one per (task, setting).
std::vector<AblationSeries> ablation_series(const MetricsReport& report, const PlotOptions& options);

// Two panels: absolute F1 on the left, percentage of the full-data F1 on
// the right. Throws InvalidArgument("NO_ABLATION_DATA") when nothing matches.
std::string ablation_svg(const MetricsReport& report, const PlotOptions& options);

}  // namespace argmine
