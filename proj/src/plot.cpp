#include "argmine/plot.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <set>

#include "argmine/errors.hpp"

namespace argmine {

namespace {

constexpr const char* kPalette[] = {"#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd",
                                    "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf"};

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

struct Panel {
  double x0, y0, w, h;
  double ymin, ymax;

  double px(double fraction) const { return x0 + (fraction - 0.25) / 0.75 * w; }
  double py(double v) const { return y0 + h - (v - ymin) / (ymax - ymin) * h; }
};

void axes(std::string& svg, const Panel& p, const std::string& title, const std::string& ylabel,
          const std::vector<double>& yticks) {
  svg += "<rect x=\"" + num(p.x0) + "\" y=\"" + num(p.y0) + "\" width=\"" + num(p.w) + "\" height=\"" +
         num(p.h) + "\" fill=\"none\" stroke=\"#000\"/>\n";
  svg += "<text x=\"" + num(p.x0 + p.w / 2) + "\" y=\"" + num(p.y0 - 10) +
         "\" text-anchor=\"middle\" font-size=\"14\">" + escape(title) + "</text>\n";
  for (double f : {0.25, 0.5, 0.75, 1.0}) {
    svg += "<text x=\"" + num(p.px(f)) + "\" y=\"" + num(p.y0 + p.h + 16) +
           "\" text-anchor=\"middle\" font-size=\"11\">" + std::to_string(static_cast<int>(f * 100)) +
           "%</text>\n";
  }
  for (double t : yticks) {
    svg += "<line x1=\"" + num(p.x0) + "\" x2=\"" + num(p.x0 + p.w) + "\" y1=\"" + num(p.py(t)) +
           "\" y2=\"" + num(p.py(t)) + "\" stroke=\"#ddd\"/>\n";
    svg += "<text x=\"" + num(p.x0 - 6) + "\" y=\"" + num(p.py(t) + 4) +
           "\" text-anchor=\"end\" font-size=\"11\">" + num(t) + "</text>\n";
  }
  svg += "<text x=\"" + num(p.x0 + p.w / 2) + "\" y=\"" + num(p.y0 + p.h + 34) +
         "\" text-anchor=\"middle\" font-size=\"12\">training data</text>\n";
  svg += "<text x=\"" + num(p.x0 - 44) + "\" y=\"" + num(p.y0 + p.h / 2) +
         "\" text-anchor=\"middle\" font-size=\"12\" transform=\"rotate(-90 " + num(p.x0 - 44) + " " +
         num(p.y0 + p.h / 2) + ")\">" + escape(ylabel) + "</text>\n";
}

void line(std::string& svg, const Panel& p, const std::vector<double>& xs, const std::vector<double>& ys,
          const char* colour) {
  std::string pts;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) pts += ' ';
    pts += num(p.px(xs[i])) + "," + num(p.py(ys[i]));
  }
  svg += "<polyline points=\"" + pts + "\" fill=\"none\" stroke=\"" + colour + "\" stroke-width=\"2\"/>\n";
  for (std::size_t i = 0; i < xs.size(); ++i) {
    svg += "<circle cx=\"" + num(p.px(xs[i])) + "\" cy=\"" + num(p.py(ys[i])) + "\" r=\"3\" fill=\"" +
           colour + "\"/>\n";
  }
}

}  // namespace

std::vector<AblationSeries> ablation_series(const MetricsReport& report, const PlotOptions& options) {
  std::map<std::pair<int, std::string>, std::map<double, double>> grouped;
  std::set<std::string> settings;
  for (const auto& e : report.entries) {
    if (e.scheme != options.scheme || e.test_file != options.test_file) continue;
    if (options.setting && e.setting != *options.setting) continue;
    grouped[{static_cast<int>(e.task), e.setting}][e.fraction] = e.aggregate.mean_f1;
    settings.insert(e.setting);
  }
  std::vector<AblationSeries> out;
  for (const auto& [key, points] : grouped) {
    AblationSeries s;
    s.label = std::string(to_string(static_cast<Task>(key.first)));
    if (settings.size() > 1) s.label += " (" + key.second + ")";
    for (const auto& [f, f1] : points) s.points.push_back({f, f1});
    auto full = points.find(1.0);
    if (full != points.end() && full->second > 0) {
      for (const auto& pt : s.points) s.relative.push_back(100.0 * pt.f1 / full->second);
    }
    out.push_back(std::move(s));
  }
  return out;
}

std::string ablation_svg(const MetricsReport& report, const PlotOptions& options) {
  const auto series = ablation_series(report, options);
  if (series.empty()) {
    throw InvalidArgument("NO_ABLATION_DATA", "report has no entries for scheme " +
                                                  std::string(to_string(options.scheme)));
  }
  double rel_min = 100.0, rel_max = 100.0;
  for (const auto& s : series) {
    for (double r : s.relative) {
      rel_min = std::min(rel_min, r);
      rel_max = std::max(rel_max, r);
    }
  }
  rel_min = std::floor(rel_min / 10.0) * 10.0;
  rel_max = std::ceil(rel_max / 10.0) * 10.0;
  if (rel_max == rel_min) rel_max += 10.0;

  const double legend_h = 18.0 * static_cast<double>((series.size() + 1) / 2) + 10.0;
  const double W = options.width, H = options.height + legend_h;
  const double panel_w = (W - 160) / 2, panel_h = options.height - 90;
  const Panel left{70, 40, panel_w, panel_h, 0.0, 1.0};
  const Panel right{70 + panel_w + 80, 40, panel_w, panel_h, rel_min, rel_max};

  std::string svg = "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + num(W) + "\" height=\"" +
                    num(H) + "\" font-family=\"sans-serif\">\n";
  svg += "<rect width=\"100%\" height=\"100%\" fill=\"#fff\"/>\n";
  axes(svg, left, "F1", "F1", {0.0, 0.2, 0.4, 0.6, 0.8, 1.0});
  std::vector<double> rel_ticks;
  const double step = (rel_max - rel_min) > 60 ? 20.0 : 10.0;
  for (double t = rel_min; t <= rel_max + 1e-9; t += step) rel_ticks.push_back(t);
  axes(svg, right, "F1 relative to full training set", "% of full-data F1", rel_ticks);

  for (std::size_t i = 0; i < series.size(); ++i) {
    const auto& s = series[i];
    const char* colour = kPalette[i % std::size(kPalette)];
    std::vector<double> xs, ys;
    for (const auto& p : s.points) {
      xs.push_back(p.fraction);
      ys.push_back(p.f1);
    }
    line(svg, left, xs, ys, colour);
    if (!s.relative.empty()) line(svg, right, xs, s.relative, colour);
    const double lx = 70 + static_cast<double>(i % 2) * (W / 2);
    const double ly = options.height + 18.0 * static_cast<double>(i / 2);
    svg += "<rect x=\"" + num(lx) + "\" y=\"" + num(ly - 9) + "\" width=\"12\" height=\"12\" fill=\"" +
           colour + "\"/>\n";
    svg += "<text x=\"" + num(lx + 18) + "\" y=\"" + num(ly + 2) + "\" font-size=\"12\">" + escape(s.label) +
           "</text>\n";
  }
  svg += "</svg>\n";
  return svg;
}

}  // namespace argmine
