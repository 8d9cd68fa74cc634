#include "argmine/validate.hpp"

#include <algorithm>

namespace argmine {

std::string_view to_string(Severity severity) {
  return severity == Severity::Error ? "error" : "warning";
}

std::size_t ValidationReport::error_count() const {
  return static_cast<std::size_t>(std::count_if(
      issues.begin(), issues.end(), [](const Issue& i) { return i.severity == Severity::Error; }));
}

std::size_t ValidationReport::warning_count() const { return issues.size() - error_count(); }

namespace {

void check_bounds(const Tweet& tweet, const Span& span, std::string_view what,
                  std::vector<Issue>& issues) {
  if (span.end() > tweet.length()) {
    issues.push_back({Severity::Error, "SPAN_OUT_OF_BOUNDS",
                      std::string(what) + " ends at " + std::to_string(span.end()) +
                          " past text length " + std::to_string(tweet.length())});
  }
}

}  // namespace

ValidationReport validate(const Tweet& tweet, const ArgumentAnnotation& a, ValidationMode mode) {
  ValidationReport report{tweet.id(), {}};
  auto& issues = report.issues;
  const Severity soft = mode == ValidationMode::Strict ? Severity::Error : Severity::Warning;

  if (!a.argumentative) {
    const std::pair<bool, std::string_view> present[] = {
        {a.justification.has_value(), "justification"},
        {a.conclusion.has_value(), "conclusion"},
        {a.collective.has_value(), "collective"},
        {a.property.has_value(), "property"},
        {a.pivot.has_value(), "pivot"},
    };
    for (const auto& [has, name] : present) {
      if (has) {
        issues.push_back({Severity::Error, "COMPONENT_ON_NON_ARGUMENTATIVE",
                          "non-argumentative tweet carries a " + std::string(name)});
      }
    }
  } else {
    if (!a.justification) {
      issues.push_back({Severity::Error, "MISSING_JUSTIFICATION",
                        "argumentative tweet has no justification"});
    }
    if (!a.conclusion) {
      issues.push_back(
          {Severity::Error, "MISSING_CONCLUSION", "argumentative tweet has no conclusion"});
    }
  }

  if (a.justification) check_bounds(tweet, a.justification->span, "justification", issues);
  if (a.conclusion) check_bounds(tweet, a.conclusion->span, "conclusion", issues);
  if (a.collective) check_bounds(tweet, *a.collective, "collective", issues);
  if (a.property) check_bounds(tweet, *a.property, "property", issues);

  if (a.collective && !a.property) {
    issues.push_back({soft, "COLLECTIVE_WITHOUT_PROPERTY", "collective annotated without property"});
  }
  if (a.property && !a.collective) {
    issues.push_back({soft, "PROPERTY_WITHOUT_COLLECTIVE", "property annotated without collective"});
  }

  if (a.pivot) {
    check_bounds(tweet, a.pivot->justification_side, "pivot justification side", issues);
    check_bounds(tweet, a.pivot->conclusion_side, "pivot conclusion side", issues);
    if (!a.justification || !a.conclusion) {
      issues.push_back({Severity::Error, "PIVOT_WITHOUT_PREMISES",
                        "pivot requires both justification and conclusion"});
    }
    if (a.justification && !a.justification->span.contains(a.pivot->justification_side)) {
      issues.push_back({soft, "PIVOT_OUTSIDE_JUSTIFICATION",
                        "pivot justification side lies outside the justification"});
    }
    if (a.conclusion && !a.conclusion->span.contains(a.pivot->conclusion_side)) {
      issues.push_back({soft, "PIVOT_OUTSIDE_CONCLUSION",
                        "pivot conclusion side lies outside the conclusion"});
    }
  }
  return report;
}

}  // namespace argmine
