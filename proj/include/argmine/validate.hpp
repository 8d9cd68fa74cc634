#pragma once

#include <string>
#include <vector>

#include "argmine/corpus_model.hpp"

namespace argmine {

enum class Severity { Error, Warning };
enum class ValidationMode { Strict, Lenient };

std::string_view to_string(Severity severity);

struct Issue {
  Severity severity;
  std::string code;
  std::string message;

  bool operator==(const Issue&) const = default;
};

struct ValidationReport {
  std::string tweet_id;
  std::vector<Issue> issues;

  bool clean() const { return issues.empty(); }
  std::size_t error_count() const;
  std::size_t warning_count() const;
};

// Protocol checks for one tweet's annotation. Problems are reported, never
// thrown. Lenient mode demotes pivot containment and one-sided
// Collective/Property to warnings; everything else is an error in both modes.
ValidationReport validate(const Tweet& tweet, const ArgumentAnnotation& annotation,
                          ValidationMode mode);

}  // namespace argmine
