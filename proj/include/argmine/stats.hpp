#pragma once

#include <cstddef>
#include <map>
#include <string>

#include "argmine/corpus_model.hpp"

namespace argmine {

// Percentages of premises typed fact/policy/value, over the argumentative
// tweets of one language.
struct TypeDistribution {
  std::size_t count = 0;
  double fact = 0.0;
  double policy = 0.0;
  double value = 0.0;
};

struct LanguageStats {
  std::size_t tweets = 0;
  std::size_t argumentative = 0;
  // Over all tweets of the language.
  double pct_non_argumentative = 0.0;
  double pct_with_collective_property_pair = 0.0;
  double pct_with_pivot = 0.0;
  TypeDistribution justification;
  TypeDistribution conclusion;
};

struct CorpusStats {
  std::map<Language, LanguageStats> languages;

  // Unrounded percentages.
  std::string to_json() const;
  // Two tables: non-argumentative / pair / pivot, then premise types.
  // One decimal place.
  std::string to_table() const;
};

// Throws InvalidArgument("EMPTY_CORPUS") when the layer annotates no tweet.
CorpusStats corpus_stats(const AnnotatedCorpus& corpus, const std::string& layer);

}  // namespace argmine
