#include "argmine/stats.hpp"

#include <cstdio>

#include "argmine/errors.hpp"
#include "json.hpp"

namespace argmine {
namespace {

struct Tally {
  std::size_t tweets = 0;
  std::size_t argumentative = 0;
  std::size_t pair = 0;
  std::size_t pivot = 0;
  std::size_t types[2][3] = {};  // [justification|conclusion][fact|value|policy]
};

double pct(std::size_t part, std::size_t whole) {
  return whole == 0 ? 0.0 : 100.0 * static_cast<double>(part) / static_cast<double>(whole);
}

TypeDistribution distribution(const std::size_t (&counts)[3]) {
  TypeDistribution d;
  d.count = counts[0] + counts[1] + counts[2];
  d.fact = pct(counts[static_cast<int>(PropositionType::Fact)], d.count);
  d.value = pct(counts[static_cast<int>(PropositionType::Value)], d.count);
  d.policy = pct(counts[static_cast<int>(PropositionType::Policy)], d.count);
  return d;
}

nlohmann::ordered_json distribution_json(const TypeDistribution& d) {
  nlohmann::ordered_json out;
  out["count"] = d.count;
  out["fact"] = d.fact;
  out["policy"] = d.policy;
  out["value"] = d.value;
  return out;
}

}  // namespace

CorpusStats corpus_stats(const AnnotatedCorpus& corpus, const std::string& layer_name) {
  const auto& layer = corpus.layer(layer_name);
  std::map<Language, Tally> tallies;
  for (const auto& tweet : corpus.tweets()) {
    const auto* a = layer.find(tweet.id());
    if (!a) continue;
    auto& t = tallies[tweet.language()];
    ++t.tweets;
    if (a->collective && a->property) ++t.pair;
    if (a->pivot) ++t.pivot;
    if (!a->argumentative) continue;
    ++t.argumentative;
    if (a->justification) ++t.types[0][static_cast<int>(a->justification->type)];
    if (a->conclusion) ++t.types[1][static_cast<int>(a->conclusion->type)];
  }
  if (tallies.empty()) throw InvalidArgument("EMPTY_CORPUS", "layer " + layer_name + " annotates no tweet");

  CorpusStats stats;
  for (const auto& [language, t] : tallies) {
    LanguageStats s;
    s.tweets = t.tweets;
    s.argumentative = t.argumentative;
    s.pct_non_argumentative = pct(t.tweets - t.argumentative, t.tweets);
    s.pct_with_collective_property_pair = pct(t.pair, t.tweets);
    s.pct_with_pivot = pct(t.pivot, t.tweets);
    s.justification = distribution(t.types[0]);
    s.conclusion = distribution(t.types[1]);
    stats.languages.emplace(language, s);
  }
  return stats;
}

std::string CorpusStats::to_json() const {
  nlohmann::ordered_json out = nlohmann::ordered_json::object();
  for (const auto& [language, s] : languages) {
    nlohmann::ordered_json row;
    row["tweets"] = s.tweets;
    row["argumentative"] = s.argumentative;
    row["pct_non_argumentative"] = s.pct_non_argumentative;
    row["pct_with_collective_property_pair"] = s.pct_with_collective_property_pair;
    row["pct_with_pivot"] = s.pct_with_pivot;
    row["justification"] = distribution_json(s.justification);
    row["conclusion"] = distribution_json(s.conclusion);
    out[std::string(to_string(language))] = std::move(row);
  }
  return out.dump(2) + "\n";
}

std::string CorpusStats::to_table() const {
  std::string out;
  char buf[160];
  std::snprintf(buf, sizeof buf, "%-10s %9s %11s %9s\n", "", "Non-Arg", "Collective", "Pivot");
  out += buf;
  for (const auto& [language, s] : languages) {
    std::snprintf(buf, sizeof buf, "%-10s %8.1f%% %10.1f%% %8.1f%%\n",
                  language == Language::EN ? "English" : "Spanish", s.pct_non_argumentative,
                  s.pct_with_collective_property_pair, s.pct_with_pivot);
    out += buf;
  }
  out += '\n';
  std::snprintf(buf, sizeof buf, "%-10s %23s   %23s\n", "", "Justification", "Conclusion");
  out += buf;
  std::snprintf(buf, sizeof buf, "%-10s %7s %7s %7s   %7s %7s %7s\n", "", "F", "P", "V", "F", "P", "V");
  out += buf;
  for (const auto& [language, s] : languages) {
    std::snprintf(buf, sizeof buf, "%-10s %6.1f%% %6.1f%% %6.1f%%   %6.1f%% %6.1f%% %6.1f%%\n",
                  language == Language::EN ? "English" : "Spanish", s.justification.fact,
                  s.justification.policy, s.justification.value, s.conclusion.fact,
                  s.conclusion.policy, s.conclusion.value);
    out += buf;
  }
  return out;
}

}  // namespace argmine
