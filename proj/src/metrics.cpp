#include "argmine/metrics.hpp"

#include <algorithm>
#include <cmath>

#include "argmine/errors.hpp"
#include "argmine/tokenizer.hpp"

namespace argmine {

PRF ConfusionCounts::prf() const {
  PRF out;
  if (tp + fp > 0) out.precision = static_cast<double>(tp) / static_cast<double>(tp + fp);
  if (tp + fn > 0) out.recall = static_cast<double>(tp) / static_cast<double>(tp + fn);
  if (out.precision + out.recall > 0) {
    out.f1 = 2 * out.precision * out.recall / (out.precision + out.recall);
  }
  return out;
}

ConfusionCounts token_counts(const std::vector<bool>& gold, const std::vector<bool>& pred) {
  if (gold.size() != pred.size()) {
    throw InvalidArgument("LENGTH_MISMATCH", "gold and predicted masks differ in length");
  }
  ConfusionCounts c;
  for (std::size_t i = 0; i < gold.size(); ++i) {
    if (gold[i] && pred[i]) ++c.tp;
    else if (pred[i]) ++c.fp;
    else if (gold[i]) ++c.fn;
  }
  return c;
}

PRF token_prf(const std::vector<bool>& gold, const std::vector<bool>& pred) {
  return token_counts(gold, pred).prf();
}

SequenceScore sequence_prf(const std::vector<std::string>& gold, const std::vector<std::string>& pred,
                           const std::vector<std::string>& domain, Averaging averaging,
                           const std::string& target_class) {
  if (gold.size() != pred.size()) {
    throw InvalidArgument("LENGTH_MISMATCH", "gold and predicted labels differ in length");
  }
  auto index_of = [&](const std::string& label) {
    auto it = std::find(domain.begin(), domain.end(), label);
    if (it == domain.end()) throw InvalidArgument("UNKNOWN_CLASS", "label '" + label + "' not in domain");
    return static_cast<std::size_t>(it - domain.begin());
  };
  std::vector<ConfusionCounts> counts(domain.size());
  for (std::size_t i = 0; i < gold.size(); ++i) {
    const auto g = index_of(gold[i]);
    const auto p = index_of(pred[i]);
    if (g == p) {
      ++counts[g].tp;
    } else {
      ++counts[p].fp;
      ++counts[g].fn;
    }
  }
  SequenceScore score;
  for (std::size_t c = 0; c < domain.size(); ++c) score.per_class[domain[c]] = counts[c].prf();

  if (averaging == Averaging::TargetClass) {
    score.headline = counts[index_of(target_class)].prf();
  } else if (!domain.empty()) {
    for (const auto& [name, prf] : score.per_class) {
      score.headline.precision += prf.precision;
      score.headline.recall += prf.recall;
      score.headline.f1 += prf.f1;
    }
    const auto k = static_cast<double>(domain.size());
    score.headline.precision /= k;
    score.headline.recall /= k;
    score.headline.f1 /= k;
  }
  return score;
}

RunAggregate aggregate_runs(const std::vector<PRF>& runs) {
  if (runs.empty()) throw InvalidArgument("EMPTY_INPUT", "no runs to aggregate");
  RunAggregate out;
  out.runs = runs;
  const auto n = static_cast<double>(runs.size());
  for (const auto& r : runs) {
    out.mean_f1 += r.f1;
    out.mean_precision += r.precision;
    out.mean_recall += r.recall;
  }
  out.mean_f1 /= n;
  out.mean_precision /= n;
  out.mean_recall /= n;
  double var = 0.0;
  for (const auto& r : runs) var += (r.f1 - out.mean_f1) * (r.f1 - out.mean_f1);
  out.std_f1 = std::sqrt(var / n);
  return out;
}

PRF human_baseline_f1(const AnnotatedCorpus& corpus, const std::string& layer_a,
                      const std::string& layer_b, AgreementCategory category) {
  const auto tweets = shared_tweets(corpus, layer_a, layer_b);
  if (tweets.empty()) {
    throw InvalidArgument("EMPTY_INTERSECTION",
                          "layers " + layer_a + " and " + layer_b + " share no tweet");
  }
  const auto& gold = corpus.layer(layer_a);
  const auto& pred = corpus.layer(layer_b);

  if (category == AgreementCategory::Argumentative) {
    std::vector<std::string> g, p;
    for (const auto* t : tweets) {
      g.push_back(gold.find(t->id())->argumentative ? "argumentative" : "non_argumentative");
      p.push_back(pred.find(t->id())->argumentative ? "argumentative" : "non_argumentative");
    }
    return sequence_prf(g, p, {"argumentative", "non_argumentative"}, Averaging::TargetClass,
                        "argumentative")
        .headline;
  }

  if (category == AgreementCategory::TypeOfConclusion ||
      category == AgreementCategory::TypeOfJustification) {
    const bool conclusion = category == AgreementCategory::TypeOfConclusion;
    std::vector<std::string> g, p;
    for (const auto* t : tweets) {
      const auto& pg = conclusion ? gold.find(t->id())->conclusion : gold.find(t->id())->justification;
      const auto& pp = conclusion ? pred.find(t->id())->conclusion : pred.find(t->id())->justification;
      if (pg && pp) {
        g.emplace_back(to_string(pg->type));
        p.emplace_back(to_string(pp->type));
      }
    }
    return sequence_prf(g, p, {"fact", "value", "policy"}, Averaging::Macro).headline;
  }

  const Component component = *as_component(category);
  ConfusionCounts total;
  for (const auto* t : tweets) {
    const auto tokens = tokenize(std::u32string_view(t->code_points()));
    auto mask = [&](const ArgumentAnnotation& a) {
      if (auto span = component_span(a, component)) return span_to_token_mask(*span, tokens, t->length());
      return std::vector<bool>(tokens.size(), false);
    };
    total += token_counts(mask(*gold.find(t->id())), mask(*pred.find(t->id())));
  }
  return total.prf();
}

}  // namespace argmine
