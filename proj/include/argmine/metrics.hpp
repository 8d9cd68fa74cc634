#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "argmine/agreement.hpp"
#include "argmine/corpus_model.hpp"

namespace argmine {

struct PRF {
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
};

struct ConfusionCounts {
  std::uint64_t tp = 0;
  std::uint64_t fp = 0;
  std::uint64_t fn = 0;

  ConfusionCounts& operator+=(const ConfusionCounts& o) {
    tp += o.tp;
    fp += o.fp;
    fn += o.fn;
    return *this;
  }
  // Zero denominators give 0 for the affected quantity.
  PRF prf() const;
};

// Positive class = set flag. Throws InvalidArgument("LENGTH_MISMATCH").
ConfusionCounts token_counts(const std::vector<bool>& gold, const std::vector<bool>& pred);
PRF token_prf(const std::vector<bool>& gold, const std::vector<bool>& pred);

enum class Averaging { TargetClass, Macro, PerClass };

struct SequenceScore {
  PRF headline;                        // target class or macro
  std::map<std::string, PRF> per_class;  // every domain class
};

// Per-class one-vs-rest scores over the whole domain; Macro averages P, R
// and F1 separately over every domain class, present in the data or not.
// Throws InvalidArgument on length mismatch or a label outside the domain.
SequenceScore sequence_prf(const std::vector<std::string>& gold, const std::vector<std::string>& pred,
                           const std::vector<std::string>& domain, Averaging averaging,
                           const std::string& target_class = {});

struct RunAggregate {
  double mean_f1 = 0.0;
  double std_f1 = 0.0;  // population standard deviation
  double mean_precision = 0.0;
  double mean_recall = 0.0;
  std::vector<PRF> runs;
};

// Throws InvalidArgument("EMPTY_INPUT") on no runs.
RunAggregate aggregate_runs(const std::vector<PRF>& runs);

// Layer a is gold, layer b the prediction. Span categories pool token counts
// over shared tweets without harmonization; Argumentative scores the
// argumentative class; types use the macro over fact/value/policy on tweets
// where both layers carry the premise.
PRF human_baseline_f1(const AnnotatedCorpus& corpus, const std::string& layer_a,
                      const std::string& layer_b, AgreementCategory category);

}  // namespace argmine
