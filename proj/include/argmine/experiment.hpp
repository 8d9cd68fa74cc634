#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "argmine/corpus_model.hpp"
#include "argmine/metrics.hpp"
#include "argmine/normalizer.hpp"
#include "argmine/token_export.hpp"

namespace argmine {

enum class Scheme { MonoEN, MixENES, CrossLingual };

enum class Task {
  Argumentative,
  Collective,
  Property,
  Pivot,
  Justification,
  Conclusion,
  JointCollectiveProperty,
  JointJustificationConclusion,
  TypeOfJustification,
  TypeOfConclusion,
  TypeOfBoth,
};

inline constexpr Task kAllTasks[] = {
    Task::Argumentative,           Task::Collective,
    Task::Property,                Task::Pivot,
    Task::Justification,           Task::Conclusion,
    Task::JointCollectiveProperty, Task::JointJustificationConclusion,
    Task::TypeOfJustification,     Task::TypeOfConclusion,
    Task::TypeOfBoth,
};

std::string_view to_string(Scheme scheme);
Scheme parse_scheme(std::string_view name);
std::string_view to_string(Task task);
Task parse_task(std::string_view name);

// Token-classification tasks (single components and joint pairs).
bool is_token_task(Task task);
bool is_type_task(Task task);

// Per-language split sizes at fraction 1.0.
struct SplitSizes {
  std::size_t train_en = 0, train_es = 0;
  std::size_t dev_en = 0, dev_es = 0;
  std::size_t test_en = 0, test_es = 0;
};
SplitSizes split_sizes(Scheme scheme);

struct HyperGrid {
  std::vector<double> learning_rates{1e-5, 2e-5, 5e-5, 5e-4, 5e-6};
  int batch_size = 16;
  int max_epochs = 10;
  double dropout = 0.1;
  double weight_decay = 0.01;
  std::string optimizer = "AdamW";
  double adam_epsilon = 1e-6;
  double adam_beta1 = 0.9;
  double adam_beta2 = 0.99;
  int early_stopping_patience = 2;
  // "target_f1" for detection tasks, "macro_f1" for type tasks; the trainer
  // keeps the (learning rate, epoch) maximizing this on dev.
  std::string selection_metric = "target_f1";
};

HyperGrid default_grid(Task task);

struct ExperimentManifest {
  Scheme scheme = Scheme::MonoEN;
  Task task = Task::Argumentative;
  std::uint64_t seed = 0;
  double train_fraction = 1.0;
  std::vector<std::string> train;
  std::vector<std::string> dev;
  std::vector<std::string> test;
  HyperGrid grid;

  std::string to_json() const;
  // Throws ParseError on schema violations.
  static ExperimentManifest from_json(std::string_view text);
};

// Tweet ids are sorted, then drawn without replacement per language by a
// seeded shuffle. Throws InvalidArgument("INSUFFICIENT_TWEETS").
ExperimentManifest make_partitions(const AnnotatedCorpus& corpus, Scheme scheme, Task task,
                                   std::uint64_t seed);

// Keeps round(fraction * n) training ids, the prefix of one seeded
// permutation so that smaller fractions nest in larger ones. Dev and test
// are untouched. Requires a full (fraction 1.0) manifest.
ExperimentManifest subsample_train(const ExperimentManifest& manifest, double fraction,
                                   std::uint64_t seed);

struct SequenceInstance {
  std::string id;
  std::string text;
  std::string label;

  bool operator==(const SequenceInstance&) const = default;
};

struct InstanceFile {
  std::string name;  // "train", "dev", "test", "test_justification", ...
  bool token_level = false;
  std::vector<LabeledBlock> blocks;           // token tasks
  std::vector<SequenceInstance> sequences;  // sequence tasks

  std::vector<std::string> ids() const;
  // CoNLL for token tasks, JSONL {"id","text","label"} otherwise.
  std::string render() const;
  std::string extension() const { return token_level ? ".conll" : ".jsonl"; }
};

struct InstanceSet {
  std::vector<InstanceFile> files;
  std::vector<std::string> warnings;

  // Throws InvalidArgument("UNKNOWN_SPLIT").
  const InstanceFile& file(std::string_view name) const;
};

// Label vocabulary of a task: IN/OUT, the joint triple, argumentative /
// non_argumentative, or fact/value/policy.
std::vector<std::string> label_domain(Task task);

// Builds train/dev/test instances on normalized text. Non-argumentative
// tweets are left out of token and type tasks. Type instances are
// "<tweet-id>#justification" / "#conclusion" carrying the premise text.
// TypeOfBoth adds test_justification and test_conclusion files.
// Throws InvalidArgument("MISSING_ANNOTATION") for an unannotated id.
InstanceSet task_instances(const AnnotatedCorpus& corpus, const std::string& layer,
                           const ExperimentManifest& manifest, const Normalizer& normalizer);

struct Prediction {
  std::string id;
  std::vector<std::string> labels;  // token tasks
  std::string label;                // sequence tasks
};

// JSONL {"id","labels":[...]} or {"id","label"}.
std::vector<Prediction> read_predictions(std::istream& in);
void write_predictions(const std::vector<Prediction>& predictions, std::ostream& out);

struct ScoreEntry {
  Task task = Task::Argumentative;
  PRF headline;
  std::map<std::string, PRF> per_class;   // type tasks: fact/value/policy
  std::map<std::string, PRF> components;  // joint tasks: each component's target class
};

// Scores predictions against the gold instances of `test_file`. Token tasks
// pool counts over all test tokens. Throws InvalidArgument("COVERAGE_MISMATCH")
// unless predictions and instances are in bijection with matching lengths.
ScoreEntry score_predictions(const ExperimentManifest& manifest, const AnnotatedCorpus& corpus,
                             const std::string& gold_layer, const Normalizer& normalizer,
                             const std::vector<Prediction>& predictions,
                             std::string_view test_file = "test");

// Gold labels of an instance file, as a prediction file would carry them.
std::vector<Prediction> gold_predictions(const InstanceFile& file);

}  // namespace argmine
