#include "argmine/experiment.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <ostream>
#include <random>
#include <set>

#include "argmine/errors.hpp"
#include "argmine/utf8.hpp"
#include "json.hpp"

namespace argmine {

namespace {

struct TaskName {
  Task task;
  std::string_view name;
};

constexpr TaskName kTaskNames[] = {
    {Task::Argumentative, "argumentative"},
    {Task::Collective, "collective"},
    {Task::Property, "property"},
    {Task::Pivot, "pivot"},
    {Task::Justification, "justification"},
    {Task::Conclusion, "conclusion"},
    {Task::JointCollectiveProperty, "joint-collective-property"},
    {Task::JointJustificationConclusion, "joint-justification-conclusion"},
    {Task::TypeOfJustification, "type-of-justification"},
    {Task::TypeOfConclusion, "type-of-conclusion"},
    {Task::TypeOfBoth, "type-of-both"},
};

}  // namespace

std::string_view to_string(Scheme scheme) {
  switch (scheme) {
    case Scheme::MonoEN: return "mono-en";
    case Scheme::MixENES: return "mix-en-es";
    case Scheme::CrossLingual: return "cross-lingual";
  }
  return "mono-en";
}

Scheme parse_scheme(std::string_view name) {
  for (auto s : {Scheme::MonoEN, Scheme::MixENES, Scheme::CrossLingual}) {
    if (name == to_string(s)) return s;
  }
  throw InvalidArgument("UNKNOWN_SCHEME", "unknown scheme '" + std::string(name) + "'");
}

std::string_view to_string(Task task) {
  for (const auto& t : kTaskNames) {
    if (t.task == task) return t.name;
  }
  return "argumentative";
}

Task parse_task(std::string_view name) {
  for (const auto& t : kTaskNames) {
    if (t.name == name) return t.task;
  }
  throw InvalidArgument("UNKNOWN_TASK", "unknown task '" + std::string(name) + "'");
}

bool is_token_task(Task task) {
  return task != Task::Argumentative && !is_type_task(task);
}

bool is_type_task(Task task) {
  return task == Task::TypeOfJustification || task == Task::TypeOfConclusion ||
         task == Task::TypeOfBoth;
}

SplitSizes split_sizes(Scheme scheme) {
  switch (scheme) {
    case Scheme::MonoEN: return {770, 0, 100, 0, 100, 0};
    case Scheme::MixENES: return {770, 120, 100, 26, 100, 50};
    case Scheme::CrossLingual: return {850, 0, 120, 0, 0, 196};
  }
  return {};
}

HyperGrid default_grid(Task task) {
  HyperGrid grid;
  grid.selection_metric = is_type_task(task) ? "macro_f1" : "target_f1";
  return grid;
}

namespace {

// Portable Fisher-Yates: std::shuffle and std::uniform_int_distribution are
// implementation-defined, so the bounded draw is done by rejection here.
void seeded_shuffle(std::vector<std::string>& items, std::mt19937_64& engine) {
  for (std::size_t i = items.size(); i > 1; --i) {
    const std::uint64_t bound = i;
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                std::numeric_limits<std::uint64_t>::max() % bound;
    std::uint64_t draw;
    do {
      draw = engine();
    } while (draw >= limit);
    std::swap(items[i - 1], items[draw % bound]);
  }
}

nlohmann::ordered_json grid_to_json(const HyperGrid& g) {
  nlohmann::ordered_json out;
  out["learning_rates"] = g.learning_rates;
  out["batch_size"] = g.batch_size;
  out["max_epochs"] = g.max_epochs;
  out["dropout"] = g.dropout;
  out["weight_decay"] = g.weight_decay;
  out["optimizer"] = g.optimizer;
  out["adam_epsilon"] = g.adam_epsilon;
  out["adam_beta1"] = g.adam_beta1;
  out["adam_beta2"] = g.adam_beta2;
  out["early_stopping_patience"] = g.early_stopping_patience;
  out["selection_metric"] = g.selection_metric;
  return out;
}

}  // namespace

std::string ExperimentManifest::to_json() const {
  nlohmann::ordered_json out;
  out["scheme"] = std::string(argmine::to_string(scheme));
  out["task"] = std::string(argmine::to_string(task));
  out["seed"] = seed;
  out["fraction"] = train_fraction;
  out["train"] = train;
  out["dev"] = dev;
  out["test"] = test;
  out["grid"] = grid_to_json(grid);
  return out.dump(2) + "\n";
}

ExperimentManifest ExperimentManifest::from_json(std::string_view text) {
  try {
    const auto j = nlohmann::json::parse(text);
    ExperimentManifest m;
    m.scheme = parse_scheme(j.at("scheme").get<std::string>());
    m.task = parse_task(j.at("task").get<std::string>());
    m.seed = j.at("seed").get<std::uint64_t>();
    m.train_fraction = j.at("fraction").get<double>();
    m.train = j.at("train").get<std::vector<std::string>>();
    m.dev = j.at("dev").get<std::vector<std::string>>();
    m.test = j.at("test").get<std::vector<std::string>>();
    const auto& g = j.at("grid");
    m.grid.learning_rates = g.at("learning_rates").get<std::vector<double>>();
    m.grid.batch_size = g.at("batch_size").get<int>();
    m.grid.max_epochs = g.at("max_epochs").get<int>();
    m.grid.dropout = g.at("dropout").get<double>();
    m.grid.weight_decay = g.at("weight_decay").get<double>();
    m.grid.optimizer = g.at("optimizer").get<std::string>();
    m.grid.adam_epsilon = g.at("adam_epsilon").get<double>();
    m.grid.adam_beta1 = g.at("adam_beta1").get<double>();
    m.grid.adam_beta2 = g.at("adam_beta2").get<double>();
    m.grid.early_stopping_patience = g.at("early_stopping_patience").get<int>();
    m.grid.selection_metric = g.at("selection_metric").get<std::string>();
    return m;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError("BAD_MANIFEST", e.what());
  } catch (const InvalidArgument& e) {
    throw ParseError(e.code(), e.what());
  }
}

ExperimentManifest make_partitions(const AnnotatedCorpus& corpus, Scheme scheme, Task task,
                                   std::uint64_t seed) {
  std::vector<std::string> en, es;
  for (const auto& t : corpus.tweets()) (t.language() == Language::EN ? en : es).push_back(t.id());
  std::sort(en.begin(), en.end());
  std::sort(es.begin(), es.end());

  const auto sizes = split_sizes(scheme);
  const std::size_t need_en = sizes.train_en + sizes.dev_en + sizes.test_en;
  const std::size_t need_es = sizes.train_es + sizes.dev_es + sizes.test_es;
  if (en.size() < need_en || es.size() < need_es) {
    throw InvalidArgument("INSUFFICIENT_TWEETS",
                          std::string(to_string(scheme)) + " needs " + std::to_string(need_en) +
                              " EN and " + std::to_string(need_es) + " ES tweets, corpus has " +
                              std::to_string(en.size()) + " EN and " + std::to_string(es.size()) +
                              " ES");
  }

  std::mt19937_64 engine(seed);
  seeded_shuffle(en, engine);
  seeded_shuffle(es, engine);

  ExperimentManifest m;
  m.scheme = scheme;
  m.task = task;
  m.seed = seed;
  m.grid = default_grid(task);
  auto take = [](const std::vector<std::string>& pool, std::size_t from, std::size_t count,
                 std::vector<std::string>& into) {
    into.insert(into.end(), pool.begin() + static_cast<std::ptrdiff_t>(from),
                pool.begin() + static_cast<std::ptrdiff_t>(from + count));
  };
  take(en, 0, sizes.train_en, m.train);
  take(es, 0, sizes.train_es, m.train);
  take(en, sizes.train_en, sizes.dev_en, m.dev);
  take(es, sizes.train_es, sizes.dev_es, m.dev);
  take(en, sizes.train_en + sizes.dev_en, sizes.test_en, m.test);
  take(es, sizes.train_es + sizes.dev_es, sizes.test_es, m.test);
  return m;
}

ExperimentManifest subsample_train(const ExperimentManifest& manifest, double fraction,
                                   std::uint64_t seed) {
  constexpr double kFractions[] = {0.25, 0.5, 0.75, 1.0};
  if (std::find(std::begin(kFractions), std::end(kFractions), fraction) == std::end(kFractions)) {
    throw InvalidArgument("INVALID_FRACTION", "fraction must be one of 0.25, 0.5, 0.75, 1.0");
  }
  if (manifest.train_fraction != 1.0) {
    throw InvalidArgument("INVALID_FRACTION", "can only subsample a full training list");
  }
  ExperimentManifest out = manifest;
  out.train_fraction = fraction;
  if (fraction == 1.0) return out;

  auto order = manifest.train;
  std::mt19937_64 engine(seed);
  seeded_shuffle(order, engine);
  const auto keep = static_cast<std::size_t>(std::lround(fraction * static_cast<double>(order.size())));
  const std::set<std::string> kept(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(keep));
  out.train.clear();
  for (const auto& id : manifest.train) {
    if (kept.count(id)) out.train.push_back(id);
  }
  return out;
}

std::vector<std::string> label_domain(Task task) {
  switch (task) {
    case Task::Argumentative: return {"argumentative", "non_argumentative"};
    case Task::JointCollectiveProperty:
      return {joint_label(Component::Collective), joint_label(Component::Property),
              std::string(kOutsideLabel)};
    case Task::JointJustificationConclusion:
      return {joint_label(Component::Justification), joint_label(Component::Conclusion),
              std::string(kOutsideLabel)};
    case Task::TypeOfJustification:
    case Task::TypeOfConclusion:
    case Task::TypeOfBoth: return {"fact", "value", "policy"};
    default: return {std::string(kInsideLabel), std::string(kOutsideLabel)};
  }
}

std::vector<std::string> InstanceFile::ids() const {
  std::vector<std::string> out;
  if (token_level) {
    for (const auto& b : blocks) out.push_back(b.tweet_id);
  } else {
    for (const auto& s : sequences) out.push_back(s.id);
  }
  return out;
}

std::string InstanceFile::render() const {
  if (token_level) return format_conll(blocks);
  std::string out;
  for (const auto& s : sequences) {
    nlohmann::ordered_json row;
    row["id"] = s.id;
    row["text"] = s.text;
    row["label"] = s.label;
    out += row.dump() + '\n';
  }
  return out;
}

const InstanceFile& InstanceSet::file(std::string_view name) const {
  for (const auto& f : files) {
    if (f.name == name) return f;
  }
  throw InvalidArgument("UNKNOWN_SPLIT", "no instance file named '" + std::string(name) + "'");
}

namespace {

ExportTarget export_target(Task task) {
  switch (task) {
    case Task::Collective: return Component::Collective;
    case Task::Property: return Component::Property;
    case Task::Pivot: return Component::Pivot;
    case Task::Justification: return Component::Justification;
    case Task::Conclusion: return Component::Conclusion;
    case Task::JointCollectiveProperty: return JointPair::CollectiveProperty;
    case Task::JointJustificationConclusion: return JointPair::JustificationConclusion;
    default: break;
  }
  throw InvalidArgument("UNKNOWN_TASK", "task has no token export target");
}

std::string premise_text(std::u32string_view text, const Span& span) {
  std::u32string out;
  for (const auto& f : span.fragments()) {
    if (!out.empty()) out += U' ';
    out += text.substr(f.start, f.size());
  }
  return utf8::encode(out);
}

struct Split {
  std::string name;
  const std::vector<std::string>* ids;
  bool justifications;
  bool conclusions;
};

}  // namespace

InstanceSet task_instances(const AnnotatedCorpus& corpus, const std::string& layer_name,
                           const ExperimentManifest& manifest, const Normalizer& normalizer) {
  const auto& layer = corpus.layer(layer_name);
  const Task task = manifest.task;
  const bool want_j = task == Task::TypeOfJustification || task == Task::TypeOfBoth;
  const bool want_c = task == Task::TypeOfConclusion || task == Task::TypeOfBoth;

  std::vector<Split> splits = {{"train", &manifest.train, want_j, want_c},
                               {"dev", &manifest.dev, want_j, want_c},
                               {"test", &manifest.test, want_j, want_c}};
  if (task == Task::TypeOfBoth) {
    splits.push_back({"test_justification", &manifest.test, true, false});
    splits.push_back({"test_conclusion", &manifest.test, false, true});
  }

  InstanceSet set;
  for (const auto& split : splits) {
    InstanceFile file;
    file.name = split.name;
    file.token_level = is_token_task(task);
    for (const auto& id : *split.ids) {
      const auto* tweet = corpus.find(id);
      const auto* annotation = layer.find(id);
      if (!tweet || !annotation) {
        throw InvalidArgument("MISSING_ANNOTATION", "layer " + layer_name + " has no annotation for " + id);
      }
      const auto normalized = normalizer.normalize(*tweet);
      if (task == Task::Argumentative) {
        file.sequences.push_back({id, normalized.text,
                                  annotation->argumentative ? "argumentative" : "non_argumentative"});
        continue;
      }
      if (!annotation->argumentative) continue;
      const auto projected = project_annotation(*annotation, normalized);
      const auto text = utf8::decode(normalized.text);
      if (file.token_level) {
        file.blocks.push_back(label_block(id, text, projected, export_target(task), &set.warnings));
        continue;
      }
      if (split.justifications && projected.justification) {
        file.sequences.push_back({id + "#justification", premise_text(text, projected.justification->span),
                                  std::string(to_string(projected.justification->type))});
      }
      if (split.conclusions && projected.conclusion) {
        file.sequences.push_back({id + "#conclusion", premise_text(text, projected.conclusion->span),
                                  std::string(to_string(projected.conclusion->type))});
      }
    }
    set.files.push_back(std::move(file));
  }
  return set;
}

std::vector<Prediction> read_predictions(std::istream& in) {
  std::vector<Prediction> out;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      const auto j = nlohmann::json::parse(line);
      Prediction p;
      p.id = j.at("id").get<std::string>();
      if (j.contains("labels")) {
        p.labels = j.at("labels").get<std::vector<std::string>>();
      } else {
        p.label = j.at("label").get<std::string>();
      }
      out.push_back(std::move(p));
    } catch (const nlohmann::json::exception& e) {
      throw ParseError("BAD_PREDICTION", e.what(), line_no);
    }
  }
  return out;
}

void write_predictions(const std::vector<Prediction>& predictions, std::ostream& out) {
  for (const auto& p : predictions) {
    nlohmann::ordered_json row;
    row["id"] = p.id;
    if (p.label.empty()) {
      row["labels"] = p.labels;
    } else {
      row["label"] = p.label;
    }
    out << row.dump() << '\n';
  }
}

std::vector<Prediction> gold_predictions(const InstanceFile& file) {
  std::vector<Prediction> out;
  if (file.token_level) {
    for (const auto& b : file.blocks) out.push_back({b.tweet_id, b.labels, {}});
  } else {
    for (const auto& s : file.sequences) out.push_back({s.id, {}, s.label});
  }
  return out;
}

ScoreEntry score_predictions(const ExperimentManifest& manifest, const AnnotatedCorpus& corpus,
                             const std::string& gold_layer, const Normalizer& normalizer,
                             const std::vector<Prediction>& predictions, std::string_view test_file) {
  const auto instances = task_instances(corpus, gold_layer, manifest, normalizer);
  const auto gold = gold_predictions(instances.file(test_file));

  std::map<std::string, const Prediction*> by_id;
  for (const auto& p : predictions) {
    if (!by_id.emplace(p.id, &p).second) {
      throw InvalidArgument("COVERAGE_MISMATCH", "duplicate prediction for " + p.id);
    }
  }
  if (by_id.size() != gold.size()) {
    throw InvalidArgument("COVERAGE_MISMATCH", std::to_string(predictions.size()) +
                                                   " predictions for " + std::to_string(gold.size()) +
                                                   " test instances");
  }

  std::vector<std::string> gold_labels, pred_labels;
  for (const auto& g : gold) {
    auto it = by_id.find(g.id);
    if (it == by_id.end()) throw InvalidArgument("COVERAGE_MISMATCH", "no prediction for " + g.id);
    const auto& p = *it->second;
    if (is_token_task(manifest.task)) {
      if (p.labels.size() != g.labels.size()) {
        throw InvalidArgument("COVERAGE_MISMATCH", "prediction for " + g.id + " has " +
                                                       std::to_string(p.labels.size()) + " labels for " +
                                                       std::to_string(g.labels.size()) + " tokens");
      }
      gold_labels.insert(gold_labels.end(), g.labels.begin(), g.labels.end());
      pred_labels.insert(pred_labels.end(), p.labels.begin(), p.labels.end());
    } else {
      if (p.label.empty()) throw InvalidArgument("COVERAGE_MISMATCH", "prediction for " + g.id + " has no label");
      gold_labels.push_back(g.label);
      pred_labels.push_back(p.label);
    }
  }

  const auto domain = label_domain(manifest.task);
  ScoreEntry entry;
  entry.task = manifest.task;
  switch (manifest.task) {
    case Task::Argumentative:
      entry.headline =
          sequence_prf(gold_labels, pred_labels, domain, Averaging::TargetClass, "argumentative").headline;
      break;
    case Task::TypeOfJustification:
    case Task::TypeOfConclusion:
    case Task::TypeOfBoth: {
      auto score = sequence_prf(gold_labels, pred_labels, domain, Averaging::Macro);
      entry.headline = score.headline;
      entry.per_class = std::move(score.per_class);
      break;
    }
    case Task::JointCollectiveProperty:
    case Task::JointJustificationConclusion: {
      auto score = sequence_prf(gold_labels, pred_labels, domain, Averaging::PerClass);
      for (std::size_t c = 0; c < 2; ++c) {
        const auto& prf = score.per_class.at(domain[c]);
        entry.components[domain[c]] = prf;
        entry.headline.precision += prf.precision / 2;
        entry.headline.recall += prf.recall / 2;
        entry.headline.f1 += prf.f1 / 2;
      }
      break;
    }
    default: {
      std::vector<bool> g(gold_labels.size()), p(pred_labels.size());
      for (std::size_t i = 0; i < gold_labels.size(); ++i) {
        g[i] = gold_labels[i] == kInsideLabel;
        if (pred_labels[i] != kInsideLabel && pred_labels[i] != kOutsideLabel) {
          throw InvalidArgument("UNKNOWN_CLASS", "label '" + pred_labels[i] + "' not in IN/OUT");
        }
        p[i] = pred_labels[i] == kInsideLabel;
      }
      entry.headline = token_prf(g, p);
      break;
    }
  }
  return entry;
}

}  // namespace argmine
