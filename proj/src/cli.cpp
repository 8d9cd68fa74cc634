#include "argmine/cli.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "argmine/agreement.hpp"
#include "argmine/errors.hpp"
#include "argmine/experiment.hpp"
#include "argmine/hateval.hpp"
#include "argmine/jsonl.hpp"
#include "argmine/metrics.hpp"
#include "argmine/plot.hpp"
#include "argmine/report.hpp"
#include "argmine/resources.hpp"
#include "argmine/standoff.hpp"
#include "argmine/stats.hpp"
#include "argmine/validate.hpp"
#include "json.hpp"

namespace argmine::cli {

namespace {

namespace fs = std::filesystem;

// Bad option values found after parsing; reported like CLI11 usage errors.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("IO_ERROR", path + ": cannot open");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("IO_ERROR", path + ": cannot write");
  out << content;
  if (!out) throw Error("IO_ERROR", path + ": write failed");
}

// Writes to `path`, or to `out` when the path is empty or "-".
void emit(const std::string& path, const std::string& content, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << content;
  } else {
    write_file(path, content);
  }
}

AnnotatedCorpus load_corpus(const std::string& path) {
  try {
    return read_jsonl_file(path);
  } catch (const ParseError& e) {
    throw ParseError(e.code(), path + ": " + e.what());
  }
}

std::string pick_layer(const AnnotatedCorpus& corpus, const std::string& requested) {
  if (!requested.empty()) {
    if (!corpus.has_layer(requested)) throw UsageError("no annotation layer named '" + requested + "'");
    return requested;
  }
  if (corpus.layers().size() != 1) {
    throw UsageError("corpus has " + std::to_string(corpus.layers().size()) +
                     " annotation layers; pick one with --layer");
  }
  return corpus.layers().begin()->first;
}

Language language_option(const std::string& name) {
  try {
    return parse_language(name);
  } catch (const Error&) {
    throw UsageError("unknown language '" + name + "'");
  }
}

template <typename F>
auto usage_guard(F&& parse) {
  try {
    return parse();
  } catch (const InvalidArgument& e) {
    throw UsageError(e.what());
  }
}

struct Options {
  std::string data_dir;
  unsigned jobs = 1;

  // ingest
  std::string en_dir, es_dir, annotator = "annotator", base, hateval, hateval_language = "en";
  // shared
  std::string corpus, layer, output;
  bool json = false;
  // validate
  bool strict = false;
  // normalize
  std::string text, language = "en";
  // agreement
  std::string layer_a, layer_b;
  bool human_f1 = false;
  // export
  std::string manifest, target;
  // plan
  std::string scheme = "mono-en", task = "argumentative";
  std::uint64_t seed = 0;
  double fraction = 1.0;
  // score
  std::vector<std::string> manifests, predictions;
  std::string setting = "model", test_file = "test", merge;
  // plot
  std::string report, plot_setting;
};

int do_ingest(const Options& o, std::ostream& out, std::ostream& err) {
  AnnotatedCorpus corpus;
  if (!o.base.empty()) corpus = load_corpus(o.base);
  if (!o.hateval.empty()) {
    std::ifstream in(o.hateval);
    if (!in) throw Error("IO_ERROR", o.hateval + ": cannot open");
    const auto kept = filter_hateval(read_hateval_tsv(in, language_option(o.hateval_language)));
    for (const auto& t : kept) corpus.add_tweet(t);
    err << "kept " << kept.size() << " tweets from " << o.hateval << '\n';
  }
  if (!o.en_dir.empty()) read_standoff_directory(o.en_dir, Language::EN, o.annotator, corpus, o.jobs);
  if (!o.es_dir.empty()) read_standoff_directory(o.es_dir, Language::ES, o.annotator, corpus, o.jobs);
  std::ostringstream buf;
  write_jsonl(corpus, buf);
  emit(o.output, buf.str(), out);
  return kExitOk;
}

int do_validate(const Options& o, std::ostream& out, std::ostream& err) {
  const auto corpus = load_corpus(o.corpus);
  const auto mode = o.strict ? ValidationMode::Strict : ValidationMode::Lenient;
  std::vector<std::string> layers;
  if (o.layer.empty()) {
    for (const auto& [name, layer] : corpus.layers()) layers.push_back(name);
  } else {
    layers.push_back(pick_layer(corpus, o.layer));
  }
  std::size_t errors = 0, warnings = 0;
  nlohmann::ordered_json issues = nlohmann::ordered_json::array();
  for (const auto& name : layers) {
    const auto& layer = corpus.layer(name);
    for (const auto& tweet : corpus.tweets()) {
      const auto* annotation = layer.find(tweet.id());
      if (!annotation) continue;
      const auto report = validate(tweet, *annotation, mode);
      errors += report.error_count();
      warnings += report.warning_count();
      for (const auto& issue : report.issues) {
        if (o.json) {
          nlohmann::ordered_json j;
          j["layer"] = name;
          j["tweet"] = tweet.id();
          j["severity"] = std::string(to_string(issue.severity));
          j["code"] = issue.code;
          j["message"] = issue.message;
          issues.push_back(std::move(j));
        } else {
          out << name << '\t' << tweet.id() << '\t' << to_string(issue.severity) << '\t' << issue.code
              << '\t' << issue.message << '\n';
        }
      }
    }
  }
  if (o.json) out << issues.dump(2) << '\n';
  err << errors << " errors, " << warnings << " warnings\n";
  return errors ? kExitInvalid : kExitOk;
}

int do_normalize(const Options& o, std::ostream& out) {
  const auto normalizer = Normalizer::load(data_directory(
      o.data_dir.empty() ? std::nullopt : std::optional<fs::path>(o.data_dir)));
  if (!o.text.empty()) {
    out << normalizer.normalize(o.text, language_option(o.language)).text << '\n';
    return kExitOk;
  }
  const auto corpus = load_corpus(o.corpus);
  std::ostringstream buf;
  for (const auto& tweet : corpus.tweets()) {
    nlohmann::ordered_json j;
    j["id"] = tweet.id();
    j["language"] = std::string(to_string(tweet.language()));
    j["text"] = normalizer.normalize(tweet).text;
    buf << j.dump() << '\n';
  }
  emit(o.output, buf.str(), out);
  return kExitOk;
}

int do_stats(const Options& o, std::ostream& out) {
  const auto corpus = load_corpus(o.corpus);
  const auto stats = corpus_stats(corpus, pick_layer(corpus, o.layer));
  emit(o.output, o.json ? stats.to_json() : stats.to_table(), out);
  return kExitOk;
}

int do_agreement(const Options& o, std::ostream& out) {
  const auto corpus = load_corpus(o.corpus);
  const auto a = pick_layer(corpus, o.layer_a);
  const auto b = pick_layer(corpus, o.layer_b);
  const auto report = agreement_report(corpus, a, b);
  std::string text = o.json ? report.to_json() : report.to_table();
  if (o.human_f1) {
    std::ostringstream buf;
    nlohmann::ordered_json j;
    if (!o.json) buf << "\nHuman F1 (" << a << " as gold)\n";
    for (const auto& [category, agreement] : report.categories) {
      std::optional<PRF> prf;
      try {
        prf = human_baseline_f1(corpus, a, b, category);
      } catch (const InvalidArgument&) {
      }
      if (o.json) {
        j[std::string(to_string(category))] =
            prf ? nlohmann::ordered_json{{"precision", prf->precision}, {"recall", prf->recall}, {"f1", prf->f1}}
                : nlohmann::ordered_json();
      } else {
        std::string name(display_name(category));
        name.resize(std::max<std::size_t>(name.size(), 16), ' ');
        buf << name << "  " << (prf ? format_score(prf->f1) : std::string("n/a")) << '\n';
      }
    }
    if (o.json) {
      auto merged = nlohmann::ordered_json::parse(text);
      merged["human_f1"] = j;
      text = merged.dump(2) + "\n";
    } else {
      text += buf.str();
    }
  }
  emit(o.output, text, out);
  return kExitOk;
}

ExperimentManifest load_manifest(const std::string& path) {
  try {
    return ExperimentManifest::from_json(read_file(path));
  } catch (const ParseError& e) {
    throw ParseError(e.code(), path + ": " + e.what());
  }
}

Normalizer load_normalizer(const Options& o) {
  return Normalizer::load(data_directory(o.data_dir.empty() ? std::nullopt : std::optional<fs::path>(o.data_dir)));
}

int do_export(const Options& o, std::ostream& out, std::ostream& err) {
  const auto corpus = load_corpus(o.corpus);
  const auto layer = pick_layer(corpus, o.layer);
  const auto normalizer = load_normalizer(o);
  if (!o.target.empty()) {
    const auto target = usage_guard([&] { return parse_export_target(o.target); });
    const auto result = export_token_classification(corpus, layer, target, &normalizer);
    for (const auto& w : result.warnings) err << "warning: " << w << '\n';
    emit(o.output, format_conll(result.blocks), out);
    return kExitOk;
  }
  if (o.output.empty() || o.output == "-") throw UsageError("export with --manifest needs an output directory");
  const auto manifest = load_manifest(o.manifest);
  const auto instances = task_instances(corpus, layer, manifest, normalizer);
  fs::create_directories(o.output);
  for (const auto& w : instances.warnings) err << "warning: " << w << '\n';
  for (const auto& file : instances.files) {
    write_file((fs::path(o.output) / (file.name + file.extension())).string(), file.render());
    out << file.name << file.extension() << '\t' << file.ids().size() << '\n';
  }
  return kExitOk;
}

int do_plan(const Options& o, std::ostream& out) {
  const auto corpus = load_corpus(o.corpus);
  const auto scheme = usage_guard([&] { return parse_scheme(o.scheme); });
  const auto task = usage_guard([&] { return parse_task(o.task); });
  auto manifest = make_partitions(corpus, scheme, task, o.seed);
  if (o.fraction != 1.0) {
    manifest = usage_guard([&] { return subsample_train(manifest, o.fraction, o.seed); });
  }
  emit(o.output, manifest.to_json(), out);
  return kExitOk;
}

int do_score(const Options& o, std::ostream& out) {
  if (o.manifests.size() != o.predictions.size()) {
    throw UsageError("--manifest and --predictions must be given the same number of times");
  }
  const auto corpus = load_corpus(o.corpus);
  const auto layer = pick_layer(corpus, o.layer);
  const auto normalizer = load_normalizer(o);
  std::vector<RunScore> runs;
  for (std::size_t i = 0; i < o.manifests.size(); ++i) {
    const auto manifest = load_manifest(o.manifests[i]);
    std::ifstream in(o.predictions[i]);
    if (!in) throw Error("IO_ERROR", o.predictions[i] + ": cannot open");
    std::vector<Prediction> predictions;
    try {
      predictions = read_predictions(in);
    } catch (const ParseError& e) {
      throw ParseError(e.code(), o.predictions[i] + ": " + e.what());
    }
    RunScore run;
    run.setting = o.setting;
    run.scheme = manifest.scheme;
    run.fraction = manifest.train_fraction;
    run.seed = manifest.seed;
    run.test_file = o.test_file;
    try {
      run.score = score_predictions(manifest, corpus, layer, normalizer, predictions, o.test_file);
    } catch (const InvalidArgument& e) {
      throw InvalidArgument(e.code(), o.predictions[i] + ": " + e.what());
    }
    runs.push_back(std::move(run));
  }
  auto report = build_report(runs);
  if (!o.merge.empty() && fs::exists(o.merge)) {
    report = merge_reports(MetricsReport::from_json(read_file(o.merge)), report);
  }
  if (!o.output.empty() && o.output != "-") {
    write_file(o.output, report.to_json());
  }
  if (o.json) {
    if (o.output.empty() || o.output == "-") out << report.to_json();
  } else {
    out << report.detection_table();
    const auto types = report.type_table();
    if (types.find('\n', types.find('\n', types.find('\n') + 1) + 1) != std::string::npos) {
      out << '\n' << types;
    }
  }
  return kExitOk;
}

int do_plot(const Options& o, std::ostream& out) {
  const auto report = MetricsReport::from_json(read_file(o.report));
  PlotOptions options;
  options.scheme = usage_guard([&] { return parse_scheme(o.scheme); });
  if (!o.plot_setting.empty()) options.setting = o.plot_setting;
  options.test_file = o.test_file;
  emit(o.output, ablation_svg(report, options), out);
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Argument annotation toolkit for hate tweets", "argmine"};
  app.require_subcommand(1);
  app.option_defaults()->always_capture_default();
  app.add_option("--data", o.data_dir, "Lexicon/emoji directory (default: $ARGMINE_DATA)");
  app.add_option("--jobs", o.jobs, "Worker threads")->check(CLI::Range(1u, 256u));

  auto* ingest = app.add_subcommand("ingest", "Standoff directories or a HatEval file to JSONL");
  ingest->add_option("--en", o.en_dir, "English standoff directory")->check(CLI::ExistingDirectory);
  ingest->add_option("--es", o.es_dir, "Spanish standoff directory")->check(CLI::ExistingDirectory);
  ingest->add_option("--annotator", o.annotator, "Layer name for the standoff annotations");
  ingest->add_option("--base", o.base, "Existing JSONL corpus to add to")->check(CLI::ExistingFile);
  ingest->add_option("--hateval", o.hateval, "HatEval TSV/CSV; keeps HS=1, AG=0, TR=0")->check(CLI::ExistingFile);
  ingest->add_option("--hateval-language", o.hateval_language, "Language of the HatEval file");
  ingest->add_option("-o,--output", o.output, "Output JSONL (default stdout)");

  auto* val = app.add_subcommand("validate", "Check annotations against the protocol");
  val->add_option("corpus", o.corpus)->required()->check(CLI::ExistingFile);
  val->add_option("--layer", o.layer, "Only this layer");
  val->add_flag("--strict", o.strict, "Treat every violation as an error");
  val->add_flag("--json", o.json);

  auto* norm = app.add_subcommand("normalize", "Normalize tweet text");
  norm->add_option("corpus", o.corpus)->check(CLI::ExistingFile);
  norm->add_option("--text", o.text, "Normalize one string instead of a corpus");
  norm->add_option("--language", o.language, "Language of --text");
  norm->add_option("-o,--output", o.output);

  auto* stats = app.add_subcommand("stats", "Corpus statistics per language");
  stats->add_option("corpus", o.corpus)->required()->check(CLI::ExistingFile);
  stats->add_option("--layer", o.layer);
  stats->add_flag("--json", o.json);
  stats->add_option("-o,--output", o.output);

  auto* agree = app.add_subcommand("agreement", "Cohen's kappa between two annotation layers");
  agree->add_option("corpus", o.corpus)->required()->check(CLI::ExistingFile);
  agree->add_option("--a", o.layer_a, "First layer")->required();
  agree->add_option("--b", o.layer_b, "Second layer")->required();
  agree->add_flag("--human-f1", o.human_f1, "Also score layer b against layer a");
  agree->add_flag("--json", o.json);
  agree->add_option("-o,--output", o.output);

  auto* exp = app.add_subcommand("export", "Write task instance files");
  exp->add_option("corpus", o.corpus)->required()->check(CLI::ExistingFile);
  exp->add_option("--layer", o.layer);
  auto* manifest_opt = exp->add_option("--manifest", o.manifest, "Manifest for train/dev/test files")
                           ->check(CLI::ExistingFile);
  auto* target_opt =
      exp->add_option("--target", o.target, "Whole-corpus CoNLL for a component or a+b joint pair");
  manifest_opt->excludes(target_opt);
  exp->add_option("-o,--output", o.output, "Output directory (--manifest) or file (--target)");

  auto* plan = app.add_subcommand("plan", "Write an experiment manifest");
  plan->add_option("corpus", o.corpus)->required()->check(CLI::ExistingFile);
  plan->add_option("--scheme", o.scheme, "mono-en, mix-en-es or cross-lingual");
  plan->add_option("--task", o.task);
  plan->add_option("--seed", o.seed)->required();
  plan->add_option("--fraction", o.fraction, "Training fraction: 0.25, 0.5, 0.75 or 1");
  plan->add_option("-o,--output", o.output);

  auto* score = app.add_subcommand("score", "Score prediction files into a metrics report");
  score->add_option("corpus", o.corpus)->required()->check(CLI::ExistingFile);
  score->add_option("--layer", o.layer, "Gold layer");
  score->add_option("--manifest", o.manifests, "Manifest, once per run")->required()->check(CLI::ExistingFile);
  score->add_option("--predictions", o.predictions, "Prediction JSONL, once per run")
      ->required()
      ->check(CLI::ExistingFile);
  score->add_option("--setting", o.setting, "Model setting label");
  score->add_option("--test-file", o.test_file, "test, test_justification or test_conclusion");
  score->add_option("--merge", o.merge, "Report JSON to merge into");
  score->add_flag("--json", o.json);
  score->add_option("-o,--output", o.output, "Report JSON path");

  auto* plot = app.add_subcommand("plot", "Training-size ablation curves as SVG");
  plot->add_option("report", o.report)->required()->check(CLI::ExistingFile);
  plot->add_option("--scheme", o.scheme);
  plot->add_option("--setting", o.plot_setting);
  plot->add_option("--test-file", o.test_file);
  plot->add_option("-o,--output", o.output);

  std::vector<std::string> argv_store{"argmine"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_store) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*ingest) {
      if (o.en_dir.empty() && o.es_dir.empty() && o.hateval.empty()) {
        throw UsageError("ingest needs --en, --es or --hateval");
      }
      return do_ingest(o, out, err);
    }
    if (*val) return do_validate(o, out, err);
    if (*norm) {
      if (o.corpus.empty() == o.text.empty()) throw UsageError("normalize needs a corpus or --text");
      return do_normalize(o, out);
    }
    if (*stats) return do_stats(o, out);
    if (*agree) return do_agreement(o, out);
    if (*exp) {
      if (o.manifest.empty() && o.target.empty()) throw UsageError("export needs --manifest or --target");
      return do_export(o, out, err);
    }
    if (*plan) return do_plan(o, out);
    if (*score) return do_score(o, out);
    if (*plot) return do_plot(o, out);
  } catch (const UsageError& e) {
    err << "argmine: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "argmine: " << e.code() << ": " << e.what() << '\n';
    return kExitInvalid;
  } catch (const fs::filesystem_error& e) {
    err << "argmine: " << e.what() << '\n';
    return kExitInvalid;
  }
  return kExitUsage;
}

int run(int argc, const char* const* argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run(args, std::cout, std::cerr);
}

}  // namespace argmine::cli
