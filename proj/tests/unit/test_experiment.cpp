#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "argmine/errors.hpp"
#include "argmine/experiment.hpp"
#include "argmine/jsonl.hpp"
#include "argmine/tokenizer.hpp"
#include "doctest.h"
#include "json.hpp"
#include "oracles.hpp"
#include "synthetic.hpp"

using namespace argmine;

namespace {

const AnnotatedCorpus& big() {
  static const AnnotatedCorpus c = synthetic::corpus(970, 196);
  return c;
}

const AnnotatedCorpus& fixture() {
  static const AnnotatedCorpus c = read_jsonl_file(std::string(ARGMINE_FIXTURE_DIR) + "/corpus.jsonl");
  return c;
}

const Normalizer& normalizer() {
  static const Normalizer n = Normalizer::load(ARGMINE_TEST_DATA_DIR);
  return n;
}

std::size_t count_lang(const std::vector<std::string>& ids, const char* prefix) {
  return std::count_if(ids.begin(), ids.end(), [&](const std::string& id) { return id.rfind(prefix, 0) == 0; });
}

ExperimentManifest fixture_manifest(Task task) {
  std::ifstream in(std::string(ARGMINE_FIXTURE_DIR) + "/runs/" + std::string(to_string(task)) +
                   ".seed1.manifest.json");
  std::ostringstream b;
  b << in.rdbuf();
  return ExperimentManifest::from_json(b.str());
}

}  // namespace

TEST_CASE("names round-trip") {
  for (auto t : kAllTasks) CHECK(parse_task(to_string(t)) == t);
  for (auto s : {Scheme::MonoEN, Scheme::MixENES, Scheme::CrossLingual}) CHECK(parse_scheme(to_string(s)) == s);
  CHECK_THROWS_AS(parse_task("claims"), InvalidArgument);
}

TEST_CASE("split sizes per scheme") {
  auto m = make_partitions(big(), Scheme::MonoEN, Task::Argumentative, 7);
  CHECK(m.train.size() == 770);
  CHECK(m.dev.size() == 100);
  CHECK(m.test.size() == 100);
  CHECK(count_lang(m.train, "es") == 0);

  m = make_partitions(big(), Scheme::MixENES, Task::Pivot, 7);
  CHECK(count_lang(m.train, "en") == 770);
  CHECK(count_lang(m.train, "es") == 120);
  CHECK(count_lang(m.dev, "en") == 100);
  CHECK(count_lang(m.dev, "es") == 26);
  CHECK(count_lang(m.test, "en") == 100);
  CHECK(count_lang(m.test, "es") == 50);

  m = make_partitions(big(), Scheme::CrossLingual, Task::Pivot, 7);
  CHECK(m.train.size() == 850);
  CHECK(count_lang(m.train, "es") == 0);
  CHECK(m.dev.size() == 120);
  CHECK(m.test.size() == 196);
  CHECK(count_lang(m.test, "es") == 196);
}

TEST_CASE("splits are disjoint, seeded and independent of corpus order") {
  const auto a = make_partitions(big(), Scheme::MixENES, Task::Argumentative, 11);
  std::set<std::string> all;
  for (const auto* split : {&a.train, &a.dev, &a.test}) all.insert(split->begin(), split->end());
  CHECK(all.size() == a.train.size() + a.dev.size() + a.test.size());
  CHECK(make_partitions(big(), Scheme::MixENES, Task::Argumentative, 11).to_json() == a.to_json());
  CHECK(make_partitions(big(), Scheme::MixENES, Task::Argumentative, 12).train != a.train);

  AnnotatedCorpus reversed;
  for (auto it = big().tweets().rbegin(); it != big().tweets().rend(); ++it) reversed.add_tweet(*it);
  CHECK(make_partitions(reversed, Scheme::MixENES, Task::Argumentative, 11).train == a.train);
}

TEST_CASE("too few tweets") {
  try {
    make_partitions(synthetic::corpus(970, 195), Scheme::CrossLingual, Task::Pivot, 1);
    FAIL("expected INSUFFICIENT_TWEETS");
  } catch (const InvalidArgument& e) {
    CHECK(e.code() == "INSUFFICIENT_TWEETS");
  }
}

TEST_CASE("fraction subsets are nested and rounded") {
  const auto full = make_partitions(big(), Scheme::MonoEN, Task::Justification, 3);
  CHECK(subsample_train(full, 1.0, 3).train == full.train);
  const auto q = subsample_train(full, 0.25, 3), h = subsample_train(full, 0.5, 3), t = subsample_train(full, 0.75, 3);
  CHECK(q.train.size() == 193);
  CHECK(h.train.size() == 385);
  CHECK(t.train.size() == 578);
  CHECK(h.dev == full.dev);
  CHECK(h.test == full.test);
  CHECK(h.train_fraction == 0.5);
  auto subset = [](const std::vector<std::string>& a, const std::vector<std::string>& b) {
    const std::set<std::string> sb(b.begin(), b.end());
    return std::all_of(a.begin(), a.end(), [&](const std::string& x) { return sb.count(x) > 0; });
  };
  CHECK(subset(q.train, h.train));
  CHECK(subset(h.train, t.train));
  CHECK(subset(t.train, full.train));
  CHECK_THROWS_AS(subsample_train(full, 0.3, 3), InvalidArgument);
  CHECK_THROWS_AS(subsample_train(h, 0.25, 3), InvalidArgument);
}

TEST_CASE("manifest json round-trips and carries the grid") {
  auto m = make_partitions(big(), Scheme::MonoEN, Task::TypeOfBoth, 5);
  m = subsample_train(m, 0.75, 5);
  const auto back = ExperimentManifest::from_json(m.to_json());
  CHECK(back.to_json() == m.to_json());
  const auto j = nlohmann::json::parse(m.to_json());
  CHECK(j["grid"]["learning_rates"].size() == 5);
  CHECK(j["grid"]["batch_size"] == 16);
  CHECK(j["grid"]["selection_metric"] == "macro_f1");
  CHECK(default_grid(Task::Pivot).selection_metric == "target_f1");
  CHECK_THROWS_AS(ExperimentManifest::from_json("{\"scheme\":\"mono-en\"}"), ParseError);
}

TEST_CASE("argumentative instances keep every tweet") {
  const auto m = fixture_manifest(Task::Argumentative);
  const auto set = task_instances(fixture(), "a1", m, normalizer());
  CHECK(set.file("train").sequences.size() == 20);
  CHECK(set.file("test").ids() == m.test);
  CHECK_THROWS_AS(set.file("test_conclusion"), InvalidArgument);
}

TEST_CASE("span tasks drop non-argumentative tweets and label normalized tokens") {
  const auto m = fixture_manifest(Task::Justification);
  const auto set = task_instances(fixture(), "a1", m, normalizer());
  const auto& test = set.file("test");
  CHECK(test.token_level);
  std::size_t argumentative = 0;
  for (const auto& id : m.test) argumentative += fixture().layer("a1").find(id)->argumentative;
  CHECK(test.blocks.size() == argumentative);
  for (const auto& b : test.blocks) {
    const auto n = normalizer().normalize(*fixture().find(b.tweet_id));
    CHECK(b.tokens == tokenize(std::string_view(n.text)));
  }
}

TEST_CASE("joint task labels are ternary") {
  const auto m = fixture_manifest(Task::JointCollectiveProperty);
  const auto set = task_instances(fixture(), "a1", m, normalizer());
  std::set<std::string> seen;
  for (const auto& b : set.file("train").blocks) seen.insert(b.labels.begin(), b.labels.end());
  CHECK(seen == std::set<std::string>{"COLLECTIVE", "PROPERTY", "OUT"});
}

TEST_CASE("type of both trains on both premises and tests three ways") {
  const auto m = fixture_manifest(Task::TypeOfBoth);
  const auto set = task_instances(fixture(), "a1", m, normalizer());
  std::size_t arg_train = 0, arg_test = 0;
  for (const auto& id : m.train) arg_train += fixture().layer("a1").find(id)->argumentative;
  for (const auto& id : m.test) arg_test += fixture().layer("a1").find(id)->argumentative;
  CHECK(set.file("train").sequences.size() == 2 * arg_train);
  CHECK(set.file("test").sequences.size() == 2 * arg_test);
  CHECK(set.file("test_justification").sequences.size() == arg_test);
  CHECK(set.file("test_conclusion").sequences.size() == arg_test);
  for (const auto& s : set.file("test_conclusion").sequences) CHECK(s.id.find("#conclusion") != std::string::npos);

  const auto j = task_instances(fixture(), "a1",
                                [&] {
                                  auto x = m;
                                  x.task = Task::TypeOfJustification;
                                  return x;
                                }(),
                                normalizer());
  CHECK(j.file("test").sequences == set.file("test_justification").sequences);
}

TEST_CASE("premise text comes from the normalized text") {
  AnnotatedCorpus c;
  c.add_tweet(Tweet("t", Language::EN, "@bob says they steal!!!!! so #DeportThem"));
  ArgumentAnnotation a;
  a.argumentative = true;
  a.justification = Premise{Span({Fragment(0, 4), Fragment(10, 25)}), PropositionType::Fact};
  a.conclusion = Premise{Span(29, 40), PropositionType::Policy};
  c.add_annotation("g", "t", a);
  ExperimentManifest m;
  m.task = Task::TypeOfBoth;
  m.test = {"t"};
  const auto set = task_instances(c, "g", m, normalizer());
  const auto& s = set.file("test").sequences;
  REQUIRE(s.size() == 2);
  CHECK(s[0].id == "t#justification");
  CHECK(s[0].text == "@usuario they steal!!!");
  CHECK(s[0].label == "fact");
  CHECK(s[1].text == "hashtag deport them");
}

TEST_CASE("missing annotations are reported") {
  auto m = fixture_manifest(Task::Argumentative);
  m.test.push_back("nope");
  CHECK_THROWS_AS(task_instances(fixture(), "a1", m, normalizer()), InvalidArgument);
}

TEST_CASE("prediction files round-trip") {
  const std::vector<Prediction> preds{{"a", {"IN", "OUT"}, ""}, {"b#conclusion", {}, "fact"}};
  std::ostringstream out;
  write_predictions(preds, out);
  std::istringstream in(out.str());
  const auto back = read_predictions(in);
  REQUIRE(back.size() == 2);
  CHECK(back[0].labels == preds[0].labels);
  CHECK(back[1].label == "fact");
  std::istringstream bad("{\"id\":\"a\",\"labels\":[]}\n{\"label\":\"x\"}\n");
  try {
    read_predictions(bad);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
  }
}

TEST_CASE("gold predictions score perfectly") {
  for (auto task : {Task::Argumentative, Task::Justification, Task::JointCollectiveProperty, Task::TypeOfBoth}) {
    const auto m = fixture_manifest(task);
    const auto set = task_instances(fixture(), "a1", m, normalizer());
    for (const auto& f : set.files) {
      if (f.name.rfind("test", 0) != 0) continue;
      const auto gold = gold_predictions(f);
      const auto s = score_predictions(m, fixture(), "a1", normalizer(), gold, f.name);
      double want = 1.0;
      if (is_type_task(task)) {
        // An absent type contributes 0 to the full-domain macro.
        std::set<std::string> used;
        for (const auto& p : gold) used.insert(p.label);
        want = used.size() / 3.0;
      }
      CHECK(s.headline.f1 == doctest::Approx(want));
      for (const auto& [name, prf] : s.per_class) CHECK((prf.f1 == 1.0 || prf.f1 == 0.0));
    }
  }
}

TEST_CASE("coverage mismatches are rejected") {
  const auto m = fixture_manifest(Task::Justification);
  const auto set = task_instances(fixture(), "a1", m, normalizer());
  auto preds = gold_predictions(set.file("test"));
  auto code = [&](const std::vector<Prediction>& p) {
    try {
      score_predictions(m, fixture(), "a1", normalizer(), p);
    } catch (const InvalidArgument& e) {
      return e.code();
    }
    return std::string();
  };
  auto fewer = preds;
  fewer.pop_back();
  CHECK(code(fewer) == "COVERAGE_MISMATCH");
  auto shorter = preds;
  shorter[0].labels.pop_back();
  CHECK(code(shorter) == "COVERAGE_MISMATCH");
  auto renamed = preds;
  renamed[0].id = "other";
  CHECK(code(renamed) == "COVERAGE_MISMATCH");
  auto dup = preds;
  dup.push_back(dup[0]);
  CHECK(code(dup) == "COVERAGE_MISMATCH");
  auto bad_label = preds;
  bad_label[0].labels[0] = "MAYBE";
  CHECK(code(bad_label) == "UNKNOWN_CLASS");
}

TEST_CASE("fixture predictions score like the counting oracle") {
  const std::string dir = std::string(ARGMINE_FIXTURE_DIR) + "/runs/";
  for (auto task : {Task::Argumentative, Task::Justification, Task::JointCollectiveProperty, Task::TypeOfBoth}) {
    for (int seed = 1; seed <= 3; ++seed) {
      const std::string stem = dir + std::string(to_string(task)) + ".seed" + std::to_string(seed);
      std::ifstream mf(stem + ".manifest.json");
      std::ostringstream mb;
      mb << mf.rdbuf();
      const auto m = ExperimentManifest::from_json(mb.str());
      std::ifstream pf(stem + ".predictions.jsonl");
      const auto preds = read_predictions(pf);
      const auto got = score_predictions(m, fixture(), "a1", normalizer(), preds);

      // Oracle: pool gold/pred labels by id, then count.
      const auto gold = gold_predictions(task_instances(fixture(), "a1", m, normalizer()).file("test"));
      std::map<std::string, Prediction> by_id;
      for (const auto& p : preds) by_id[p.id] = p;
      std::vector<std::string> g, p;
      for (const auto& x : gold) {
        const auto& y = by_id.at(x.id);
        if (x.labels.empty()) {
          g.push_back(x.label);
          p.push_back(y.label);
        } else {
          g.insert(g.end(), x.labels.begin(), x.labels.end());
          p.insert(p.end(), y.labels.begin(), y.labels.end());
        }
      }
      double f1 = 0;
      if (task == Task::Argumentative) {
        f1 = oracle::one_vs_rest<std::string>(g, p, "argumentative").f1();
      } else if (task == Task::Justification) {
        f1 = oracle::one_vs_rest<std::string>(g, p, "IN").f1();
      } else if (task == Task::JointCollectiveProperty) {
        f1 = (oracle::one_vs_rest<std::string>(g, p, "COLLECTIVE").f1() +
              oracle::one_vs_rest<std::string>(g, p, "PROPERTY").f1()) / 2;
      } else {
        for (const char* c : {"fact", "value", "policy"}) f1 += oracle::one_vs_rest<std::string>(g, p, c).f1() / 3;
      }
      CHECK(std::abs(got.headline.f1 - f1) < 1e-12);
      CHECK(got.headline.f1 < 1.0);
    }
  }
}
