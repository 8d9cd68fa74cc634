#include <algorithm>
#include <random>

#include "argmine/errors.hpp"
#include "argmine/jsonl.hpp"
#include "argmine/stats.hpp"
#include "doctest.h"

using namespace argmine;

namespace {

AnnotatedCorpus load() { return read_jsonl_file(std::string(ARGMINE_FIXTURE_DIR) + "/corpus.jsonl"); }

AnnotatedCorpus shuffled(const AnnotatedCorpus& c, std::uint64_t seed) {
  std::vector<Tweet> tweets = c.tweets();
  std::shuffle(tweets.begin(), tweets.end(), std::mt19937_64(seed));
  AnnotatedCorpus out;
  for (const auto& t : tweets) out.add_tweet(t);
  for (const auto& [name, layer] : c.layers()) {
    for (const auto& [id, a] : layer.annotations) out.add_annotation(name, id, a);
  }
  return out;
}

}  // namespace

TEST_CASE("single argumentative tweet with pivot and pair") {
  AnnotatedCorpus c;
  c.add_tweet(Tweet("t", Language::EN, "They steal our jobs so deport them all now"));
  ArgumentAnnotation a;
  a.argumentative = true;
  a.justification = Premise{Span(0, 19), PropositionType::Fact};
  a.conclusion = Premise{Span(23, 42), PropositionType::Policy};
  a.collective = Span(0, 4);
  a.property = Span(5, 19);
  a.pivot = Pivot{Span(0, 4), Span(30, 34)};
  c.add_annotation("x", "t", a);
  const auto s = corpus_stats(c, "x").languages.at(Language::EN);
  CHECK(s.pct_non_argumentative == 0.0);
  CHECK(s.pct_with_collective_property_pair == 100.0);
  CHECK(s.pct_with_pivot == 100.0);
  CHECK(s.justification.fact == 100.0);
  CHECK(s.conclusion.policy == 100.0);
}

TEST_CASE("fixture counts by hand") {
  const auto s = corpus_stats(load(), "a1");
  const auto& en = s.languages.at(Language::EN);
  CHECK(en.tweets == 26);
  CHECK(en.argumentative == 20);
  CHECK(en.pct_non_argumentative == doctest::Approx(600.0 / 26));
  const auto& es = s.languages.at(Language::ES);
  CHECK(es.tweets == 10);
  CHECK(es.pct_non_argumentative == doctest::Approx(20.0));
  for (const auto& [lang, ls] : s.languages) {
    for (const auto* d : {&ls.justification, &ls.conclusion}) {
      CHECK(d->fact + d->policy + d->value == doctest::Approx(100.0));
    }
    CHECK(ls.pct_with_collective_property_pair <= 100.0 - ls.pct_non_argumentative + 1e-9);
    CHECK(ls.pct_with_pivot <= 100.0 - ls.pct_non_argumentative + 1e-9);
  }
}

TEST_CASE("stats do not depend on tweet order") {
  const auto c = load();
  const auto base = corpus_stats(c, "a1").to_json();
  for (std::uint64_t seed : {1, 2, 3}) CHECK(corpus_stats(shuffled(c, seed), "a1").to_json() == base);
}

TEST_CASE("table shapes") {
  const auto table = corpus_stats(load(), "a1").to_table();
  CHECK(table.find("Non-Arg") != std::string::npos);
  CHECK(table.find("English") < table.find("Spanish"));
  AnnotatedCorpus empty;
  empty.add_tweet(Tweet("t", Language::EN, "x"));
  empty.add_annotation("x", "t", {});
  CHECK_NOTHROW(corpus_stats(empty, "x"));
  AnnotatedCorpus none;
  CHECK_THROWS_AS(corpus_stats(none, "x"), InvalidArgument);
}
