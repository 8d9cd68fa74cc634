#include "argmine/errors.hpp"
#include "argmine/jsonl.hpp"
#include "argmine/token_export.hpp"
#include "argmine/utf8.hpp"
#include "doctest.h"

using namespace argmine;

namespace {

const std::u32string kText = U"They steal our jobs so deport them all now";

ArgumentAnnotation annotation() {
  ArgumentAnnotation a;
  a.argumentative = true;
  a.justification = Premise{Span(0, 19), PropositionType::Fact};
  a.conclusion = Premise{Span(23, 42), PropositionType::Policy};
  a.collective = Span(0, 4);
  a.property = Span(0, 19);
  a.pivot = Pivot{Span(0, 4), Span(30, 34)};
  return a;
}

}  // namespace

TEST_CASE("binary labels per token") {
  const auto b = label_block("t", kText, annotation(), Component::Conclusion);
  CHECK(b.labels == std::vector<std::string>{"OUT", "OUT", "OUT", "OUT", "OUT", "IN", "IN", "IN", "IN"});
  const auto p = label_block("t", kText, annotation(), Component::Pivot);
  CHECK(p.labels == std::vector<std::string>{"IN", "OUT", "OUT", "OUT", "OUT", "OUT", "IN", "OUT", "OUT"});
}

TEST_CASE("joint labels give precedence to the first component") {
  std::vector<std::string> warnings;
  const auto b = label_block("t", kText, annotation(), JointPair::CollectiveProperty, &warnings);
  CHECK(b.labels == std::vector<std::string>{"COLLECTIVE", "PROPERTY", "PROPERTY", "PROPERTY", "OUT", "OUT", "OUT",
                                             "OUT", "OUT"});
  CHECK(warnings.size() == 1);
}

TEST_CASE("export targets parse") {
  CHECK(std::get<Component>(parse_export_target("pivot")) == Component::Pivot);
  CHECK(std::get<JointPair>(parse_export_target("justification+conclusion")) == JointPair::JustificationConclusion);
  CHECK_THROWS_AS(parse_export_target("collective+pivot"), InvalidArgument);
  CHECK_THROWS_AS(parse_export_target("claim"), InvalidArgument);
}

TEST_CASE("CoNLL output parses back") {
  const auto corpus = read_jsonl_file(std::string(ARGMINE_FIXTURE_DIR) + "/corpus.jsonl");
  const auto result = export_token_classification(corpus, "a1", Component::Justification);
  CHECK(result.blocks.size() == corpus.size());
  const auto parsed = parse_conll(format_conll(result.blocks));
  REQUIRE(parsed.size() == result.blocks.size());
  for (std::size_t i = 0; i < parsed.size(); ++i) {
    CHECK(parsed[i].tweet_id == result.blocks[i].tweet_id);
    CHECK(parsed[i].labels == result.blocks[i].labels);
    REQUIRE(parsed[i].tokens.size() == result.blocks[i].tokens.size());
    for (std::size_t k = 0; k < parsed[i].tokens.size(); ++k) {
      CHECK(parsed[i].tokens[k].text == result.blocks[i].tokens[k].text);
    }
  }
  CHECK_THROWS_AS(parse_conll("tok\tIN\n"), ParseError);
}

TEST_CASE("normalized export labels handles inside spans") {
  AnnotatedCorpus c;
  c.add_tweet(Tweet("t", Language::EN, "@someone is right, deport them"));
  ArgumentAnnotation a;
  a.argumentative = true;
  a.justification = Premise{Span(0, 17), PropositionType::Value};
  a.conclusion = Premise{Span(19, 30), PropositionType::Policy};
  c.add_annotation("x", "t", a);
  const auto n = Normalizer(std::map<Language, SegmentationLexicon>{{Language::EN, SegmentationLexicon({"a"})},
                                                                    {Language::ES, SegmentationLexicon({"a"})}},
                            EmojiTable());
  const auto r = export_token_classification(c, "x", Component::Justification, &n);
  REQUIRE(r.blocks.size() == 1);
  CHECK(r.blocks[0].tokens[0].text == "@usuario");
  CHECK(r.blocks[0].labels == std::vector<std::string>{"IN", "IN", "IN", "OUT", "OUT", "OUT"});
}
