#include <filesystem>
#include <functional>
#include <fstream>
#include <sstream>

#include "argmine/errors.hpp"
#include "argmine/jsonl.hpp"
#include "argmine/standoff.hpp"
#include "doctest.h"

using namespace argmine;
namespace fs = std::filesystem;

namespace {

const std::string kText = "Illegals are flooding our schools!!!!! Deport them NOW 🔥";

std::string code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return "";
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream b;
  b << in.rdbuf();
  return b.str();
}

}  // namespace

TEST_CASE("parse a complete argument") {
  const std::string ann =
      "T1\tArgumentative 0 56\tIllegals are flooding our schools!!!!! Deport them NOW 🔥\n"
      "T2\tJustification 0 38\tIllegals are flooding our schools!!!!!\n"
      "T3\tConclusion 39 54\tDeport them NOW\n"
      "T4\tCollective 0 8\tIllegals\n"
      "T5\tProperty 13 33\tflooding our schools\n"
      "T6\tPivotJ 0 8\tIllegals\n"
      "T7\tPivotC 46 50\tthem\n"
      "A1\tType T2 Fact\n"
      "A2\tType T3 Policy\n";
  const auto doc = parse_standoff("x", Language::EN, ann, kText);
  CHECK(doc.tweet.length() == 56);
  const auto& a = doc.annotation;
  CHECK(a.argumentative);
  CHECK(a.justification->span == Span(0, 38));
  CHECK(a.justification->type == PropositionType::Fact);
  CHECK(a.conclusion->type == PropositionType::Policy);
  CHECK(a.pivot->conclusion_side == Span(46, 50));
  CHECK(write_standoff(doc.tweet, a).ann == ann);
}

TEST_CASE("discontinuous spans use ';' and join covered text with a space") {
  const std::string ann =
      "T1\tJustification 0 8;13 21\tIllegals flooding\n"
      "T2\tConclusion 39 54\tDeport them NOW\n"
      "A1\tType T1 Value\n"
      "A2\tType T2 Policy\n";
  const auto doc = parse_standoff("x", Language::EN, ann, kText);
  CHECK(doc.annotation.argumentative);  // no marker: inferred from the premises
  CHECK(doc.annotation.justification->span == Span({Fragment(0, 8), Fragment(13, 21)}));
}

TEST_CASE("notes are ignored and duplicate pivot entries merge") {
  const std::string ann =
      "#1\tAnnotatorNotes T2\tunsure\n"
      "T1\tJustification 0 38\tIllegals are flooding our schools!!!!!\n"
      "T2\tConclusion 39 54\tDeport them NOW\n"
      "T3\tPivotJ 0 8\tIllegals\n"
      "T4\tPivotJ 13 21\tflooding\n"
      "T5\tPivotC 46 50\tthem\n"
      "A1\tType T1 Fact\n"
      "A2\tType T2 Policy\n";
  const auto doc = parse_standoff("x", Language::EN, ann, kText);
  CHECK(doc.annotation.pivot->justification_side == Span({Fragment(0, 8), Fragment(13, 21)}));
}

TEST_CASE("malformed files are rejected with stable codes and line numbers") {
  auto parse = [](const std::string& ann) { return [ann] { parse_standoff("x", Language::EN, ann, kText); }; };
  CHECK(code_of(parse("T1\tCollective 5 2\tx\n")) == "MALFORMED_OFFSETS");
  CHECK(code_of(parse("T1\tCollective 0 80\tx\n")) == "OFFSET_OUT_OF_BOUNDS");
  CHECK(code_of(parse("T1\tCollective 0 8\tIllegal\n")) == "COVERED_TEXT_MISMATCH");
  CHECK(code_of(parse("T1\tTarget 0 8\tIllegals\n")) == "UNKNOWN_LABEL");
  CHECK(code_of(parse("R1\tRel Arg1:T1 Arg2:T2\n")) == "UNKNOWN_ENTRY");
  CHECK(code_of(parse("T1\tCollective 0 8\tIllegals\nT1\tProperty 13 21\tflooding\n")) == "DUPLICATE_ENTRY_ID");
  CHECK(code_of(parse("T1\tJustification 0 8\tIllegals\nT2\tJustification 13 21\tflooding\n")) ==
        "DUPLICATE_JUSTIFICATION");
  CHECK(code_of(parse("T1\tArgumentative 0 56\tx\nT2\tNonArgumentative 0 56\tx\n")) != "");
  CHECK(code_of(parse("T1\tConclusion 39 54\tDeport them NOW\nT2\tJustification 0 8\tIllegals\nA1\tType T2 Fact\n")) ==
        "MISSING_TYPE");
  CHECK(code_of(parse("T1\tCollective 0 8\tIllegals\nA1\tType T1 Fact\n")) == "ATTRIBUTE_ON_NON_PREMISE");
  CHECK(code_of(parse("T1\tJustification 0 8\tIllegals\nT2\tConclusion 39 54\tDeport them NOW\n"
                      "A1\tType T1 Fact\nA2\tType T2 Policy\nT3\tPivotJ 0 8\tIllegals\n")) == "INCOMPLETE_PIVOT");
  try {
    parse_standoff("x", Language::EN, "T1\tCollective 0 8\tIllegals\nT2\tProperty 13 21\tfloodin\n", kText);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
  }
}

TEST_CASE("lenient validation errors surface as parse errors") {
  CHECK(code_of([] {
          parse_standoff("x", Language::EN, "T1\tNonArgumentative 0 56\t" + kText + "\nT2\tCollective 0 8\tIllegals\n",
                         kText);
        }) == "COMPONENT_ON_NON_ARGUMENTATIVE");
}

TEST_CASE("tabs and newlines in the text are flattened in covered text") {
  const std::string text = "line one\nline\ttwo";
  Tweet t("x", Language::EN, text);
  ArgumentAnnotation a;
  a.argumentative = true;
  a.justification = Premise{Span(0, 8), PropositionType::Fact};
  a.conclusion = Premise{Span(5, 17), PropositionType::Value};
  const auto files = write_standoff(t, a);
  CHECK(files.ann.find("one line two") != std::string::npos);
  const auto back = parse_standoff("x", Language::EN, files.ann, files.txt);
  CHECK(back.annotation == a);
}

TEST_CASE("fixture standoff round-trips byte for byte") {
  const fs::path root = fs::path(ARGMINE_FIXTURE_DIR) / "standoff";
  int files = 0;
  for (const auto& layer : {"a1", "a2"}) {
    for (const auto& lang : {"en", "es"}) {
      for (const auto& item : fs::directory_iterator(root / layer / lang)) {
        if (item.path().extension() != ".ann") continue;
        auto txt = item.path();
        txt.replace_extension(".txt");
        const auto ann = slurp(item.path());
        const auto doc = parse_standoff(item.path().stem().string(), parse_language(lang), ann, slurp(txt));
        const auto files_out = write_standoff(doc.tweet, doc.annotation);
        CHECK(files_out.ann == ann);
        CHECK(files_out.txt == slurp(txt));
        ++files;
      }
    }
  }
  CHECK(files >= 30);
}

TEST_CASE("directory ingest matches the fixture JSONL for any job count") {
  const fs::path root = fs::path(ARGMINE_FIXTURE_DIR);
  const auto expected = read_jsonl_file((root / "corpus.jsonl").string());
  for (unsigned jobs : {1u, 4u}) {
    AnnotatedCorpus c;
    read_standoff_directory(root / "standoff/a1/en", Language::EN, "a1", c, jobs);
    read_standoff_directory(root / "standoff/a1/es", Language::ES, "a1", c, jobs);
    CHECK(c == expected);
  }
}

TEST_CASE("a second layer over different text is a conflict") {
  AnnotatedCorpus c;
  c.add_tweet(Tweet("en-001", Language::EN, "different text"));
  CHECK(code_of([&] {
          read_standoff_directory(fs::path(ARGMINE_FIXTURE_DIR) / "standoff/a1/en", Language::EN, "a1", c);
        }) == "TEXT_CONFLICT");
}
