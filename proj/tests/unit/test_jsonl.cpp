#include <fstream>
#include <sstream>

#include "argmine/errors.hpp"
#include "argmine/jsonl.hpp"
#include "doctest.h"

using namespace argmine;

namespace {

std::size_t line_of(const std::string& content) {
  std::istringstream in(content);
  try {
    read_jsonl(in);
  } catch (const ParseError& e) {
    return e.line();
  }
  return 0;
}

std::string code_of(const std::string& content) {
  std::istringstream in(content);
  try {
    read_jsonl(in);
  } catch (const Error& e) {
    return e.code();
  }
  return "";
}

}  // namespace

TEST_CASE("fixture corpus round-trips through JSONL byte for byte") {
  for (const char* name : {"corpus.jsonl", "dual.jsonl"}) {
    const std::string path = std::string(ARGMINE_FIXTURE_DIR) + "/" + name;
    const auto corpus = read_jsonl_file(path);
    CHECK(corpus.size() == 36);
    std::ostringstream out;
    write_jsonl(corpus, out);
    std::istringstream in(out.str());
    CHECK(read_jsonl(in) == corpus);
    std::ifstream original(path);
    std::ostringstream bytes;
    bytes << original.rdbuf();
    CHECK(out.str() == bytes.str());
  }
}

TEST_CASE("every key is written, null when absent") {
  AnnotatedCorpus c;
  c.add_tweet(Tweet("t", Language::EN, "hello world", SourceFlags{true, false, false}));
  c.add_annotation("a", "t", {});
  std::ostringstream out;
  write_jsonl(c, out);
  CHECK(out.str() ==
        "{\"id\":\"t\",\"language\":\"en\",\"text\":\"hello world\",\"source_flags\":{\"hate_speech\":true,"
        "\"targeted_individual\":false,\"aggressive\":false},\"layers\":{\"a\":{\"argumentative\":false,"
        "\"justification\":null,\"conclusion\":null,\"collective\":null,\"property\":null,\"pivot\":null}}}\n");
}

TEST_CASE("schema violations carry their line number") {
  const std::string good = R"({"id":"a","language":"en","text":"x","source_flags":null,"layers":{}})";
  CHECK(line_of(good + "\n" + R"({"id":"b","language":"en","source_flags":null,"layers":{}})") == 2);
  CHECK(code_of(R"({"id":"b","language":"en","source_flags":null,"layers":{}})") == "MISSING_FIELD");
  CHECK(code_of(R"({"id":"b","language":"fr","text":"x","source_flags":null,"layers":{}})") == "UNKNOWN_LANGUAGE");
  CHECK(code_of("{not json") == "INVALID_JSON");
  CHECK(line_of(good + "\n\n" + "{not json") == 3);
  CHECK(code_of(good + "\n" + good) == "DUPLICATE_TWEET");
  CHECK(code_of(R"({"id":"a","language":"en","text":"x","source_flags":null,"layers":{"l":{"argumentative":true,)"
                R"("justification":{"fragments":[[0,9]],"type":"fact"},"conclusion":null,"collective":null,)"
                R"("property":null,"pivot":null}}})") == "SPAN_OUT_OF_BOUNDS");
  CHECK(line_of(std::string(R"({"id":"a","language":"en","text":")") + "\xFF" + R"(","source_flags":null,"layers":{}})") ==
        1);
}
