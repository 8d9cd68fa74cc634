#include "argmine/jsonl.hpp"

#include <fstream>
#include <istream>
#include <ostream>

#include "argmine/errors.hpp"
#include "json.hpp"

namespace argmine {
namespace {

using ordered_json = nlohmann::ordered_json;
using json = nlohmann::json;

ordered_json span_to_json(const Span& span) {
  ordered_json fragments = ordered_json::array();
  for (const auto& f : span.fragments()) fragments.push_back({f.start, f.end});
  ordered_json out;
  out["fragments"] = std::move(fragments);
  return out;
}

ordered_json premise_to_json(const std::optional<Premise>& premise) {
  if (!premise) return nullptr;
  auto out = span_to_json(premise->span);
  out["type"] = std::string(to_string(premise->type));
  return out;
}

ordered_json optional_span_to_json(const std::optional<Span>& span) {
  return span ? span_to_json(*span) : ordered_json(nullptr);
}

ordered_json annotation_to_json(const ArgumentAnnotation& a) {
  ordered_json out;
  out["argumentative"] = a.argumentative;
  out["justification"] = premise_to_json(a.justification);
  out["conclusion"] = premise_to_json(a.conclusion);
  out["collective"] = optional_span_to_json(a.collective);
  out["property"] = optional_span_to_json(a.property);
  if (a.pivot) {
    ordered_json pivot;
    pivot["just_side"] = span_to_json(a.pivot->justification_side);
    pivot["conc_side"] = span_to_json(a.pivot->conclusion_side);
    out["pivot"] = std::move(pivot);
  } else {
    out["pivot"] = nullptr;
  }
  return out;
}

class LineReader {
 public:
  explicit LineReader(std::size_t line) : line_(line) {}

  [[noreturn]] void fail(const std::string& code, const std::string& message) const {
    throw ParseError(code, message, line_);
  }

  const json& require(const json& obj, const char* key) const {
    if (!obj.is_object()) fail("BAD_FIELD", "expected an object");
    auto it = obj.find(key);
    if (it == obj.end()) fail("MISSING_FIELD", std::string("missing \"") + key + "\"");
    return *it;
  }

  std::string string_field(const json& obj, const char* key) const {
    const auto& v = require(obj, key);
    if (!v.is_string()) fail("BAD_FIELD", std::string("\"") + key + "\" must be a string");
    return v.get<std::string>();
  }

  bool bool_field(const json& obj, const char* key) const {
    const auto& v = require(obj, key);
    if (!v.is_boolean()) fail("BAD_FIELD", std::string("\"") + key + "\" must be a boolean");
    return v.get<bool>();
  }

  Span span(const json& obj) const {
    const auto& frags = require(obj, "fragments");
    if (!frags.is_array()) fail("BAD_FIELD", "\"fragments\" must be an array");
    std::vector<Fragment> out;
    for (const auto& pair : frags) {
      if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number_unsigned() ||
          !pair[1].is_number_unsigned()) {
        fail("BAD_FIELD", "fragment must be a pair of non-negative integers");
      }
      try {
        out.emplace_back(pair[0].get<std::size_t>(), pair[1].get<std::size_t>());
      } catch (const InvalidArgument& e) {
        fail(e.code(), e.what());
      }
    }
    try {
      return Span(std::move(out));
    } catch (const InvalidArgument& e) {
      fail(e.code(), e.what());
    }
  }

  std::optional<Span> optional_span(const json& obj, const char* key) const {
    auto it = obj.find(key);
    if (it == obj.end() || it->is_null()) return std::nullopt;
    return span(*it);
  }

  std::optional<Premise> premise(const json& obj, const char* key) const {
    auto it = obj.find(key);
    if (it == obj.end() || it->is_null()) return std::nullopt;
    try {
      return Premise{span(*it), parse_proposition_type(string_field(*it, "type"))};
    } catch (const InvalidArgument& e) {
      fail(e.code(), e.what());
    }
  }

  ArgumentAnnotation annotation(const json& obj) const {
    ArgumentAnnotation a;
    a.argumentative = bool_field(obj, "argumentative");
    a.justification = premise(obj, "justification");
    a.conclusion = premise(obj, "conclusion");
    a.collective = optional_span(obj, "collective");
    a.property = optional_span(obj, "property");
    auto it = obj.find("pivot");
    if (it != obj.end() && !it->is_null()) {
      a.pivot = Pivot{span(require(*it, "just_side")), span(require(*it, "conc_side"))};
    }
    return a;
  }

  std::optional<SourceFlags> flags(const json& obj) const {
    auto it = obj.find("source_flags");
    if (it == obj.end() || it->is_null()) return std::nullopt;
    return SourceFlags{bool_field(*it, "hate_speech"), bool_field(*it, "targeted_individual"),
                       bool_field(*it, "aggressive")};
  }

 private:
  std::size_t line_;
};

}  // namespace

AnnotatedCorpus read_jsonl(std::istream& in) {
  AnnotatedCorpus corpus;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    const LineReader reader(line_no);
    json obj;
    try {
      obj = json::parse(line);
    } catch (const json::parse_error& e) {
      reader.fail("INVALID_JSON", e.what());
    }
    if (!obj.is_object()) reader.fail("BAD_FIELD", "line is not a JSON object");
    try {
      Tweet tweet(reader.string_field(obj, "id"), parse_language(reader.string_field(obj, "language")),
                  reader.string_field(obj, "text"), reader.flags(obj));
      const std::string id = tweet.id();
      corpus.add_tweet(std::move(tweet));
      auto layers = obj.find("layers");
      if (layers != obj.end() && !layers->is_null()) {
        if (!layers->is_object()) reader.fail("BAD_FIELD", "\"layers\" must be an object");
        const std::size_t length = corpus.find(id)->length();
        for (auto it = layers->begin(); it != layers->end(); ++it) {
          auto annotation = reader.annotation(it.value());
          // Other protocol problems are left for validate() to report.
          for (auto c : kAllComponents) {
            const auto span = component_span(annotation, c);
            if (span && span->end() > length) {
              reader.fail("SPAN_OUT_OF_BOUNDS", it.key() + ": " + std::string(to_string(c)) + " ends at " +
                                                    std::to_string(span->end()) + ", text has " +
                                                    std::to_string(length) + " characters");
            }
          }
          corpus.add_annotation(it.key(), id, std::move(annotation));
        }
      }
    } catch (const ParseError& e) {
      if (e.line()) throw;
      reader.fail(e.code(), e.what());
    } catch (const Error& e) {
      reader.fail(e.code(), e.what());
    }
  }
  return corpus;
}

void write_jsonl(const AnnotatedCorpus& corpus, std::ostream& out) {
  for (const auto& tweet : corpus.tweets()) {
    ordered_json obj;
    obj["id"] = tweet.id();
    obj["language"] = std::string(to_string(tweet.language()));
    obj["text"] = tweet.text();
    if (const auto& f = tweet.source_flags()) {
      ordered_json flags;
      flags["hate_speech"] = f->hate_speech;
      flags["targeted_individual"] = f->targeted_individual;
      flags["aggressive"] = f->aggressive;
      obj["source_flags"] = std::move(flags);
    } else {
      obj["source_flags"] = nullptr;
    }
    ordered_json layers = ordered_json::object();
    for (const auto& [name, layer] : corpus.layers()) {
      if (const auto* a = layer.find(tweet.id())) layers[name] = annotation_to_json(*a);
    }
    obj["layers"] = std::move(layers);
    out << obj.dump() << '\n';
  }
}

AnnotatedCorpus read_jsonl_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("MISSING_FILE", "cannot open " + path);
  return read_jsonl(in);
}

void write_jsonl_file(const AnnotatedCorpus& corpus, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error("MISSING_FILE", "cannot write " + path);
  write_jsonl(corpus, out);
}

}  // namespace argmine
