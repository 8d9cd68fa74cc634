#pragma once

#include <cstddef>
#include <filesystem>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "argmine/corpus_model.hpp"

namespace argmine {

// One text-bound line of a standoff .ann file.
struct StandoffEntry {
  std::string entry_id;  // "T3"
  std::string label;
  std::vector<std::pair<std::size_t, std::size_t>> fragments;
  std::string covered_text;
};

struct StandoffDocument {
  Tweet tweet;
  ArgumentAnnotation annotation;
};

struct StandoffFiles {
  std::string ann;
  std::string txt;
};

// Entity labels understood by the codec. Proposition types travel as
// attribute lines: "A1<TAB>Type T2 Fact".
inline constexpr std::string_view kArgumentativeLabel = "Argumentative";
inline constexpr std::string_view kNonArgumentativeLabel = "NonArgumentative";
inline constexpr std::string_view kTypeAttribute = "Type";

// Covered text as written into .ann lines: slices joined by one space, with
// tabs and line breaks flattened to spaces so the line format survives.
std::string covered_text(const std::u32string& text, const Span& span);

// Throws ParseError on malformed offsets, unknown labels, covered-text
// mismatches, duplicate premises, or an annotation that fails lenient
// validation.
StandoffDocument parse_standoff(std::string tweet_id, Language language,
                                std::string_view ann_content, std::string txt_content);

// Canonical form: the marker entry first, then Justification, Conclusion,
// Collective, Property, PivotJ, PivotC, then the type attributes.
StandoffFiles write_standoff(const Tweet& tweet, const ArgumentAnnotation& annotation);

// Loads every <id>.txt/<id>.ann pair in `dir` as one annotation layer.
// Files are parsed on up to `jobs` threads; tweets are added in id order.
void read_standoff_directory(const std::filesystem::path& dir, Language language,
                             const std::string& annotator_id, AnnotatedCorpus& corpus,
                             unsigned jobs = 1);

}  // namespace argmine
