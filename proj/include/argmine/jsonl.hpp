#pragma once

#include <iosfwd>

#include "argmine/corpus_model.hpp"

namespace argmine {

// Canonical corpus exchange format: one tweet per line,
//   {"id","language","text","source_flags","layers":{"<annotator>":{...}}}
// Offsets are code-point indices. Throws ParseError carrying the 1-based
// line number on schema violations.
AnnotatedCorpus read_jsonl(std::istream& in);
void write_jsonl(const AnnotatedCorpus& corpus, std::ostream& out);

AnnotatedCorpus read_jsonl_file(const std::string& path);
void write_jsonl_file(const AnnotatedCorpus& corpus, const std::string& path);

}  // namespace argmine
