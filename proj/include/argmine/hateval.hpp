#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "argmine/corpus_model.hpp"

namespace argmine {

struct HatevalRecord {
  std::string id;
  std::string text;
  bool hate_speech = false;
  bool targeted_individual = false;
  bool aggressive = false;
  Language language = Language::EN;
};

// Keeps hateful, non-aggressive, non-targeted records in input order.
std::vector<Tweet> filter_hateval(const std::vector<HatevalRecord>& records);

// HatEval release layout: header line, then id<TAB>text<TAB>HS<TAB>TR<TAB>AG
// with 0/1 flags.
std::vector<HatevalRecord> read_hateval_tsv(std::istream& in, Language language);

}  // namespace argmine
