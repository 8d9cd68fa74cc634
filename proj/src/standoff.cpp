#include "argmine/standoff.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>
#include <mutex>
#include <optional>
#include <set>
#include <sstream>
#include <thread>

#include "argmine/errors.hpp"
#include "argmine/utf8.hpp"
#include "argmine/validate.hpp"

namespace argmine {
namespace {

constexpr std::string_view kComponentLabels[] = {"Justification", "Conclusion", "Collective",
                                                 "Property",      "PivotJ",     "PivotC"};

bool is_known_label(std::string_view label) {
  if (label == kArgumentativeLabel || label == kNonArgumentativeLabel) return true;
  return std::find(std::begin(kComponentLabels), std::end(kComponentLabels), label) !=
         std::end(kComponentLabels);
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  std::size_t pos = 0;
  while (true) {
    const auto next = s.find(sep, pos);
    if (next == std::string_view::npos) {
      parts.push_back(s.substr(pos));
      return parts;
    }
    parts.push_back(s.substr(pos, next - pos));
    pos = next + 1;
  }
}

std::optional<std::size_t> parse_offset(std::string_view s) {
  std::size_t value = 0;
  if (s.empty()) return std::nullopt;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
  return value;
}

std::string flatten(std::u32string_view slice) {
  std::u32string out(slice);
  for (auto& c : out) {
    if (c == U'\t' || c == U'\n' || c == U'\r') c = U' ';
  }
  return utf8::encode(out);
}

std::string format_fragments(const Span& span) {
  std::string out;
  for (const auto& f : span.fragments()) {
    if (!out.empty()) out += ';';
    out += std::to_string(f.start) + ' ' + std::to_string(f.end);
  }
  return out;
}

StandoffEntry parse_text_bound(std::string_view id, std::string_view body,
                               std::string_view covered, const std::u32string& text,
                               std::size_t line) {
  StandoffEntry entry;
  entry.entry_id = std::string(id);
  const auto space = body.find(' ');
  if (space == std::string_view::npos) {
    throw ParseError("MALFORMED_OFFSETS", "entry " + entry.entry_id + " has no offsets", line);
  }
  entry.label = std::string(body.substr(0, space));
  if (!is_known_label(entry.label)) {
    throw ParseError("UNKNOWN_LABEL", "unknown label '" + entry.label + "'", line);
  }
  for (auto piece : split(body.substr(space + 1), ';')) {
    const auto numbers = split(piece, ' ');
    if (numbers.size() != 2) {
      throw ParseError("MALFORMED_OFFSETS", "bad offset pair '" + std::string(piece) + "'", line);
    }
    const auto s = parse_offset(numbers[0]);
    const auto e = parse_offset(numbers[1]);
    if (!s || !e || *s >= *e) {
      throw ParseError("MALFORMED_OFFSETS", "bad offset pair '" + std::string(piece) + "'", line);
    }
    if (*e > text.size()) {
      throw ParseError("OFFSET_OUT_OF_BOUNDS",
                       "offset " + std::to_string(*e) + " past text length " +
                           std::to_string(text.size()),
                       line);
    }
    entry.fragments.emplace_back(*s, *e);
  }
  entry.covered_text = std::string(covered);

  std::string expected;
  for (const auto& [s, e] : entry.fragments) {
    if (!expected.empty()) expected += ' ';
    expected += flatten(std::u32string_view(text).substr(s, e - s));
  }
  if (expected != entry.covered_text) {
    throw ParseError("COVERED_TEXT_MISMATCH",
                     "entry " + entry.entry_id + " covers '" + entry.covered_text +
                         "' but offsets slice '" + expected + "'",
                     line);
  }
  return entry;
}

Span to_span(const StandoffEntry& entry, std::size_t line) {
  auto pairs = entry.fragments;
  std::sort(pairs.begin(), pairs.end());
  std::vector<Fragment> fragments;
  for (const auto& [s, e] : pairs) fragments.emplace_back(s, e);
  try {
    return Span(std::move(fragments));
  } catch (const InvalidArgument&) {
    throw ParseError("MALFORMED_OFFSETS", "entry " + entry.entry_id + " has overlapping fragments",
                     line);
  }
}

}  // namespace

std::string covered_text(const std::u32string& text, const Span& span) {
  std::string out;
  for (const auto& f : span.fragments()) {
    if (!out.empty()) out += ' ';
    out += flatten(std::u32string_view(text).substr(f.start, f.size()));
  }
  return out;
}

StandoffDocument parse_standoff(std::string tweet_id, Language language,
                                std::string_view ann_content, std::string txt_content) {
  Tweet tweet(std::move(tweet_id), language, std::move(txt_content));
  const auto& text = tweet.code_points();

  struct Located {
    StandoffEntry entry;
    std::size_t line;
  };
  std::vector<Located> entries;
  std::map<std::string, std::size_t> by_id;
  struct Attribute {
    std::string target;
    std::string value;
    std::size_t line;
  };
  std::vector<Attribute> attributes;
  std::set<std::string> seen_ids;

  std::size_t line_no = 0;
  for (auto line : split(ann_content, '\n')) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty()) continue;
    const auto fields = split(line, '\t');
    const auto id = fields[0];
    if (id.empty()) throw ParseError("MALFORMED_ENTRY", "missing entry id", line_no);
    if (id[0] == '#') continue;  // annotator notes
    if (!seen_ids.insert(std::string(id)).second) {
      throw ParseError("DUPLICATE_ENTRY_ID", "duplicate entry id " + std::string(id), line_no);
    }
    if (id[0] == 'T') {
      if (fields.size() != 3) {
        throw ParseError("MALFORMED_ENTRY", "text-bound entry needs three tab-separated fields",
                         line_no);
      }
      by_id.emplace(std::string(id), entries.size());
      entries.push_back({parse_text_bound(id, fields[1], fields[2], text, line_no), line_no});
    } else if (id[0] == 'A') {
      if (fields.size() != 2) {
        throw ParseError("MALFORMED_ENTRY", "attribute entry needs two tab-separated fields",
                         line_no);
      }
      const auto parts = split(fields[1], ' ');
      if (parts.size() != 3 || parts[0] != kTypeAttribute) {
        throw ParseError("UNKNOWN_ATTRIBUTE", "unsupported attribute '" + std::string(fields[1]) + "'",
                         line_no);
      }
      attributes.push_back({std::string(parts[1]), std::string(parts[2]), line_no});
    } else {
      throw ParseError("UNKNOWN_ENTRY", "unsupported entry kind '" + std::string(id) + "'", line_no);
    }
  }

  std::optional<bool> marker;
  std::optional<std::pair<Span, std::string>> justification, conclusion;
  std::optional<Span> collective, property, pivot_j, pivot_c;

  auto accumulate = [](std::optional<Span>& slot, Span span) {
    slot = slot ? Span::merge(*slot, span) : std::move(span);
  };

  for (const auto& [entry, line] : entries) {
    const auto& label = entry.label;
    if (label == kArgumentativeLabel || label == kNonArgumentativeLabel) {
      const bool value = label == kArgumentativeLabel;
      if (marker && *marker != value) {
        throw ParseError("CONFLICTING_MARKERS", "both Argumentative and NonArgumentative present",
                         line);
      }
      marker = value;
    } else if (label == "Justification") {
      if (justification) {
        throw ParseError("DUPLICATE_JUSTIFICATION", "more than one Justification entry", line);
      }
      justification.emplace(to_span(entry, line), entry.entry_id);
    } else if (label == "Conclusion") {
      if (conclusion) {
        throw ParseError("DUPLICATE_CONCLUSION", "more than one Conclusion entry", line);
      }
      conclusion.emplace(to_span(entry, line), entry.entry_id);
    } else if (label == "Collective") {
      accumulate(collective, to_span(entry, line));
    } else if (label == "Property") {
      accumulate(property, to_span(entry, line));
    } else if (label == "PivotJ") {
      accumulate(pivot_j, to_span(entry, line));
    } else if (label == "PivotC") {
      accumulate(pivot_c, to_span(entry, line));
    }
  }

  std::optional<PropositionType> justification_type, conclusion_type;
  for (const auto& attr : attributes) {
    std::optional<PropositionType>* slot = nullptr;
    if (justification && justification->second == attr.target) slot = &justification_type;
    if (conclusion && conclusion->second == attr.target) slot = &conclusion_type;
    if (!slot) {
      throw ParseError("ATTRIBUTE_ON_NON_PREMISE",
                       "Type attribute targets " + attr.target + ", which is not a premise",
                       attr.line);
    }
    if (*slot) throw ParseError("DUPLICATE_ATTRIBUTE", "premise typed twice", attr.line);
    try {
      *slot = parse_proposition_type(attr.value);
    } catch (const InvalidArgument& e) {
      throw ParseError(e.code(), e.what(), attr.line);
    }
  }

  ArgumentAnnotation annotation;
  annotation.argumentative = marker.value_or(justification || conclusion);
  if (justification) {
    if (!justification_type) throw ParseError("MISSING_TYPE", "justification has no Type attribute");
    annotation.justification = Premise{justification->first, *justification_type};
  }
  if (conclusion) {
    if (!conclusion_type) throw ParseError("MISSING_TYPE", "conclusion has no Type attribute");
    annotation.conclusion = Premise{conclusion->first, *conclusion_type};
  }
  annotation.collective = collective;
  annotation.property = property;
  if (pivot_j || pivot_c) {
    if (!pivot_j || !pivot_c) {
      throw ParseError("INCOMPLETE_PIVOT", "pivot needs both PivotJ and PivotC entries");
    }
    annotation.pivot = Pivot{*pivot_j, *pivot_c};
  }

  const auto report = validate(tweet, annotation, ValidationMode::Lenient);
  for (const auto& issue : report.issues) {
    if (issue.severity == Severity::Error) {
      throw ParseError(issue.code, "tweet " + tweet.id() + ": " + issue.message);
    }
  }
  return StandoffDocument{std::move(tweet), std::move(annotation)};
}

StandoffFiles write_standoff(const Tweet& tweet, const ArgumentAnnotation& annotation) {
  const auto& text = tweet.code_points();
  std::ostringstream ann;
  int next_entry = 1;
  auto text_bound = [&](std::string_view label, const Span& span) {
    const std::string id = "T" + std::to_string(next_entry++);
    ann << id << '\t' << label << ' ' << format_fragments(span) << '\t' << covered_text(text, span)
        << '\n';
    return id;
  };

  text_bound(annotation.argumentative ? kArgumentativeLabel : kNonArgumentativeLabel,
             Span(0, text.size()));
  std::vector<std::pair<std::string, PropositionType>> types;
  if (annotation.justification) {
    types.emplace_back(text_bound("Justification", annotation.justification->span),
                       annotation.justification->type);
  }
  if (annotation.conclusion) {
    types.emplace_back(text_bound("Conclusion", annotation.conclusion->span),
                       annotation.conclusion->type);
  }
  if (annotation.collective) text_bound("Collective", *annotation.collective);
  if (annotation.property) text_bound("Property", *annotation.property);
  if (annotation.pivot) {
    text_bound("PivotJ", annotation.pivot->justification_side);
    text_bound("PivotC", annotation.pivot->conclusion_side);
  }
  int next_attribute = 1;
  for (const auto& [target, type] : types) {
    std::string value(to_string(type));
    value[0] = static_cast<char>(value[0] - 'a' + 'A');
    ann << 'A' << next_attribute++ << '\t' << kTypeAttribute << ' ' << target << ' ' << value
        << '\n';
  }
  return StandoffFiles{ann.str(), tweet.text()};
}

namespace {

std::string slurp(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("MISSING_FILE", "cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

}  // namespace

void read_standoff_directory(const std::filesystem::path& dir, Language language,
                             const std::string& annotator_id, AnnotatedCorpus& corpus,
                             unsigned jobs) {
  if (!std::filesystem::is_directory(dir)) {
    throw Error("MISSING_FILE", "not a directory: " + dir.string());
  }
  std::vector<std::filesystem::path> stems;
  for (const auto& item : std::filesystem::directory_iterator(dir)) {
    if (item.path().extension() == ".txt") stems.push_back(item.path());
  }
  std::sort(stems.begin(), stems.end());

  std::vector<std::optional<StandoffDocument>> docs(stems.size());
  std::vector<std::exception_ptr> failures(stems.size());
  auto work = [&](std::size_t i) {
    try {
      auto ann_path = stems[i];
      ann_path.replace_extension(".ann");
      docs[i] = parse_standoff(stems[i].stem().string(), language, slurp(ann_path), slurp(stems[i]));
    } catch (const ParseError& e) {
      failures[i] = std::make_exception_ptr(
          ParseError(e.code(), stems[i].filename().string() + ": " + e.what()));
    } catch (...) {
      failures[i] = std::current_exception();
    }
  };
  const unsigned threads = std::max(1u, std::min<unsigned>(jobs, stems.size()));
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < threads; ++t) {
    pool.emplace_back([&, t] {
      for (std::size_t i = t; i < stems.size(); i += threads) work(i);
    });
  }
  for (auto& th : pool) th.join();

  for (std::size_t i = 0; i < stems.size(); ++i) {
    if (failures[i]) std::rethrow_exception(failures[i]);
    auto& doc = *docs[i];
    const auto* existing = corpus.find(doc.tweet.id());
    if (!existing) {
      corpus.add_tweet(doc.tweet);
    } else if (existing->text() != doc.tweet.text()) {
      throw ParseError("TEXT_CONFLICT", "tweet " + doc.tweet.id() + " differs between layers");
    }
    corpus.add_annotation(annotator_id, doc.tweet.id(), std::move(doc.annotation));
  }
}

}  // namespace argmine
