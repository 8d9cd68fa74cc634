#include "argmine/normalizer.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <sstream>

#include "argmine/errors.hpp"
#include "argmine/utf8.hpp"

namespace argmine {

SegmentationLexicon::SegmentationLexicon(const std::vector<std::string>& words) {
  for (const auto& w : words) {
    if (!w.empty()) words_.insert(utf8::to_lower(utf8::decode(w)));
  }
  if (words_.empty()) throw InvalidArgument("EMPTY_LEXICON", "segmentation lexicon is empty");
}

SegmentationLexicon SegmentationLexicon::read(std::istream& in) {
  std::vector<std::string> words;
  std::string line;
  while (std::getline(in, line)) {
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    words.push_back(line);
  }
  return SegmentationLexicon(words);
}

SegmentationLexicon SegmentationLexicon::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("MISSING_FILE", "cannot open lexicon " + path.string());
  return read(in);
}

bool SegmentationLexicon::contains(std::u32string_view word) const {
  return words_.count(utf8::to_lower(word)) > 0;
}

void EmojiTable::add(std::u32string sequence, std::string short_name) {
  if (sequence.empty()) throw InvalidArgument("BAD_EMOJI", "empty emoji sequence");
  longest_ = std::max(longest_, sequence.size());
  names_.insert_or_assign(std::move(sequence), std::move(short_name));
}

EmojiTable EmojiTable::read(std::istream& in) {
  EmojiTable table;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    const auto tab = line.find('\t');
    if (tab == std::string::npos || tab + 1 >= line.size()) {
      throw ParseError("BAD_EMOJI", "expected codepoints<TAB>short_name", line_no);
    }
    std::u32string sequence;
    std::istringstream hex(line.substr(0, tab));
    std::string piece;
    while (std::getline(hex, piece, '-')) {
      try {
        std::size_t used = 0;
        const unsigned long cp = std::stoul(piece, &used, 16);
        if (used != piece.size() || cp > 0x10FFFF) throw std::invalid_argument(piece);
        sequence.push_back(static_cast<char32_t>(cp));
      } catch (const std::exception&) {
        throw ParseError("BAD_EMOJI", "bad code point '" + piece + "'", line_no);
      }
    }
    table.add(std::move(sequence), line.substr(tab + 1));
  }
  return table;
}

EmojiTable EmojiTable::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("MISSING_FILE", "cannot open emoji table " + path.string());
  return read(in);
}

std::optional<std::pair<std::size_t, const std::string*>> EmojiTable::match(
    std::u32string_view text, std::size_t pos) const {
  const std::size_t max_len = std::min(longest_, text.size() - pos);
  for (std::size_t len = max_len; len > 0; --len) {
    auto it = names_.find(std::u32string(text.substr(pos, len)));
    if (it != names_.end()) return std::make_pair(len, &it->second);
  }
  return std::nullopt;
}

namespace {

struct Edit {
  std::size_t start;
  std::size_t end;
  std::u32string replacement;
};

struct Pass {
  std::u32string text;
  std::vector<OffsetSegment> map;
};

Pass apply_edits(std::u32string_view input, const std::vector<Edit>& edits) {
  Pass out;
  out.text.reserve(input.size());
  std::size_t pos = 0;
  auto copy_until = [&](std::size_t stop) {
    for (; pos < stop; ++pos) {
      out.map.push_back({pos, pos + 1, out.text.size(), out.text.size() + 1});
      out.text.push_back(input[pos]);
    }
  };
  for (const auto& e : edits) {
    copy_until(e.start);
    out.map.push_back({e.start, e.end, out.text.size(), out.text.size() + e.replacement.size()});
    out.text += e.replacement;
    pos = e.end;
  }
  copy_until(input.size());
  return out;
}

// Both maps tile the intermediate text; groups close where both agree on a
// boundary.
std::vector<OffsetSegment> compose(const std::vector<OffsetSegment>& first,
                                   const std::vector<OffsetSegment>& second) {
  std::vector<OffsetSegment> out;
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < first.size() && j < second.size()) {
    OffsetSegment seg{first[i].raw_start, 0, second[j].norm_start, 0};
    std::size_t e1 = first[i].norm_end;
    std::size_t e2 = second[j].raw_end;
    while (e1 != e2) {
      if (e1 < e2) {
        e1 = first[++i].norm_end;
      } else {
        e2 = second[++j].raw_end;
      }
    }
    seg.raw_end = first[i].raw_end;
    seg.norm_end = second[j].norm_end;
    out.push_back(seg);
    ++i;
    ++j;
  }
  return out;
}

bool marker_boundary(std::u32string_view t, std::size_t i) {
  if (i == 0) return true;
  const char32_t prev = t[i - 1];
  return !utf8::is_word(prev) && prev != U'@' && prev != U'#';
}

std::size_t word_run_end(std::u32string_view t, std::size_t i) {
  while (i < t.size() && utf8::is_word(t[i])) ++i;
  return i;
}

std::vector<Edit> handle_edits(std::u32string_view t) {
  static const std::u32string token = utf8::decode(kHandleToken);
  std::vector<Edit> edits;
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (t[i] != U'@' || !marker_boundary(t, i)) continue;
    const std::size_t end = word_run_end(t, i + 1);
    if (end == i + 1) continue;
    edits.push_back({i, end, token});
    i = end - 1;
  }
  return edits;
}

bool is_camel_case(std::u32string_view b) {
  for (std::size_t i = 1; i < b.size(); ++i) {
    if (!utf8::is_upper(b[i])) continue;
    if (utf8::is_lower(b[i - 1])) return true;
    if (utf8::is_upper(b[i - 1]) && i + 1 < b.size() && utf8::is_lower(b[i + 1])) return true;
  }
  return false;
}

std::vector<std::u32string> split_camel(std::u32string_view b) {
  std::vector<std::u32string> words;
  std::u32string cur;
  auto flush = [&] {
    if (!cur.empty()) words.push_back(utf8::to_lower(cur));
    cur.clear();
  };
  for (std::size_t i = 0; i < b.size(); ++i) {
    const char32_t c = b[i];
    if (c == U'_') {
      flush();
      continue;
    }
    if (!cur.empty()) {
      const char32_t prev = b[i - 1];
      const bool boundary =
          (utf8::is_upper(c) && (utf8::is_lower(prev) || utf8::is_digit(prev))) ||
          (utf8::is_upper(c) && utf8::is_upper(prev) && i + 1 < b.size() &&
           utf8::is_lower(b[i + 1])) ||
          (utf8::is_digit(c) && utf8::is_letter(prev)) ||
          (utf8::is_letter(c) && utf8::is_digit(prev));
      if (boundary) flush();
    }
    cur.push_back(c);
  }
  flush();
  return words;
}

std::vector<std::u32string> segment(std::u32string_view body, const SegmentationLexicon& lexicon) {
  const std::u32string lower = utf8::to_lower(body);
  const std::size_t n = lower.size();
  struct Best {
    std::size_t oov;
    std::size_t chunks;
    std::size_t next;
  };
  // best[i] describes the optimal segmentation of lower[i..n).
  std::vector<Best> best(n + 1, Best{0, 0, n});
  for (std::size_t i = n; i-- > 0;) {
    bool found = false;
    for (std::size_t j = n; j > i; --j) {  // longest first chunk wins ties
      const std::size_t oov = (lexicon.contains(std::u32string_view(lower).substr(i, j - i)) ? 0 : 1) +
                              best[j].oov;
      const std::size_t chunks = 1 + best[j].chunks;
      if (!found || oov < best[i].oov || (oov == best[i].oov && chunks < best[i].chunks)) {
        best[i] = Best{oov, chunks, j};
        found = true;
      }
    }
  }
  std::vector<std::u32string> words;
  for (std::size_t i = 0; i < n; i = best[i].next) words.push_back(lower.substr(i, best[i].next - i));
  return words;
}

std::vector<std::u32string> expand_body(std::u32string_view body, const SegmentationLexicon& lexicon) {
  if (body.empty()) throw InvalidArgument("EMPTY_HASHTAG", "hashtag body is empty");
  std::vector<std::u32string> words;
  std::size_t start = 0;
  while (start <= body.size()) {
    std::size_t stop = body.find(U'_', start);
    if (stop == std::u32string_view::npos) stop = body.size();
    const auto part = body.substr(start, stop - start);
    if (!part.empty()) {
      auto split = is_camel_case(part) ? split_camel(part) : segment(part, lexicon);
      words.insert(words.end(), split.begin(), split.end());
    }
    start = stop + 1;
  }
  return words;
}

std::vector<Edit> hashtag_edits(std::u32string_view t, const SegmentationLexicon& lexicon) {
  static const std::u32string token = utf8::decode(kHashtagToken);
  std::vector<Edit> edits;
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (t[i] != U'#' || !marker_boundary(t, i)) continue;
    const std::size_t end = word_run_end(t, i + 1);
    if (end == i + 1) continue;
    std::u32string replacement = token;
    for (const auto& w : expand_body(t.substr(i + 1, end - i - 1), lexicon)) {
      replacement += U' ';
      replacement += w;
    }
    edits.push_back({i, end, std::move(replacement)});
    i = end - 1;
  }
  return edits;
}

std::vector<Edit> emoji_edits(std::u32string_view t, const EmojiTable& table) {
  static const std::u32string token = utf8::decode(kEmojiToken);
  std::vector<Edit> edits;
  std::size_t i = 0;
  while (i < t.size()) {
    const auto m = table.match(t, i);
    if (!m) {
      ++i;
      continue;
    }
    const std::size_t end = i + m->first;
    std::u32string name = utf8::decode(*m->second);
    std::replace(name.begin(), name.end(), U'_', U' ');
    std::u32string replacement;
    const bool after_edit = !edits.empty() && edits.back().end == i;
    if (i > 0 && !utf8::is_space(t[i - 1]) && !after_edit) replacement += U' ';
    replacement += token + U' ' + name + U' ' + token;
    if (end < t.size() && !utf8::is_space(t[end])) replacement += U' ';
    edits.push_back({i, end, std::move(replacement)});
    i = end;
  }
  return edits;
}

std::vector<Edit> cap_edits(std::u32string_view t) {
  std::vector<Edit> edits;
  std::size_t i = 0;
  while (i < t.size()) {
    std::size_t j = i + 1;
    while (j < t.size() && t[j] == t[i]) ++j;
    if (j - i > 3) edits.push_back({i, j, std::u32string(3, t[i])});
    i = j;
  }
  return edits;
}

std::vector<OffsetSegment> identity_map(std::size_t n) {
  std::vector<OffsetSegment> map;
  map.reserve(n);
  for (std::size_t i = 0; i < n; ++i) map.push_back({i, i + 1, i, i + 1});
  return map;
}

}  // namespace

std::string cap_repetitions(std::string_view text) {
  const auto t = utf8::decode(text);
  return utf8::encode(apply_edits(t, cap_edits(t)).text);
}

std::string replace_handles(std::string_view text) {
  const auto t = utf8::decode(text);
  return utf8::encode(apply_edits(t, handle_edits(t)).text);
}

std::vector<std::string> expand_hashtag(std::string_view body, const SegmentationLexicon& lexicon) {
  std::vector<std::string> out;
  for (const auto& w : expand_body(utf8::decode(body), lexicon)) out.push_back(utf8::encode(w));
  return out;
}

std::string replace_emoji(std::string_view text, const EmojiTable& table) {
  const auto t = utf8::decode(text);
  return utf8::encode(apply_edits(t, emoji_edits(t, table)).text);
}

NormalizedText normalize_text(std::string_view text, const SegmentationLexicon& lexicon,
                              const EmojiTable& emoji) {
  const auto raw = utf8::decode(text);
  Pass current{raw, identity_map(raw.size())};
  auto step = [&](const std::vector<Edit>& edits) {
    if (edits.empty()) return;
    Pass next = apply_edits(current.text, edits);
    current.map = compose(current.map, next.map);
    current.text = std::move(next.text);
  };
  step(handle_edits(current.text));
  step(hashtag_edits(current.text, lexicon));
  step(emoji_edits(current.text, emoji));
  step(cap_edits(current.text));
  return NormalizedText{utf8::encode(current.text), std::move(current.map), raw.size()};
}

Span project_span(const Span& span, const NormalizedText& normalized) {
  if (span.end() > normalized.raw_length) {
    throw BoundsError("span ends at " + std::to_string(span.end()) + " past raw length " +
                      std::to_string(normalized.raw_length));
  }
  const auto& map = normalized.offset_map;
  std::vector<Fragment> images;
  for (const auto& f : span.fragments()) {
    auto first = std::upper_bound(map.begin(), map.end(), f.start,
                                  [](std::size_t pos, const OffsetSegment& s) { return pos < s.raw_end; });
    std::size_t lo = first->norm_start;
    std::size_t hi = first->norm_end;
    for (auto it = first; it != map.end() && it->raw_start < f.end; ++it) hi = it->norm_end;
    if (!images.empty() && lo <= images.back().end) {
      images.back().end = std::max(images.back().end, hi);
    } else {
      images.emplace_back(lo, hi);
    }
  }
  return Span(std::move(images));
}

ArgumentAnnotation project_annotation(const ArgumentAnnotation& annotation,
                                      const NormalizedText& normalized) {
  auto out = annotation;
  if (out.justification) out.justification->span = project_span(out.justification->span, normalized);
  if (out.conclusion) out.conclusion->span = project_span(out.conclusion->span, normalized);
  if (out.collective) out.collective = project_span(*out.collective, normalized);
  if (out.property) out.property = project_span(*out.property, normalized);
  if (out.pivot) {
    out.pivot->justification_side = project_span(out.pivot->justification_side, normalized);
    out.pivot->conclusion_side = project_span(out.pivot->conclusion_side, normalized);
  }
  return out;
}

Normalizer::Normalizer(std::map<Language, SegmentationLexicon> lexicons, EmojiTable emoji)
    : lexicons_(std::move(lexicons)), emoji_(std::move(emoji)) {
  for (auto language : {Language::EN, Language::ES}) {
    if (!lexicons_.count(language)) {
      throw InvalidArgument("MISSING_LEXICON",
                            "no segmentation lexicon for " + std::string(to_string(language)));
    }
  }
}

Normalizer Normalizer::load(const std::filesystem::path& data_dir) {
  std::map<Language, SegmentationLexicon> lexicons;
  lexicons.emplace(Language::EN, SegmentationLexicon::load(data_dir / "lexicon" / "en.txt"));
  lexicons.emplace(Language::ES, SegmentationLexicon::load(data_dir / "lexicon" / "es.txt"));
  return Normalizer(std::move(lexicons), EmojiTable::load(data_dir / "emoji.tsv"));
}

NormalizedText Normalizer::normalize(const Tweet& tweet) const {
  return normalize(tweet.text(), tweet.language());
}

NormalizedText Normalizer::normalize(std::string_view text, Language language) const {
  return normalize_text(text, lexicon(language), emoji_);
}

const SegmentationLexicon& Normalizer::lexicon(Language language) const {
  return lexicons_.at(language);
}

}  // namespace argmine
