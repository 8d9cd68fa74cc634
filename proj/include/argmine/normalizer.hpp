#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "argmine/corpus_model.hpp"

namespace argmine {

// Word list used to split hashtag bodies. Lookup is case-insensitive.
class SegmentationLexicon {
 public:
  explicit SegmentationLexicon(const std::vector<std::string>& words);
  // One word per line, UTF-8. Blank lines and lines starting with '#' skipped.
  static SegmentationLexicon read(std::istream& in);
  static SegmentationLexicon load(const std::filesystem::path& path);

  bool contains(std::u32string_view word) const;
  std::size_t size() const { return words_.size(); }

 private:
  std::unordered_set<std::u32string> words_;
};

// Emoji code-point sequences to short names ("fire", "face_with_tears_of_joy").
class EmojiTable {
 public:
  EmojiTable() = default;
  void add(std::u32string sequence, std::string short_name);
  // TSV lines: hyphen-joined hex code points <TAB> short_name.
  static EmojiTable read(std::istream& in);
  static EmojiTable load(const std::filesystem::path& path);

  // Longest sequence starting at `pos`: (length, short name).
  std::optional<std::pair<std::size_t, const std::string*>> match(std::u32string_view text,
                                                                  std::size_t pos) const;
  std::size_t size() const { return names_.size(); }

 private:
  std::unordered_map<std::u32string, std::string> names_;
  std::size_t longest_ = 0;
};

// One piece of the raw<->normalized alignment. Untouched characters get a
// 1:1 segment each; every rewrite (handle, hashtag, emoji, capped run) is a
// single segment covering its whole input and output. Segments are ordered,
// non-empty and tile both texts.
struct OffsetSegment {
  std::size_t raw_start = 0;
  std::size_t raw_end = 0;
  std::size_t norm_start = 0;
  std::size_t norm_end = 0;

  bool operator==(const OffsetSegment&) const = default;
};

struct NormalizedText {
  std::string text;  // UTF-8
  std::vector<OffsetSegment> offset_map;
  std::size_t raw_length = 0;
};

inline constexpr std::string_view kHandleToken = "@usuario";
inline constexpr std::string_view kHashtagToken = "hashtag";
inline constexpr std::string_view kEmojiToken = "emoji";

// Runs of one code point longer than three are cut to three.
std::string cap_repetitions(std::string_view text);
// "@name" -> "@usuario" when the "@" does not follow a word character.
std::string replace_handles(std::string_view text);
// Splits a hashtag body (without '#') into lowercase words. The body is cut
// at underscores; CamelCase parts split at case and digit boundaries, other
// parts take the segmentation with the fewest out-of-lexicon chunks, then the
// fewest chunks, then the longest leading chunk. Throws InvalidArgument("EMPTY_HASHTAG") on an empty body.
std::vector<std::string> expand_hashtag(std::string_view body, const SegmentationLexicon& lexicon);
// Each mapped emoji becomes "emoji <name words> emoji", space-padded against
// neighbouring non-space characters.
std::string replace_emoji(std::string_view text, const EmojiTable& table);

// Handles, then hashtags, then emoji, then repetition capping.
NormalizedText normalize_text(std::string_view text, const SegmentationLexicon& lexicon,
                              const EmojiTable& emoji);

// Maps a raw-text span onto the normalized text through the offset map. A
// fragment touching any part of a rewrite covers the whole rewrite output.
// Throws BoundsError when the span runs past the raw text.
Span project_span(const Span& span, const NormalizedText& normalized);

// project_span applied to every component of an annotation.
ArgumentAnnotation project_annotation(const ArgumentAnnotation& annotation,
                                      const NormalizedText& normalized);

class Normalizer {
 public:
  Normalizer(std::map<Language, SegmentationLexicon> lexicons, EmojiTable emoji);

  // Reads lexicon/en.txt, lexicon/es.txt and emoji.tsv under `data_dir`.
  static Normalizer load(const std::filesystem::path& data_dir);

  NormalizedText normalize(const Tweet& tweet) const;
  NormalizedText normalize(std::string_view text, Language language) const;

  const SegmentationLexicon& lexicon(Language language) const;
  const EmojiTable& emoji() const { return emoji_; }

 private:
  std::map<Language, SegmentationLexicon> lexicons_;
  EmojiTable emoji_;
};

}  // namespace argmine
