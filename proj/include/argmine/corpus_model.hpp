#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace argmine {

enum class Language { EN, ES };

std::string_view to_string(Language language);
// Accepts "en"/"es" in any case; throws InvalidArgument otherwise.
Language parse_language(std::string_view name);

struct SourceFlags {
  bool hate_speech = false;
  bool targeted_individual = false;
  bool aggressive = false;

  bool operator==(const SourceFlags&) const = default;
};

class Tweet {
 public:
  // Throws InvalidArgument on empty id or text, ParseError on invalid UTF-8.
  Tweet(std::string id, Language language, std::string text,
        std::optional<SourceFlags> source_flags = std::nullopt);

  const std::string& id() const { return id_; }
  Language language() const { return language_; }
  // UTF-8 bytes.
  const std::string& text() const { return text_; }
  const std::u32string& code_points() const { return code_points_; }
  // In code points; all annotation offsets are measured against this.
  std::size_t length() const { return code_points_.size(); }
  const std::optional<SourceFlags>& source_flags() const { return source_flags_; }

  bool operator==(const Tweet& other) const {
    return id_ == other.id_ && language_ == other.language_ && text_ == other.text_ &&
           source_flags_ == other.source_flags_;
  }

 private:
  std::string id_;
  Language language_;
  std::string text_;
  std::u32string code_points_;
  std::optional<SourceFlags> source_flags_;
};

// Half-open code-point range [start, end).
struct Fragment {
  std::size_t start = 0;
  std::size_t end = 0;

  Fragment() = default;
  // Throws InvalidArgument unless start < end.
  Fragment(std::size_t start, std::size_t end);

  std::size_t size() const { return end - start; }
  bool overlaps(std::size_t s, std::size_t e) const { return start < e && s < end; }
  bool operator==(const Fragment&) const = default;
};

// A possibly discontinuous component: fragments sorted by start, pairwise
// non-overlapping (touching is allowed), never empty.
class Span {
 public:
  explicit Span(std::vector<Fragment> fragments);
  Span(std::size_t start, std::size_t end) : Span(std::vector<Fragment>{Fragment(start, end)}) {}

  const std::vector<Fragment>& fragments() const { return fragments_; }
  std::size_t begin() const { return fragments_.front().start; }
  std::size_t end() const { return fragments_.back().end; }
  // Number of characters covered.
  std::size_t size() const;

  // True when every character of `other` is covered by this span.
  bool contains(const Span& other) const;
  bool overlaps(const Span& other) const;

  bool operator==(const Span&) const = default;

  // Sorted union; overlapping or touching fragments are merged.
  static Span merge(const Span& a, const Span& b);

 private:
  std::vector<Fragment> fragments_;
};

enum class PropositionType { Fact, Value, Policy };

std::string_view to_string(PropositionType type);
// Accepts "fact"/"value"/"policy" in any case, or the single letters F/V/P.
PropositionType parse_proposition_type(std::string_view name);

inline constexpr PropositionType kAllPropositionTypes[] = {
    PropositionType::Fact, PropositionType::Value, PropositionType::Policy};

struct Premise {
  Span span;
  PropositionType type;

  bool operator==(const Premise&) const = default;
};

struct Pivot {
  Span justification_side;
  Span conclusion_side;

  bool operator==(const Pivot&) const = default;
};

struct ArgumentAnnotation {
  bool argumentative = false;
  std::optional<Premise> justification;
  std::optional<Premise> conclusion;
  std::optional<Span> collective;
  std::optional<Span> property;
  std::optional<Pivot> pivot;

  bool operator==(const ArgumentAnnotation&) const = default;
};

// The five span-valued components.
enum class Component { Collective, Property, Pivot, Justification, Conclusion };

inline constexpr Component kAllComponents[] = {Component::Collective, Component::Property,
                                               Component::Pivot, Component::Justification,
                                               Component::Conclusion};

std::string_view to_string(Component component);
Component parse_component(std::string_view name);

// The component's character coverage; for Pivot the union of both sides.
std::optional<Span> component_span(const ArgumentAnnotation& annotation, Component component);

struct AnnotationLayer {
  std::string annotator_id;
  std::map<std::string, ArgumentAnnotation> annotations;

  const ArgumentAnnotation* find(const std::string& tweet_id) const;
};

class AnnotatedCorpus {
 public:
  // Throws InvalidArgument("DUPLICATE_TWEET") when the id already exists.
  void add_tweet(Tweet tweet);
  // Throws InvalidArgument("UNKNOWN_TWEET") when the tweet is not in the corpus.
  void add_annotation(const std::string& annotator_id, const std::string& tweet_id,
                      ArgumentAnnotation annotation);

  const std::vector<Tweet>& tweets() const { return tweets_; }
  const Tweet* find(const std::string& tweet_id) const;
  const std::map<std::string, AnnotationLayer>& layers() const { return layers_; }
  bool has_layer(const std::string& annotator_id) const { return layers_.count(annotator_id) > 0; }
  // Throws InvalidArgument("UNKNOWN_LAYER").
  const AnnotationLayer& layer(const std::string& annotator_id) const;

  std::size_t size() const { return tweets_.size(); }
  bool empty() const { return tweets_.empty(); }

  bool operator==(const AnnotatedCorpus& other) const {
    return tweets_ == other.tweets_ && layers_equal(other);
  }

 private:
  bool layers_equal(const AnnotatedCorpus& other) const;

  std::vector<Tweet> tweets_;
  std::map<std::string, std::size_t> index_;
  std::map<std::string, AnnotationLayer> layers_;
};

}  // namespace argmine
