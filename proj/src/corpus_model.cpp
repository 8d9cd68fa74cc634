#include "argmine/corpus_model.hpp"

#include <algorithm>
#include <cctype>

#include "argmine/errors.hpp"
#include "argmine/utf8.hpp"

namespace argmine {
namespace {

std::string lower_ascii(std::string_view s) {
  std::string out(s);
  for (auto& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

}  // namespace

std::string_view to_string(Language language) {
  return language == Language::EN ? "en" : "es";
}

Language parse_language(std::string_view name) {
  const auto s = lower_ascii(name);
  if (s == "en") return Language::EN;
  if (s == "es") return Language::ES;
  throw InvalidArgument("UNKNOWN_LANGUAGE", "unknown language '" + std::string(name) + "'");
}

Tweet::Tweet(std::string id, Language language, std::string text,
             std::optional<SourceFlags> source_flags)
    : id_(std::move(id)),
      language_(language),
      text_(std::move(text)),
      code_points_(utf8::decode(text_)),
      source_flags_(source_flags) {
  if (id_.empty()) throw InvalidArgument("EMPTY_ID", "tweet id must not be empty");
  if (text_.empty()) throw InvalidArgument("EMPTY_TEXT", "tweet " + id_ + " has empty text");
}

Fragment::Fragment(std::size_t s, std::size_t e) : start(s), end(e) {
  if (s >= e) {
    throw InvalidArgument("EMPTY_FRAGMENT", "fragment [" + std::to_string(s) + ", " +
                                                std::to_string(e) + ") is empty");
  }
}

Span::Span(std::vector<Fragment> fragments) : fragments_(std::move(fragments)) {
  if (fragments_.empty()) throw InvalidArgument("EMPTY_SPAN", "span has no fragments");
  for (std::size_t i = 1; i < fragments_.size(); ++i) {
    if (fragments_[i].start < fragments_[i - 1].end) {
      throw InvalidArgument("UNORDERED_SPAN",
                            "span fragments must be sorted and non-overlapping");
    }
  }
}

std::size_t Span::size() const {
  std::size_t total = 0;
  for (const auto& f : fragments_) total += f.size();
  return total;
}

bool Span::contains(const Span& other) const {
  for (const auto& f : other.fragments_) {
    // Touching fragments may jointly cover f, so walk the coverage.
    std::size_t pos = f.start;
    for (const auto& mine : fragments_) {
      if (mine.end <= pos) continue;
      if (mine.start > pos) break;
      pos = mine.end;
      if (pos >= f.end) break;
    }
    if (pos < f.end) return false;
  }
  return true;
}

bool Span::overlaps(const Span& other) const {
  for (const auto& a : fragments_) {
    for (const auto& b : other.fragments_) {
      if (a.overlaps(b.start, b.end)) return true;
    }
  }
  return false;
}

Span Span::merge(const Span& a, const Span& b) {
  std::vector<Fragment> all = a.fragments_;
  all.insert(all.end(), b.fragments_.begin(), b.fragments_.end());
  std::sort(all.begin(), all.end(),
            [](const Fragment& x, const Fragment& y) { return x.start < y.start; });
  std::vector<Fragment> merged;
  for (const auto& f : all) {
    if (!merged.empty() && f.start <= merged.back().end) {
      merged.back().end = std::max(merged.back().end, f.end);
    } else {
      merged.push_back(f);
    }
  }
  return Span(std::move(merged));
}

std::string_view to_string(PropositionType type) {
  switch (type) {
    case PropositionType::Fact: return "fact";
    case PropositionType::Value: return "value";
    case PropositionType::Policy: return "policy";
  }
  return "fact";
}

PropositionType parse_proposition_type(std::string_view name) {
  const auto s = lower_ascii(name);
  if (s == "fact" || s == "f") return PropositionType::Fact;
  if (s == "value" || s == "v") return PropositionType::Value;
  if (s == "policy" || s == "p") return PropositionType::Policy;
  throw InvalidArgument("UNKNOWN_TYPE", "unknown proposition type '" + std::string(name) + "'");
}

std::string_view to_string(Component component) {
  switch (component) {
    case Component::Collective: return "collective";
    case Component::Property: return "property";
    case Component::Pivot: return "pivot";
    case Component::Justification: return "justification";
    case Component::Conclusion: return "conclusion";
  }
  return "collective";
}

Component parse_component(std::string_view name) {
  const auto s = lower_ascii(name);
  for (auto c : kAllComponents) {
    if (s == to_string(c)) return c;
  }
  throw InvalidArgument("UNKNOWN_CATEGORY", "unknown component '" + std::string(name) + "'");
}

std::optional<Span> component_span(const ArgumentAnnotation& annotation, Component component) {
  switch (component) {
    case Component::Collective: return annotation.collective;
    case Component::Property: return annotation.property;
    case Component::Justification:
      if (annotation.justification) return annotation.justification->span;
      return std::nullopt;
    case Component::Conclusion:
      if (annotation.conclusion) return annotation.conclusion->span;
      return std::nullopt;
    case Component::Pivot:
      if (annotation.pivot) {
        return Span::merge(annotation.pivot->justification_side, annotation.pivot->conclusion_side);
      }
      return std::nullopt;
  }
  return std::nullopt;
}

const ArgumentAnnotation* AnnotationLayer::find(const std::string& tweet_id) const {
  auto it = annotations.find(tweet_id);
  return it == annotations.end() ? nullptr : &it->second;
}

void AnnotatedCorpus::add_tweet(Tweet tweet) {
  if (index_.count(tweet.id())) {
    throw InvalidArgument("DUPLICATE_TWEET", "duplicate tweet id " + tweet.id());
  }
  index_.emplace(tweet.id(), tweets_.size());
  tweets_.push_back(std::move(tweet));
}

void AnnotatedCorpus::add_annotation(const std::string& annotator_id, const std::string& tweet_id,
                                     ArgumentAnnotation annotation) {
  if (!index_.count(tweet_id)) {
    throw InvalidArgument("UNKNOWN_TWEET", "annotation references unknown tweet " + tweet_id);
  }
  auto& layer = layers_[annotator_id];
  layer.annotator_id = annotator_id;
  layer.annotations.insert_or_assign(tweet_id, std::move(annotation));
}

const Tweet* AnnotatedCorpus::find(const std::string& tweet_id) const {
  auto it = index_.find(tweet_id);
  return it == index_.end() ? nullptr : &tweets_[it->second];
}

const AnnotationLayer& AnnotatedCorpus::layer(const std::string& annotator_id) const {
  auto it = layers_.find(annotator_id);
  if (it == layers_.end()) {
    throw InvalidArgument("UNKNOWN_LAYER", "corpus has no annotation layer '" + annotator_id + "'");
  }
  return it->second;
}

bool AnnotatedCorpus::layers_equal(const AnnotatedCorpus& other) const {
  if (layers_.size() != other.layers_.size()) return false;
  for (const auto& [name, layer] : layers_) {
    auto it = other.layers_.find(name);
    if (it == other.layers_.end() || it->second.annotations != layer.annotations) return false;
  }
  return true;
}

}  // namespace argmine
