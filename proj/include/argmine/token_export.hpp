#pragma once

#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "argmine/corpus_model.hpp"
#include "argmine/normalizer.hpp"
#include "argmine/tokenizer.hpp"

namespace argmine {

// The two component pairs that are predicted jointly.
enum class JointPair { CollectiveProperty, JustificationConclusion };

using ExportTarget = std::variant<Component, JointPair>;

inline constexpr std::string_view kInsideLabel = "IN";
inline constexpr std::string_view kOutsideLabel = "OUT";

std::string_view to_string(JointPair pair);
// Joint labels are the upper-cased component names, e.g. "COLLECTIVE".
std::string joint_label(Component component);
// Parses a component name or "collective+property" / "justification+conclusion".
// Throws InvalidArgument("UNKNOWN_CATEGORY") or ("INVALID_JOINT_PAIR").
ExportTarget parse_export_target(std::string_view name);

struct LabeledBlock {
  std::string tweet_id;
  std::vector<Token> tokens;
  std::vector<std::string> labels;

  bool operator==(const LabeledBlock&) const = default;
};

struct ExportResult {
  std::vector<LabeledBlock> blocks;
  std::vector<std::string> warnings;
};

// Labels the tokens of one annotated text. Binary targets give IN/OUT; joint
// targets give the two component labels or OUT, the first-listed component
// winning (with a warning) where both claim a token. Pivot is labeled over
// the union of its two sides.
LabeledBlock label_block(const std::string& tweet_id, std::u32string_view text,
                         const ArgumentAnnotation& annotation, const ExportTarget& target,
                         std::vector<std::string>* warnings = nullptr);

// One block per tweet annotated in `layer`, in corpus order. With a
// normalizer, spans are projected and tokens come from the normalized text.
ExportResult export_token_classification(const AnnotatedCorpus& corpus, const std::string& layer,
                                         const ExportTarget& target,
                                         const Normalizer* normalizer = nullptr);

// Blank-line separated blocks, "# id=<tweet-id>" header, token<TAB>label rows.
std::string format_conll(const std::vector<LabeledBlock>& blocks);
// Inverse of format_conll; token offsets are not recoverable and are left 0.
std::vector<LabeledBlock> parse_conll(std::string_view content);

}  // namespace argmine
