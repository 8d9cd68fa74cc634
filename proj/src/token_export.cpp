#include "argmine/token_export.hpp"

#include <algorithm>
#include <cctype>

#include "argmine/errors.hpp"
#include "argmine/utf8.hpp"

namespace argmine {

std::string_view to_string(JointPair pair) {
  return pair == JointPair::CollectiveProperty ? "collective+property"
                                               : "justification+conclusion";
}

std::string joint_label(Component component) {
  std::string out(to_string(component));
  for (auto& c : out) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  return out;
}

ExportTarget parse_export_target(std::string_view name) {
  std::string s(name);
  for (auto& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  const auto plus = s.find('+');
  if (plus == std::string::npos) return parse_component(s);
  const auto a = parse_component(s.substr(0, plus));
  const auto b = parse_component(s.substr(plus + 1));
  if (a == Component::Collective && b == Component::Property) return JointPair::CollectiveProperty;
  if (a == Component::Justification && b == Component::Conclusion) {
    return JointPair::JustificationConclusion;
  }
  throw InvalidArgument("INVALID_JOINT_PAIR",
                        "joint export supports collective+property or justification+conclusion, got '" +
                            std::string(name) + "'");
}

namespace {

std::vector<bool> mask_for(const ArgumentAnnotation& a, Component c, const std::vector<Token>& tokens,
                           std::size_t length) {
  if (auto span = component_span(a, c)) return span_to_token_mask(*span, tokens, length);
  return std::vector<bool>(tokens.size(), false);
}

}  // namespace

LabeledBlock label_block(const std::string& tweet_id, std::u32string_view text,
                         const ArgumentAnnotation& annotation, const ExportTarget& target,
                         std::vector<std::string>* warnings) {
  LabeledBlock block{tweet_id, tokenize(text), {}};
  const auto& tokens = block.tokens;
  block.labels.assign(tokens.size(), std::string(kOutsideLabel));

  if (const auto* component = std::get_if<Component>(&target)) {
    const auto mask = mask_for(annotation, *component, tokens, text.size());
    for (std::size_t i = 0; i < tokens.size(); ++i) {
      if (mask[i]) block.labels[i] = kInsideLabel;
    }
    return block;
  }

  const auto pair = std::get<JointPair>(target);
  const Component first =
      pair == JointPair::CollectiveProperty ? Component::Collective : Component::Justification;
  const Component second =
      pair == JointPair::CollectiveProperty ? Component::Property : Component::Conclusion;
  const auto a = mask_for(annotation, first, tokens, text.size());
  const auto b = mask_for(annotation, second, tokens, text.size());
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (a[i]) {
      block.labels[i] = joint_label(first);
      if (b[i] && warnings) {
        warnings->push_back("tweet " + tweet_id + ": token " + std::to_string(i) + " '" +
                            tokens[i].text + "' is both " + std::string(to_string(first)) +
                            " and " + std::string(to_string(second)) + "; labeled " +
                            std::string(to_string(first)));
      }
    } else if (b[i]) {
      block.labels[i] = joint_label(second);
    }
  }
  return block;
}

ExportResult export_token_classification(const AnnotatedCorpus& corpus, const std::string& layer_name,
                                         const ExportTarget& target, const Normalizer* normalizer) {
  const auto& layer = corpus.layer(layer_name);
  ExportResult result;
  for (const auto& tweet : corpus.tweets()) {
    const auto* annotation = layer.find(tweet.id());
    if (!annotation) continue;
    if (!normalizer) {
      result.blocks.push_back(
          label_block(tweet.id(), tweet.code_points(), *annotation, target, &result.warnings));
      continue;
    }
    const auto normalized = normalizer->normalize(tweet);
    const auto projected = project_annotation(*annotation, normalized);
    const auto text = utf8::decode(normalized.text);
    result.blocks.push_back(label_block(tweet.id(), text, projected, target, &result.warnings));
  }
  return result;
}

std::string format_conll(const std::vector<LabeledBlock>& blocks) {
  std::string out;
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    if (b > 0) out += '\n';
    out += "# id=" + blocks[b].tweet_id + '\n';
    for (std::size_t i = 0; i < blocks[b].tokens.size(); ++i) {
      out += blocks[b].tokens[i].text + '\t' + blocks[b].labels[i] + '\n';
    }
  }
  return out;
}

std::vector<LabeledBlock> parse_conll(std::string_view content) {
  std::vector<LabeledBlock> blocks;
  bool open = false;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= content.size()) {
    auto nl = content.find('\n', pos);
    if (nl == std::string_view::npos) nl = content.size();
    auto line = content.substr(pos, nl - pos);
    pos = nl + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty()) {
      open = false;
      if (nl == content.size()) break;
      continue;
    }
    if (line.rfind("# id=", 0) == 0) {
      blocks.push_back(LabeledBlock{std::string(line.substr(5)), {}, {}});
      open = true;
      continue;
    }
    if (!open) throw ParseError("BAD_CONLL", "token row outside a block", line_no);
    const auto tab = line.find('\t');
    if (tab == std::string_view::npos) throw ParseError("BAD_CONLL", "row needs token<TAB>label", line_no);
    blocks.back().tokens.push_back(Token{std::string(line.substr(0, tab)), 0, 0});
    blocks.back().labels.emplace_back(line.substr(tab + 1));
  }
  return blocks;
}

}  // namespace argmine
