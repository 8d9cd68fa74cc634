#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "argmine/corpus_model.hpp"

namespace argmine {

// The eight agreement columns, in report order.
enum class AgreementCategory {
  Argumentative,
  Collective,
  Property,
  Pivot,
  Justification,
  Conclusion,
  TypeOfConclusion,
  TypeOfJustification,
};

inline constexpr AgreementCategory kAgreementCategories[] = {
    AgreementCategory::Argumentative,    AgreementCategory::Collective,
    AgreementCategory::Property,         AgreementCategory::Pivot,
    AgreementCategory::Justification,    AgreementCategory::Conclusion,
    AgreementCategory::TypeOfConclusion, AgreementCategory::TypeOfJustification,
};

std::string_view to_string(AgreementCategory category);
std::string_view display_name(AgreementCategory category);
AgreementCategory parse_agreement_category(std::string_view name);
// Span-valued categories map onto a Component; the others return nullopt.
std::optional<Component> as_component(AgreementCategory category);

// Square table of co-occurrence counts between two annotators over a label
// domain of size k. Tables add, so per-tweet tables pool by summation.
class ContingencyTable {
 public:
  explicit ContingencyTable(std::size_t domain_size);

  void add(std::size_t label_a, std::size_t label_b, std::uint64_t count = 1);
  ContingencyTable& operator+=(const ContingencyTable& other);

  std::uint64_t at(std::size_t label_a, std::size_t label_b) const;
  std::uint64_t total() const { return total_; }
  std::size_t domain_size() const { return k_; }

  // (p_o - p_e) / (1 - p_e), evaluated in exact integer arithmetic up to the
  // final division; nullopt when chance agreement is 1 or the table is empty.
  std::optional<double> kappa() const;

 private:
  std::size_t k_;
  std::vector<std::uint64_t> cells_;
  std::uint64_t total_ = 0;
};

// Throws InvalidArgument on length mismatch, empty input, or a label outside
// the domain.
std::optional<double> cohen_kappa(std::span<const int> labels_a, std::span<const int> labels_b,
                                  std::span<const int> label_domain);
std::optional<double> cohen_kappa(const std::vector<bool>& labels_a,
                                  const std::vector<bool>& labels_b);

struct HarmonizedMasks {
  std::vector<bool> a;
  std::vector<bool> b;
  bool matched = false;
};

// When at least half of the smaller marked component (ties: a) is also
// marked by the other annotator, both masks become the smaller one.
HarmonizedMasks harmonize_spans(const std::vector<bool>& mask_a, const std::vector<bool>& mask_b);

struct CategoryAgreement {
  std::optional<double> kappa;
  std::size_t support = 0;  // tweets or tokens behind the coefficient
};

// Tweets annotated in both layers, in corpus order.
std::vector<const Tweet*> shared_tweets(const AnnotatedCorpus& corpus, const std::string& layer_a,
                                        const std::string& layer_b);

// Throws InvalidArgument("EMPTY_INTERSECTION") when the layers share no tweet.
CategoryAgreement category_agreement(const AnnotatedCorpus& corpus, const std::string& layer_a,
                                     const std::string& layer_b, AgreementCategory category);

struct AgreementReport {
  std::map<AgreementCategory, CategoryAgreement> categories;

  std::string to_json() const;
  std::string to_table() const;
};

AgreementReport agreement_report(const AnnotatedCorpus& corpus, const std::string& layer_a,
                                 const std::string& layer_b);

}  // namespace argmine
