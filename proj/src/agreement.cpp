#include "argmine/agreement.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

#include "argmine/errors.hpp"
#include "argmine/tokenizer.hpp"
#include "json.hpp"

namespace argmine {

std::string_view to_string(AgreementCategory category) {
  switch (category) {
    case AgreementCategory::Argumentative: return "argumentative";
    case AgreementCategory::Collective: return "collective";
    case AgreementCategory::Property: return "property";
    case AgreementCategory::Pivot: return "pivot";
    case AgreementCategory::Justification: return "justification";
    case AgreementCategory::Conclusion: return "conclusion";
    case AgreementCategory::TypeOfConclusion: return "type_of_conclusion";
    case AgreementCategory::TypeOfJustification: return "type_of_justification";
  }
  return "argumentative";
}

std::string_view display_name(AgreementCategory category) {
  switch (category) {
    case AgreementCategory::Argumentative: return "Argumentative";
    case AgreementCategory::Collective: return "Collective";
    case AgreementCategory::Property: return "Property";
    case AgreementCategory::Pivot: return "Pivot";
    case AgreementCategory::Justification: return "Justif.";
    case AgreementCategory::Conclusion: return "Concl.";
    case AgreementCategory::TypeOfConclusion: return "Type of Conc.";
    case AgreementCategory::TypeOfJustification: return "Type of Just.";
  }
  return "";
}

AgreementCategory parse_agreement_category(std::string_view name) {
  for (auto c : kAgreementCategories) {
    if (name == to_string(c)) return c;
  }
  throw InvalidArgument("UNKNOWN_CATEGORY", "unknown agreement category '" + std::string(name) + "'");
}

std::optional<Component> as_component(AgreementCategory category) {
  switch (category) {
    case AgreementCategory::Collective: return Component::Collective;
    case AgreementCategory::Property: return Component::Property;
    case AgreementCategory::Pivot: return Component::Pivot;
    case AgreementCategory::Justification: return Component::Justification;
    case AgreementCategory::Conclusion: return Component::Conclusion;
    default: return std::nullopt;
  }
}

ContingencyTable::ContingencyTable(std::size_t domain_size)
    : k_(domain_size), cells_(domain_size * domain_size, 0) {}

void ContingencyTable::add(std::size_t label_a, std::size_t label_b, std::uint64_t count) {
  cells_.at(label_a * k_ + label_b) += count;
  total_ += count;
}

ContingencyTable& ContingencyTable::operator+=(const ContingencyTable& other) {
  if (other.k_ != k_) throw InvalidArgument("DOMAIN_MISMATCH", "contingency tables differ in size");
  for (std::size_t i = 0; i < cells_.size(); ++i) cells_[i] += other.cells_[i];
  total_ += other.total_;
  return *this;
}

std::uint64_t ContingencyTable::at(std::size_t label_a, std::size_t label_b) const {
  return cells_.at(label_a * k_ + label_b);
}

std::optional<double> ContingencyTable::kappa() const {
  if (total_ == 0) return std::nullopt;
  // kappa = (n * agree - sum_c row_c * col_c) / (n^2 - sum_c row_c * col_c)
  unsigned __int128 agree = 0;
  unsigned __int128 chance = 0;
  for (std::size_t c = 0; c < k_; ++c) {
    agree += cells_[c * k_ + c];
    std::uint64_t row = 0;
    std::uint64_t col = 0;
    for (std::size_t x = 0; x < k_; ++x) {
      row += cells_[c * k_ + x];
      col += cells_[x * k_ + c];
    }
    chance += static_cast<unsigned __int128>(row) * col;
  }
  const unsigned __int128 n = total_;
  const unsigned __int128 n2 = n * n;
  if (chance == n2) return std::nullopt;
  const auto numerator = static_cast<long double>(n * agree) - static_cast<long double>(chance);
  const auto denominator = static_cast<long double>(n2 - chance);
  return static_cast<double>(numerator / denominator);
}

std::optional<double> cohen_kappa(std::span<const int> labels_a, std::span<const int> labels_b,
                                  std::span<const int> label_domain) {
  if (labels_a.size() != labels_b.size()) {
    throw InvalidArgument("LENGTH_MISMATCH", "label vectors differ in length");
  }
  if (labels_a.empty()) throw InvalidArgument("EMPTY_INPUT", "kappa needs at least one item");
  auto index_of = [&](int label) {
    auto it = std::find(label_domain.begin(), label_domain.end(), label);
    if (it == label_domain.end()) {
      throw InvalidArgument("OUT_OF_DOMAIN", "label " + std::to_string(label) + " not in domain");
    }
    return static_cast<std::size_t>(it - label_domain.begin());
  };
  ContingencyTable table(label_domain.size());
  for (std::size_t i = 0; i < labels_a.size(); ++i) table.add(index_of(labels_a[i]), index_of(labels_b[i]));
  return table.kappa();
}

std::optional<double> cohen_kappa(const std::vector<bool>& labels_a, const std::vector<bool>& labels_b) {
  std::vector<int> a(labels_a.begin(), labels_a.end());
  std::vector<int> b(labels_b.begin(), labels_b.end());
  const int domain[] = {0, 1};
  return cohen_kappa(a, b, domain);
}

HarmonizedMasks harmonize_spans(const std::vector<bool>& mask_a, const std::vector<bool>& mask_b) {
  if (mask_a.size() != mask_b.size()) {
    throw InvalidArgument("LENGTH_MISMATCH", "masks differ in length");
  }
  const auto count_a = std::count(mask_a.begin(), mask_a.end(), true);
  const auto count_b = std::count(mask_b.begin(), mask_b.end(), true);
  if (count_a == 0 && count_b == 0) return {mask_a, mask_b, true};
  const bool a_smaller = count_a <= count_b;
  const auto& smaller = a_smaller ? mask_a : mask_b;
  const auto smaller_count = a_smaller ? count_a : count_b;
  std::size_t intersection = 0;
  for (std::size_t i = 0; i < mask_a.size(); ++i) intersection += mask_a[i] && mask_b[i];
  if (smaller_count > 0 && 2 * static_cast<long>(intersection) >= smaller_count) {
    return {smaller, smaller, true};
  }
  return {mask_a, mask_b, false};
}

std::vector<const Tweet*> shared_tweets(const AnnotatedCorpus& corpus, const std::string& layer_a,
                                        const std::string& layer_b) {
  const auto& a = corpus.layer(layer_a);
  const auto& b = corpus.layer(layer_b);
  std::vector<const Tweet*> out;
  for (const auto& t : corpus.tweets()) {
    if (a.find(t.id()) && b.find(t.id())) out.push_back(&t);
  }
  return out;
}

namespace {

std::size_t type_index(PropositionType t) { return static_cast<std::size_t>(t); }

}  // namespace

CategoryAgreement category_agreement(const AnnotatedCorpus& corpus, const std::string& layer_a,
                                     const std::string& layer_b, AgreementCategory category) {
  const auto tweets = shared_tweets(corpus, layer_a, layer_b);
  if (tweets.empty()) {
    throw InvalidArgument("EMPTY_INTERSECTION",
                          "layers " + layer_a + " and " + layer_b + " share no tweet");
  }
  const auto& la = corpus.layer(layer_a);
  const auto& lb = corpus.layer(layer_b);

  if (category == AgreementCategory::Argumentative) {
    ContingencyTable table(2);
    for (const auto* t : tweets) {
      table.add(la.find(t->id())->argumentative, lb.find(t->id())->argumentative);
    }
    return {table.kappa(), static_cast<std::size_t>(table.total())};
  }

  if (category == AgreementCategory::TypeOfConclusion ||
      category == AgreementCategory::TypeOfJustification) {
    const bool conclusion = category == AgreementCategory::TypeOfConclusion;
    ContingencyTable table(3);
    for (const auto* t : tweets) {
      const auto& pa = conclusion ? la.find(t->id())->conclusion : la.find(t->id())->justification;
      const auto& pb = conclusion ? lb.find(t->id())->conclusion : lb.find(t->id())->justification;
      if (pa && pb) table.add(type_index(pa->type), type_index(pb->type));
    }
    return {table.kappa(), static_cast<std::size_t>(table.total())};
  }

  const Component component = *as_component(category);
  ContingencyTable table(2);
  for (const auto* t : tweets) {
    const auto tokens = tokenize(std::u32string_view(t->code_points()));
    auto mask = [&](const ArgumentAnnotation& a) {
      if (auto span = component_span(a, component)) {
        return span_to_token_mask(*span, tokens, t->length());
      }
      return std::vector<bool>(tokens.size(), false);
    };
    const auto h = harmonize_spans(mask(*la.find(t->id())), mask(*lb.find(t->id())));
    for (std::size_t i = 0; i < tokens.size(); ++i) table.add(h.a[i], h.b[i]);
  }
  return {table.kappa(), static_cast<std::size_t>(table.total())};
}

AgreementReport agreement_report(const AnnotatedCorpus& corpus, const std::string& layer_a,
                                 const std::string& layer_b) {
  AgreementReport report;
  for (auto c : kAgreementCategories) {
    report.categories[c] = category_agreement(corpus, layer_a, layer_b, c);
  }
  return report;
}

std::string AgreementReport::to_json() const {
  nlohmann::ordered_json out;
  out["categories"] = nlohmann::ordered_json::array();
  for (auto c : kAgreementCategories) {
    auto it = categories.find(c);
    if (it == categories.end()) continue;
    nlohmann::ordered_json row;
    row["category"] = std::string(to_string(c));
    row["kappa"] = it->second.kappa ? nlohmann::ordered_json(*it->second.kappa) : nullptr;
    row["support"] = it->second.support;
    out["categories"].push_back(std::move(row));
  }
  return out.dump(2) + "\n";
}

std::string AgreementReport::to_table() const {
  std::ostringstream header, kappa, support;
  header << std::left;
  char buf[32];
  std::snprintf(buf, sizeof buf, "%-9s", "");
  header << buf;
  std::snprintf(buf, sizeof buf, "%-9s", "kappa");
  kappa << buf;
  std::snprintf(buf, sizeof buf, "%-9s", "support");
  support << buf;
  for (auto c : kAgreementCategories) {
    auto it = categories.find(c);
    if (it == categories.end()) continue;
    std::snprintf(buf, sizeof buf, "%15s", std::string(display_name(c)).c_str());
    header << buf;
    if (it->second.kappa) {
      std::snprintf(buf, sizeof buf, "%15.2f", *it->second.kappa);
    } else {
      std::snprintf(buf, sizeof buf, "%15s", "undefined");
    }
    kappa << buf;
    std::snprintf(buf, sizeof buf, "%15zu", it->second.support);
    support << buf;
  }
  return header.str() + "\n" + kappa.str() + "\n" + support.str() + "\n";
}

}  // namespace argmine
