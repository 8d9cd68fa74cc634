#include <algorithm>
#include <random>

#include "argmine/validate.hpp"
#include "doctest.h"

using namespace argmine;

namespace {

const Tweet kTweet("t1", Language::EN, "They steal our jobs so deport them all now");

bool has(const ValidationReport& r, const std::string& code, Severity severity) {
  return std::any_of(r.issues.begin(), r.issues.end(),
                     [&](const Issue& i) { return i.code == code && i.severity == severity; });
}

ArgumentAnnotation full() {
  ArgumentAnnotation a;
  a.argumentative = true;
  a.justification = Premise{Span(0, 19), PropositionType::Fact};
  a.conclusion = Premise{Span(23, 42), PropositionType::Policy};
  a.collective = Span(0, 4);
  a.property = Span(5, 19);
  a.pivot = Pivot{Span(0, 4), Span(30, 34)};
  return a;
}

}  // namespace

TEST_CASE("non-argumentative tweet without components is clean") {
  CHECK(validate(kTweet, {}, ValidationMode::Strict).clean());
}

TEST_CASE("complete argument is clean in both modes") {
  CHECK(validate(kTweet, full(), ValidationMode::Strict).clean());
  CHECK(validate(kTweet, full(), ValidationMode::Lenient).clean());
}

TEST_CASE("components on a non-argumentative tweet are errors") {
  auto a = full();
  a.argumentative = false;
  const auto r = validate(kTweet, a, ValidationMode::Lenient);
  CHECK(has(r, "COMPONENT_ON_NON_ARGUMENTATIVE", Severity::Error));
}

TEST_CASE("argumentative tweets need both premises") {
  auto a = full();
  a.conclusion.reset();
  a.pivot.reset();
  CHECK(has(validate(kTweet, a, ValidationMode::Lenient), "MISSING_CONCLUSION", Severity::Error));
  a = full();
  a.justification.reset();
  a.pivot.reset();
  CHECK(has(validate(kTweet, a, ValidationMode::Lenient), "MISSING_JUSTIFICATION", Severity::Error));
}

TEST_CASE("spans past the text end are errors") {
  auto a = full();
  a.conclusion->span = Span(23, 60);
  CHECK(has(validate(kTweet, a, ValidationMode::Lenient), "SPAN_OUT_OF_BOUNDS", Severity::Error));
}

TEST_CASE("lenient mode demotes pairing and containment problems") {
  auto a = full();
  a.property.reset();
  CHECK(has(validate(kTweet, a, ValidationMode::Strict), "COLLECTIVE_WITHOUT_PROPERTY", Severity::Error));
  CHECK(has(validate(kTweet, a, ValidationMode::Lenient), "COLLECTIVE_WITHOUT_PROPERTY", Severity::Warning));

  a = full();
  a.pivot->conclusion_side = Span(5, 10);
  CHECK(has(validate(kTweet, a, ValidationMode::Strict), "PIVOT_OUTSIDE_CONCLUSION", Severity::Error));
  const auto lenient = validate(kTweet, a, ValidationMode::Lenient);
  CHECK(has(lenient, "PIVOT_OUTSIDE_CONCLUSION", Severity::Warning));
  CHECK(lenient.error_count() == 0);
}

TEST_CASE("strict issues cover lenient issues on random annotations") {
  std::mt19937_64 rng(5);
  const std::size_t n = kTweet.length();
  auto rand_span = [&]() {
    const std::size_t s = rng() % (n + 4);
    return Span(s, s + 1 + rng() % 8);
  };
  for (int round = 0; round < 500; ++round) {
    ArgumentAnnotation a;
    a.argumentative = rng() % 4 != 0;
    if (rng() % 3) a.justification = Premise{rand_span(), PropositionType::Fact};
    if (rng() % 3) a.conclusion = Premise{rand_span(), PropositionType::Value};
    if (rng() % 2) a.collective = rand_span();
    if (rng() % 2) a.property = rand_span();
    if (rng() % 3 == 0) a.pivot = Pivot{rand_span(), rand_span()};
    const auto strict = validate(kTweet, a, ValidationMode::Strict);
    const auto lenient = validate(kTweet, a, ValidationMode::Lenient);
    CHECK(strict.issues.size() == lenient.issues.size());
    CHECK(strict.error_count() >= lenient.error_count());
    for (const auto& issue : lenient.issues) {
      CHECK(has(strict, issue.code, Severity::Error));
    }
    CHECK(validate(kTweet, a, ValidationMode::Strict).issues == strict.issues);
  }
}
