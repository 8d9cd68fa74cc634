#include "argmine/hateval.hpp"

#include <istream>
#include <sstream>

#include "argmine/errors.hpp"

namespace argmine {

std::vector<Tweet> filter_hateval(const std::vector<HatevalRecord>& records) {
  std::vector<Tweet> kept;
  for (const auto& r : records) {
    if (!r.hate_speech || r.aggressive || r.targeted_individual) continue;
    kept.emplace_back(r.id, r.language, r.text,
                      SourceFlags{r.hate_speech, r.targeted_individual, r.aggressive});
  }
  return kept;
}

namespace {

// Splits one delimited record, honoring double-quoted fields that may span
// lines. Returns false at end of input.
bool next_record(std::istream& in, char delimiter, std::vector<std::string>& fields,
                 std::size_t& line) {
  fields.clear();
  std::string field;
  bool quoted = false;
  bool any = false;
  char c;
  while (in.get(c)) {
    any = true;
    if (quoted) {
      if (c == '"') {
        if (in.peek() == '"') {
          in.get(c);
          field += '"';
        } else {
          quoted = false;
        }
      } else {
        if (c == '\n') ++line;
        field += c;
      }
    } else if (c == '"' && field.empty()) {
      quoted = true;
    } else if (c == delimiter) {
      fields.push_back(std::move(field));
      field.clear();
    } else if (c == '\n') {
      ++line;
      if (!field.empty() && field.back() == '\r') field.pop_back();
      fields.push_back(std::move(field));
      return true;
    } else {
      field += c;
    }
  }
  if (!any) return false;
  if (!field.empty() && field.back() == '\r') field.pop_back();
  fields.push_back(std::move(field));
  return true;
}

bool parse_flag(const std::string& s, std::size_t line) {
  if (s == "1") return true;
  if (s == "0") return false;
  throw ParseError("BAD_FIELD", "flag must be 0 or 1, got '" + s + "'", line);
}

}  // namespace

std::vector<HatevalRecord> read_hateval_tsv(std::istream& in, Language language) {
  std::string header;
  if (!std::getline(in, header)) return {};
  const char delimiter = header.find('\t') != std::string::npos ? '\t' : ',';

  std::vector<HatevalRecord> records;
  std::vector<std::string> fields;
  std::size_t line = 1;
  while (true) {
    const std::size_t record_line = line + 1;
    if (!next_record(in, delimiter, fields, line)) break;
    if (fields.size() == 1 && fields[0].empty()) continue;
    if (fields.size() != 5) {
      throw ParseError("BAD_FIELD", "expected 5 columns, got " + std::to_string(fields.size()),
                       record_line);
    }
    if (fields[1].empty()) throw ParseError("EMPTY_TEXT", "record has empty text", record_line);
    records.push_back(HatevalRecord{fields[0], fields[1], parse_flag(fields[2], record_line),
                                    parse_flag(fields[3], record_line),
                                    parse_flag(fields[4], record_line), language});
  }
  return records;
}

}  // namespace argmine
