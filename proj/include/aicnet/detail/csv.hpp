#pragma once

#include <cstddef>
#include <istream>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "aicnet/error.hpp"

namespace aicnet::detail {

struct CsvRow {
  std::size_t line = 0;  // 1-based line where the record starts
  std::vector<std::string> fields;
};

// RFC 4180 reader: quoted fields may contain commas, doubled quotes and
// newlines. A trailing CR before LF is dropped.
class CsvReader {
 public:
  explicit CsvReader(std::istream& in) : in_(in) {}

  std::optional<CsvRow> next() {
    CsvRow row;
    std::string field;
    bool in_quotes = false;
    bool any = false;
    bool was_quoted = false;
    row.line = line_;
    int ch;
    while ((ch = in_.get()) != std::char_traits<char>::eof()) {
      any = true;
      const char c = static_cast<char>(ch);
      if (in_quotes) {
        if (c == '"') {
          if (in_.peek() == '"') {
            in_.get();
            field.push_back('"');
          } else {
            in_quotes = false;
          }
        } else {
          if (c == '\n') ++line_;
          field.push_back(c);
        }
        continue;
      }
      if (c == '"') {
        if (!field.empty() || was_quoted)
          throw Error(ErrorCode::Parse, "", "stray quote inside CSV field", line_);
        in_quotes = true;
        was_quoted = true;
      } else if (c == ',') {
        row.fields.push_back(std::move(field));
        field.clear();
        was_quoted = false;
      } else if (c == '\n') {
        ++line_;
        if (!field.empty() && field.back() == '\r' && !was_quoted) field.pop_back();
        row.fields.push_back(std::move(field));
        return row;
      } else {
        if (was_quoted && c != '\r')
          throw Error(ErrorCode::Parse, "", "text after closing quote", line_);
        if (!was_quoted) field.push_back(c);
      }
    }
    if (in_quotes) throw Error(ErrorCode::Parse, "", "unterminated quoted field", row.line);
    if (!any) return std::nullopt;
    row.fields.push_back(std::move(field));
    ++line_;
    return row;
  }

 private:
  std::istream& in_;
  std::size_t line_ = 1;
};

inline std::string csv_escape(std::string_view value) {
  const bool needs_quotes =
      value.find_first_of(",\"\r\n") != std::string_view::npos;
  if (!needs_quotes) return std::string(value);
  std::string out = "\"";
  for (const char c : value) {
    if (c == '"') out.push_back('"');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

}  // namespace aicnet::detail
