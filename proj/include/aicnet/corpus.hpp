#pragma once

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstddef>
#include <filesystem>
#include <fstream>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "json.hpp"

#include "aicnet/detail/csv.hpp"
#include "aicnet/detail/utf8.hpp"
#include "aicnet/error.hpp"

namespace aicnet {

using Id = std::string;

// Lowercase, collapse whitespace runs to one space, trim. Idempotent.
inline std::string normalize_text(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  std::size_t pos = 0;
  bool pending_space = false;
  while (pos < text.size()) {
    const char32_t cp = detail::next_code_point(text, pos);
    if (detail::is_space(cp)) {
      pending_space = !out.empty();
      continue;
    }
    if (pending_space) {
      out.push_back(' ');
      pending_space = false;
    }
    detail::append_utf8(out, detail::to_lower(cp));
  }
  return out;
}

struct Quote {
  Id id;
  Id reading_id;
  std::string text;
  std::string normalized_text;

  static Quote make(Id id, Id reading_id, std::string text) {
    if (detail::trim(text).empty())
      throw Error(ErrorCode::Parse, id, "quote text is empty");
    Quote q{std::move(id), std::move(reading_id), std::move(text), {}};
    q.normalized_text = normalize_text(q.text);
    return q;
  }

  friend bool operator==(const Quote&, const Quote&) = default;
};

enum class ArtifactKind { annotation, reply };

inline std::string_view to_string(ArtifactKind kind) {
  return kind == ArtifactKind::annotation ? "annotation" : "reply";
}

struct Artifact {
  Id id;
  Id author_id;
  Id reading_id;
  ArtifactKind kind = ArtifactKind::annotation;
  std::optional<Id> quote_id;   // annotations only
  std::optional<Id> parent_id;  // replies only
  std::string body;
  std::optional<std::string> timestamp;

  bool is_annotation() const { return kind == ArtifactKind::annotation; }
  bool is_reply() const { return kind == ArtifactKind::reply; }

  friend bool operator==(const Artifact&, const Artifact&) = default;
};

class Reading {
 public:
  Reading() = default;
  explicit Reading(Id id, std::string title = {})
      : id_(std::move(id)), title_(std::move(title)) {}

  const Id& id() const { return id_; }
  const std::string& title() const { return title_; }
  void set_title(std::string title) { title_ = std::move(title); }

  const std::map<Id, Quote>& quotes() const { return quotes_; }
  const std::vector<Artifact>& artifacts() const { return artifacts_; }

  void add_quote(Quote quote) {
    if (quotes_.count(quote.id))
      throw Error(ErrorCode::DuplicateId, quote.id, "quote id repeated in reading " + id_);
    auto key = quote.id;
    quotes_.emplace(std::move(key), std::move(quote));
  }

  void add_artifact(Artifact artifact) {
    if (index_.count(artifact.id))
      throw Error(ErrorCode::DuplicateId, artifact.id,
                  "artifact id repeated in reading " + id_);
    index_.emplace(artifact.id, artifacts_.size());
    artifacts_.push_back(std::move(artifact));
  }

  // Removes an artifact; the caller is responsible for not orphaning replies.
  void remove_artifact(const Id& artifact_id) {
    const auto it = index_.find(artifact_id);
    if (it == index_.end()) return;
    artifacts_.erase(artifacts_.begin() + static_cast<std::ptrdiff_t>(it->second));
    index_.clear();
    for (std::size_t i = 0; i < artifacts_.size(); ++i) index_.emplace(artifacts_[i].id, i);
  }

  const Artifact* find_artifact(const Id& artifact_id) const {
    const auto it = index_.find(artifact_id);
    return it == index_.end() ? nullptr : &artifacts_[it->second];
  }

  const Quote* find_quote(const Id& quote_id) const {
    const auto it = quotes_.find(quote_id);
    return it == quotes_.end() ? nullptr : &it->second;
  }

  // Authors with at least one artifact in this reading.
  std::set<Id> active_authors() const {
    std::set<Id> out;
    for (const auto& a : artifacts_) out.insert(a.author_id);
    return out;
  }

  friend bool operator==(const Reading& a, const Reading& b) {
    return a.id_ == b.id_ && a.title_ == b.title_ && a.quotes_ == b.quotes_ &&
           a.artifacts_ == b.artifacts_;
  }

 private:
  Id id_;
  std::string title_;
  std::map<Id, Quote> quotes_;
  std::vector<Artifact> artifacts_;
  std::unordered_map<Id, std::size_t> index_;
};

// Returns the annotation heading the reply chain that contains `artifact`.
inline const Artifact& thread_root(const Artifact& artifact, const Reading& reading) {
  const Artifact* current = &artifact;
  std::size_t steps = 0;
  while (current->is_reply()) {
    if (++steps > reading.artifacts().size())
      throw Error(ErrorCode::CyclicThread, artifact.id, "reply chain does not terminate");
    const Artifact* parent =
        current->parent_id ? reading.find_artifact(*current->parent_id) : nullptr;
    if (!parent)
      throw Error(ErrorCode::DanglingParent, current->id,
                  "parent " + current->parent_id.value_or("<none>") + " not found");
    current = parent;
  }
  return *current;
}

// Every structural problem in a reading, in artifact order.
inline std::vector<Error> check_reading(const Reading& reading) {
  std::vector<Error> issues;
  for (const auto& a : reading.artifacts()) {
    if (a.reading_id != reading.id())
      issues.emplace_back(ErrorCode::Internal, a.id, "artifact filed under wrong reading");
    if (a.is_annotation()) {
      if (a.parent_id)
        issues.emplace_back(ErrorCode::Parse, a.id, "annotation must not carry parent_id");
      if (!a.quote_id) {
        issues.emplace_back(ErrorCode::MissingQuote, a.id, "annotation without quote_id");
      } else if (!reading.find_quote(*a.quote_id)) {
        issues.emplace_back(ErrorCode::MissingQuote, a.id,
                            "quote " + *a.quote_id + " not in reading " + reading.id());
      }
      if (detail::trim(a.body).empty())
        issues.emplace_back(ErrorCode::Parse, a.id, "annotation body is empty");
    } else {
      if (a.quote_id)
        issues.emplace_back(ErrorCode::Parse, a.id, "reply must not carry quote_id");
      if (!a.parent_id) {
        issues.emplace_back(ErrorCode::DanglingParent, a.id, "reply without parent_id");
      } else if (!reading.find_artifact(*a.parent_id)) {
        issues.emplace_back(ErrorCode::DanglingParent, a.id,
                            "parent " + *a.parent_id + " not in reading " + reading.id());
      }
    }
  }
  // Cycle detection only makes sense once every parent resolves. Each cycle
  // is reported once, against the first artifact (in file order) that leads
  // into it.
  const bool parents_ok = std::none_of(issues.begin(), issues.end(), [](const Error& e) {
    return e.code() == ErrorCode::DanglingParent;
  });
  if (parents_ok) {
    std::set<Id> settled;
    for (const auto& a : reading.artifacts()) {
      std::vector<Id> path;
      std::set<Id> on_path;
      const Artifact* current = &a;
      bool cyclic = false;
      while (current->is_reply() && !settled.count(current->id)) {
        if (!on_path.insert(current->id).second) {
          cyclic = true;
          break;
        }
        path.push_back(current->id);
        current = reading.find_artifact(*current->parent_id);
      }
      if (cyclic)
        issues.emplace_back(ErrorCode::CyclicThread, a.id, "reply chain does not terminate");
      settled.insert(path.begin(), path.end());
    }
  }
  return issues;
}

class Corpus {
 public:
  Corpus() = default;

  // Validates every reading; throws the first structural error found.
  explicit Corpus(std::map<Id, Reading> readings) : readings_(std::move(readings)) {
    for (const auto& [id, reading] : readings_) {
      auto issues = check_reading(reading);
      if (!issues.empty()) throw issues.front();
      for (const auto& a : reading.artifacts()) authors_.insert(a.author_id);
    }
    std::set<Id> seen_quotes;
    for (const auto& [id, reading] : readings_)
      for (const auto& [qid, q] : reading.quotes())
        if (!seen_quotes.insert(qid).second)
          throw Error(ErrorCode::DuplicateId, qid, "quote id used in more than one reading");
  }

  const std::map<Id, Reading>& readings() const { return readings_; }
  const std::set<Id>& authors() const { return authors_; }

  const Reading& reading(const Id& reading_id) const {
    const auto it = readings_.find(reading_id);
    if (it == readings_.end())
      throw Error(ErrorCode::UnknownReading, reading_id, "no such reading");
    return it->second;
  }

  std::size_t artifact_count() const {
    std::size_t n = 0;
    for (const auto& [id, r] : readings_) n += r.artifacts().size();
    return n;
  }

  friend bool operator==(const Corpus& a, const Corpus& b) {
    return a.readings_ == b.readings_ && a.authors_ == b.authors_;
  }

 private:
  std::map<Id, Reading> readings_;
  std::set<Id> authors_;
};

inline const Artifact& thread_root(const Artifact& artifact, const Corpus& corpus) {
  return thread_root(artifact, corpus.reading(artifact.reading_id));
}

// Number of reply hops from `artifact` to its root annotation.
inline std::size_t thread_depth(const Artifact& artifact, const Reading& reading) {
  std::size_t depth = 0;
  const Artifact* current = &artifact;
  while (current->is_reply()) {
    current = reading.find_artifact(current->parent_id.value());
    if (++depth > reading.artifacts().size())
      throw Error(ErrorCode::CyclicThread, artifact.id, "reply chain does not terminate");
  }
  return depth;
}

// Merges two corpora whose reading ids are disjoint.
inline Corpus merge_corpora(const Corpus& a, const Corpus& b) {
  auto readings = a.readings();
  for (const auto& [id, r] : b.readings()) {
    if (!readings.emplace(id, r).second)
      throw Error(ErrorCode::DuplicateId, id, "reading present in both corpora");
  }
  return Corpus(std::move(readings));
}

// ---------------------------------------------------------------------------
// Serialization

enum class CorpusFormat { jsonl, csv };

inline CorpusFormat format_from_path(const std::filesystem::path& path) {
  auto ext = path.extension().string();
  for (auto& c : ext) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return ext == ".csv" ? CorpusFormat::csv : CorpusFormat::jsonl;
}

// Result of a full validation pass: the corpus when clean, otherwise every
// problem found (line-numbered where the problem is local to one record).
struct CorpusCheck {
  std::optional<Corpus> corpus;
  std::vector<Error> issues;
};

namespace detail {

// One decoded input record, before cross-record validation.
struct RawRecord {
  std::size_t line = 0;
  std::map<std::string, std::string> fields;
  std::set<std::string> present;
};

inline const std::vector<std::string>& corpus_columns() {
  static const std::vector<std::string> columns = {
      "record", "id", "reading_id", "author_id", "kind", "quote_id",
      "parent_id", "body", "ts", "text", "title"};
  return columns;
}

inline void read_jsonl_records(std::istream& in, std::vector<RawRecord>& out,
                               std::vector<Error>& issues) {
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (trim(line).empty()) continue;
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(line);
    } catch (const nlohmann::json::parse_error& e) {
      issues.emplace_back(ErrorCode::Parse, "", std::string("invalid JSON: ") + e.what(), line_no);
      continue;
    }
    if (!j.is_object()) {
      issues.emplace_back(ErrorCode::Parse, "", "record is not a JSON object", line_no);
      continue;
    }
    RawRecord rec;
    rec.line = line_no;
    bool ok = true;
    for (const auto& [key, value] : j.items()) {
      if (value.is_null()) continue;
      if (!value.is_string()) {
        issues.emplace_back(ErrorCode::Parse, "", "field '" + key + "' must be a string", line_no);
        ok = false;
        break;
      }
      rec.fields[key] = value.get<std::string>();
      rec.present.insert(key);
    }
    if (ok) out.push_back(std::move(rec));
  }
}

inline void read_csv_records(std::istream& in, std::vector<RawRecord>& out,
                             std::vector<Error>& issues) {
  CsvReader reader(in);
  std::optional<CsvRow> header;
  try {
    header = reader.next();
  } catch (const Error& e) {
    issues.push_back(e);
    return;
  }
  if (!header) return;
  const auto& names = header->fields;
  for (const auto& n : names) {
    if (std::find(corpus_columns().begin(), corpus_columns().end(), n) == corpus_columns().end()) {
      issues.emplace_back(ErrorCode::Parse, "", "unknown CSV column '" + n + "'", header->line);
      return;
    }
  }
  while (true) {
    std::optional<CsvRow> row;
    try {
      row = reader.next();
    } catch (const Error& e) {
      issues.push_back(e);
      return;
    }
    if (!row) break;
    if (row->fields.size() == 1 && trim(row->fields[0]).empty()) continue;
    if (row->fields.size() != names.size()) {
      issues.emplace_back(ErrorCode::Parse, "",
                          "expected " + std::to_string(names.size()) + " columns, got " +
                              std::to_string(row->fields.size()),
                          row->line);
      continue;
    }
    RawRecord rec;
    rec.line = row->line;
    for (std::size_t i = 0; i < names.size(); ++i) {
      // CSV cannot distinguish absent from empty; empty optional columns are absent.
      if (row->fields[i].empty() && names[i] != "body") continue;
      rec.fields[names[i]] = row->fields[i];
      rec.present.insert(names[i]);
    }
    out.push_back(std::move(rec));
  }
}

inline bool valid_utf8(std::string_view s) {
  std::size_t pos = 0;
  while (pos < s.size()) {
    const std::size_t before = pos;
    const char32_t cp = next_code_point(s, pos);
    if (cp == 0xFFFD && !(pos - before == 3 && s.substr(before, 3) == "\xEF\xBF\xBD"))
      return false;
  }
  return true;
}

}  // namespace detail

inline CorpusCheck check_corpus(std::istream& in, CorpusFormat format) {
  CorpusCheck result;
  std::vector<detail::RawRecord> records;
  if (format == CorpusFormat::jsonl)
    detail::read_jsonl_records(in, records, result.issues);
  else
    detail::read_csv_records(in, records, result.issues);

  if (records.empty() && result.issues.empty()) {
    result.issues.emplace_back(ErrorCode::EmptyCorpus, "", "no records in input");
    return result;
  }

  std::map<Id, Reading> readings;
  auto reading_for = [&](const Id& id) -> Reading& {
    auto it = readings.find(id);
    if (it == readings.end()) it = readings.emplace(id, Reading(id)).first;
    return it->second;
  };

  for (auto& rec : records) {
    auto issue = [&](ErrorCode code, const std::string& subject, const std::string& reason) {
      result.issues.emplace_back(code, subject, reason, rec.line);
    };
    bool utf8_ok = true;
    for (const auto& [k, v] : rec.fields) utf8_ok = utf8_ok && detail::valid_utf8(v);
    if (!utf8_ok) {
      issue(ErrorCode::Parse, rec.fields["id"], "input is not valid UTF-8");
      continue;
    }
    auto require = [&](const char* key) -> bool {
      if (rec.present.count(key)) return true;
      issue(ErrorCode::Parse, rec.fields["id"], std::string("missing field '") + key + "'");
      return false;
    };
    const std::string record = rec.present.count("record") ? rec.fields["record"] : "artifact";
    try {
      if (record == "quote") {
        if (!require("id") || !require("reading_id") || !require("text")) continue;
        reading_for(rec.fields["reading_id"])
            .add_quote(Quote::make(rec.fields["id"], rec.fields["reading_id"], rec.fields["text"]));
      } else if (record == "reading") {
        if (!require("id")) continue;
        reading_for(rec.fields["id"]).set_title(rec.fields["title"]);
      } else if (record == "artifact") {
        if (!require("id") || !require("reading_id") || !require("author_id") ||
            !require("kind") || !require("body"))
          continue;
        Artifact a;
        a.id = rec.fields["id"];
        a.reading_id = rec.fields["reading_id"];
        a.author_id = rec.fields["author_id"];
        const auto& kind = rec.fields["kind"];
        if (kind == "annotation") {
          a.kind = ArtifactKind::annotation;
        } else if (kind == "reply") {
          a.kind = ArtifactKind::reply;
        } else {
          issue(ErrorCode::Parse, a.id, "kind must be 'annotation' or 'reply', got '" + kind + "'");
          continue;
        }
        if (a.id.empty() || a.author_id.empty() || a.reading_id.empty()) {
          issue(ErrorCode::Parse, a.id, "id, author_id and reading_id must be non-empty");
          continue;
        }
        if (rec.present.count("quote_id")) a.quote_id = rec.fields["quote_id"];
        if (rec.present.count("parent_id")) a.parent_id = rec.fields["parent_id"];
        if (rec.present.count("ts")) a.timestamp = rec.fields["ts"];
        a.body = rec.fields["body"];
        reading_for(a.reading_id).add_artifact(std::move(a));
      } else {
        issue(ErrorCode::Parse, rec.fields["id"], "unknown record type '" + record + "'");
      }
    } catch (const Error& e) {
      result.issues.emplace_back(e.code(), e.subject(), e.reason(), rec.line);
    }
  }

  if (!result.issues.empty()) return result;

  std::map<Id, std::size_t> quote_owner_count;
  for (const auto& [rid, reading] : readings) {
    auto issues = check_reading(reading);
    result.issues.insert(result.issues.end(), issues.begin(), issues.end());
    for (const auto& [qid, q] : reading.quotes()) ++quote_owner_count[qid];
  }
  for (const auto& [qid, n] : quote_owner_count)
    if (n > 1)
      result.issues.emplace_back(ErrorCode::DuplicateId, qid, "quote id used in more than one reading");
  if (result.issues.empty()) result.corpus.emplace(std::move(readings));
  return result;
}

inline Corpus parse_corpus(std::istream& in, CorpusFormat format) {
  auto check = check_corpus(in, format);
  if (!check.corpus) throw check.issues.front();
  return std::move(*check.corpus);
}

inline Corpus load_corpus(const std::filesystem::path& path, CorpusFormat format) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::Io, path.string(), "cannot open corpus file");
  return parse_corpus(in, format);
}

inline Corpus load_corpus(const std::filesystem::path& path) {
  return load_corpus(path, format_from_path(path));
}

// Canonical JSONL: per reading (by id) an optional reading record, quotes by
// id, then artifacts in their original order. Keys are emitted sorted.
inline void write_corpus_jsonl(const Corpus& corpus, std::ostream& out) {
  for (const auto& [rid, reading] : corpus.readings()) {
    if (!reading.title().empty())
      out << nlohmann::json{{"record", "reading"}, {"id", rid}, {"title", reading.title()}}.dump()
          << '\n';
    for (const auto& [qid, q] : reading.quotes())
      out << nlohmann::json{{"record", "quote"}, {"id", qid}, {"reading_id", rid}, {"text", q.text}}
                 .dump()
          << '\n';
    for (const auto& a : reading.artifacts()) {
      nlohmann::json j{{"id", a.id},
                       {"reading_id", a.reading_id},
                       {"author_id", a.author_id},
                       {"kind", std::string(to_string(a.kind))},
                       {"body", a.body}};
      if (a.quote_id) j["quote_id"] = *a.quote_id;
      if (a.parent_id) j["parent_id"] = *a.parent_id;
      if (a.timestamp) j["ts"] = *a.timestamp;
      out << j.dump() << '\n';
    }
  }
}

inline void write_corpus_csv(const Corpus& corpus, std::ostream& out) {
  const auto& cols = detail::corpus_columns();
  for (std::size_t i = 0; i < cols.size(); ++i) out << (i ? "," : "") << cols[i];
  out << '\n';
  auto emit = [&](std::map<std::string, std::string> row) {
    for (std::size_t i = 0; i < cols.size(); ++i)
      out << (i ? "," : "") << detail::csv_escape(row[cols[i]]);
    out << '\n';
  };
  for (const auto& [rid, reading] : corpus.readings()) {
    if (!reading.title().empty()) emit({{"record", "reading"}, {"id", rid}, {"title", reading.title()}});
    for (const auto& [qid, q] : reading.quotes())
      emit({{"record", "quote"}, {"id", qid}, {"reading_id", rid}, {"text", q.text}});
    for (const auto& a : reading.artifacts()) {
      std::map<std::string, std::string> row{{"record", "artifact"},
                                             {"id", a.id},
                                             {"reading_id", a.reading_id},
                                             {"author_id", a.author_id},
                                             {"kind", std::string(to_string(a.kind))},
                                             {"body", a.body}};
      if (a.quote_id) row["quote_id"] = *a.quote_id;
      if (a.parent_id) row["parent_id"] = *a.parent_id;
      if (a.timestamp) row["ts"] = *a.timestamp;
      emit(std::move(row));
    }
  }
}

// ---------------------------------------------------------------------------
// Descriptive statistics

inline std::size_t whitespace_word_count(std::string_view text) {
  std::size_t count = 0;
  std::size_t pos = 0;
  bool in_word = false;
  while (pos < text.size()) {
    const bool space = detail::is_space(detail::next_code_point(text, pos));
    if (!space && !in_word) ++count;
    in_word = !space;
  }
  return count;
}

struct ReadingStats {
  Id reading_id;
  std::size_t posts = 0;    // annotations
  std::size_t replies = 0;
  std::optional<double> average_words;  // over annotation bodies; null with no posts
};

struct MeanSd {
  double mean = 0.0;
  double sd = 0.0;  // population
};

struct StatsTable {
  std::vector<ReadingStats> rows;
  MeanSd posts;
  MeanSd replies;
  std::optional<MeanSd> average_words;  // over readings whose average is defined
};

inline MeanSd mean_sd(const std::vector<double>& values) {
  MeanSd out;
  if (values.empty()) return out;
  double sum = 0.0;
  for (double v : values) sum += v;
  out.mean = sum / static_cast<double>(values.size());
  double ss = 0.0;
  for (double v : values) ss += (v - out.mean) * (v - out.mean);
  out.sd = std::sqrt(ss / static_cast<double>(values.size()));
  return out;
}

inline ReadingStats reading_stats(const Reading& reading) {
  ReadingStats row;
  row.reading_id = reading.id();
  std::size_t words = 0;
  for (const auto& a : reading.artifacts()) {
    if (a.is_annotation()) {
      ++row.posts;
      words += whitespace_word_count(a.body);
    } else {
      ++row.replies;
    }
  }
  if (row.posts > 0) row.average_words = static_cast<double>(words) / static_cast<double>(row.posts);
  return row;
}

inline StatsTable descriptive_stats(const Corpus& corpus,
                                    const std::optional<Id>& reading_id = std::nullopt) {
  StatsTable table;
  if (reading_id) {
    table.rows.push_back(reading_stats(corpus.reading(*reading_id)));
  } else {
    for (const auto& [id, reading] : corpus.readings()) table.rows.push_back(reading_stats(reading));
  }
  std::vector<double> posts, replies, words;
  for (const auto& row : table.rows) {
    posts.push_back(static_cast<double>(row.posts));
    replies.push_back(static_cast<double>(row.replies));
    if (row.average_words) words.push_back(*row.average_words);
  }
  table.posts = mean_sd(posts);
  table.replies = mean_sd(replies);
  if (!words.empty()) table.average_words = mean_sd(words);
  return table;
}

}  // namespace aicnet
