#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <filesystem>
#include <fstream>
#include <map>
#include <memory>
#include <set>
#include <string>
#include <string_view>
#include <tuple>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "aicnet/corpus.hpp"
#include "aicnet/detail/utf8.hpp"
#include "aicnet/error.hpp"
#include "aicnet/lexicon.hpp"

namespace aicnet {

// ---------------------------------------------------------------------------
// Tokenization

// Splits on anything that is not a letter or digit. Apostrophes and hyphens
// survive only between two word characters ("co-construction", "don't");
// curly apostrophes and Unicode hyphens are folded to their ASCII forms.
// Output is lowercased and in input order.
inline std::vector<std::string> tokenize(std::string_view text) {
  std::vector<std::string> tokens;
  std::vector<char32_t> cps;
  cps.reserve(text.size());
  for (std::size_t pos = 0; pos < text.size();) cps.push_back(detail::next_code_point(text, pos));

  std::string current;
  for (std::size_t i = 0; i < cps.size(); ++i) {
    const char32_t cp = cps[i];
    if (detail::is_word_char(cp)) {
      detail::append_utf8(current, detail::to_lower(cp));
      continue;
    }
    const bool joiner = detail::is_apostrophe(cp) || detail::is_hyphen(cp);
    if (joiner && !current.empty() && i + 1 < cps.size() && detail::is_word_char(cps[i + 1])) {
      current.push_back(detail::is_apostrophe(cp) ? '\'' : '-');
      continue;
    }
    if (!current.empty()) tokens.push_back(std::move(current));
    current.clear();
  }
  if (!current.empty()) tokens.push_back(std::move(current));
  return tokens;
}

// ---------------------------------------------------------------------------
// Lemmatization

class Lemmatizer {
 public:
  Lemmatizer() {
    for (auto [surface, lemma] : lexicon::kIrregular) irregular_.emplace(surface, lemma);
    for (auto w : lexicon::kNouns) base_forms_.emplace(w);
    for (auto w : lexicon::kOtherBaseForms) base_forms_.emplace(w);
  }

  // Extra base forms make the -ing/-ed rules and the fixed-point check aware
  // of corpus-specific vocabulary.
  void add_base_form(std::string word) { base_forms_.insert(std::move(word)); }

  bool is_base_form(std::string_view word) const {
    return base_forms_.count(std::string(word)) > 0;
  }

  std::string operator()(std::string_view surface) const {
    std::string w(surface);
    if (w.empty()) return w;
    if (auto it = irregular_.find(w); it != irregular_.end()) return it->second;
    if (is_base_form(w)) return w;
    // Possessive and contraction endings.
    if (ends_with(w, "'s") && w.size() > 2) return (*this)(w.substr(0, w.size() - 2));
    if (w.back() == '\'' ) return (*this)(w.substr(0, w.size() - 1));

    if (w.size() > 4 && ends_with(w, "ies")) return w.substr(0, w.size() - 3) + "y";
    if (w.size() > 3 && ends_with(w, "es")) {
      const std::string drop_s = w.substr(0, w.size() - 1);
      if (is_base_form(drop_s)) return drop_s;
      const std::string drop_es = w.substr(0, w.size() - 2);
      if (ends_with(drop_es, "ss") || ends_with(drop_es, "ch") || ends_with(drop_es, "sh") ||
          ends_with(drop_es, "x") || ends_with(drop_es, "z"))
        return drop_es;
      return drop_s;
    }
    if (w.size() > 3 && w.back() == 's' && !ends_with(w, "ss") && !ends_with(w, "us") &&
        !ends_with(w, "is"))
      return w.substr(0, w.size() - 1);

    if (w.size() > 5 && ends_with(w, "ing")) {
      if (auto stem = known_stem(w.substr(0, w.size() - 3))) return *stem;
      return w;
    }
    if (w.size() > 4 && ends_with(w, "ied")) {
      const std::string stem = w.substr(0, w.size() - 3) + "y";
      if (is_base_form(stem)) return stem;
      return w;
    }
    if (w.size() > 4 && ends_with(w, "ed")) {
      if (auto stem = known_stem(w.substr(0, w.size() - 2))) return *stem;
      return w;
    }
    return w;
  }

 private:
  static bool ends_with(std::string_view w, std::string_view suffix) {
    return w.size() >= suffix.size() && w.substr(w.size() - suffix.size()) == suffix;
  }

  // stem, stem+"e", or stem with a doubled final consonant collapsed.
  std::optional<std::string> known_stem(const std::string& stem) const {
    if (is_base_form(stem)) return stem;
    if (is_base_form(stem + "e")) return stem + "e";
    if (stem.size() >= 2 && stem[stem.size() - 1] == stem[stem.size() - 2]) {
      std::string undoubled = stem.substr(0, stem.size() - 1);
      if (is_base_form(undoubled)) return undoubled;
    }
    return std::nullopt;
  }

  std::unordered_map<std::string, std::string> irregular_;
  std::unordered_set<std::string> base_forms_;
};

inline const Lemmatizer& default_lemmatizer() {
  static const Lemmatizer instance;
  return instance;
}

inline std::string lemmatize(std::string_view surface) { return default_lemmatizer()(surface); }

// ---------------------------------------------------------------------------
// Part-of-speech tagging

enum class PartOfSpeech { noun, other };

struct Token {
  std::string surface;
  std::string lemma;
  PartOfSpeech pos = PartOfSpeech::other;

  friend bool operator==(const Token&, const Token&) = default;
};

class Tagger {
 public:
  virtual ~Tagger() = default;
  virtual PartOfSpeech tag(std::string_view lemma) const = 0;
};

// Noun lexicon plus derivational-suffix heuristics. Stopwords and pure
// numbers are never nouns.
class LexiconTagger : public Tagger {
 public:
  LexiconTagger() {
    for (auto w : lexicon::kNouns) nouns_.emplace(w);
    for (auto w : lexicon::kStopwords) stopwords_.emplace(w);
    for (auto s : lexicon::kNounSuffixes) suffixes_.emplace_back(s);
  }

  LexiconTagger(std::set<std::string> nouns, std::set<std::string> stopwords)
      : LexiconTagger() {
    nouns_ = std::unordered_set<std::string>(nouns.begin(), nouns.end());
    stopwords_ = std::unordered_set<std::string>(stopwords.begin(), stopwords.end());
  }

  PartOfSpeech tag(std::string_view lemma) const override {
    const std::string w(lemma);
    if (w.empty() || stopwords_.count(w)) return PartOfSpeech::other;
    if (std::all_of(w.begin(), w.end(), [](char c) { return (c >= '0' && c <= '9') || c == '-'; }))
      return PartOfSpeech::other;
    if (nouns_.count(w)) return PartOfSpeech::noun;
    for (const auto& suffix : suffixes_) {
      if (w.size() >= suffix.size() + 3 && w.compare(w.size() - suffix.size(), suffix.size(), suffix) == 0)
        return PartOfSpeech::noun;
    }
    return PartOfSpeech::other;
  }

  const std::unordered_set<std::string>& nouns() const { return nouns_; }

 private:
  std::unordered_set<std::string> nouns_;
  std::unordered_set<std::string> stopwords_;
  std::vector<std::string> suffixes_;
};

inline const LexiconTagger& default_tagger() {
  static const LexiconTagger instance;
  return instance;
}

inline std::vector<Token> filter_nouns(std::vector<Token> tokens) {
  std::erase_if(tokens, [](const Token& t) { return t.pos != PartOfSpeech::noun; });
  return tokens;
}

inline std::set<std::string> default_stopwords() {
  return {std::begin(lexicon::kStopwords), std::end(lexicon::kStopwords)};
}

inline std::set<std::string> default_noun_lexicon() {
  return {std::begin(lexicon::kNouns), std::end(lexicon::kNouns)};
}

// One term per line; blank lines and lines starting with '#' are skipped.
inline std::set<std::string> load_term_list(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::Io, path.string(), "cannot open term list");
  std::set<std::string> terms;
  std::string line;
  while (std::getline(in, line)) {
    const auto term = detail::trim(line);
    if (term.empty() || term.front() == '#') continue;
    terms.insert(detail::lowercase(term));
  }
  return terms;
}

// ---------------------------------------------------------------------------
// Pipeline

// tokenize -> lemmatize -> drop stopwords -> tag. Holds non-owning
// references to the lemmatizer and tagger.
class TextPipeline {
 public:
  TextPipeline() : TextPipeline(default_lemmatizer(), default_tagger(), default_stopwords()) {}
  TextPipeline(const Lemmatizer& lemmatizer, const Tagger& tagger, std::set<std::string> stopwords)
      : lemmatizer_(&lemmatizer), tagger_(&tagger), stopwords_(std::move(stopwords)) {}

  std::vector<Token> analyze(std::string_view text) const {
    std::vector<Token> out;
    for (auto& surface : tokenize(text)) {
      if (stopwords_.count(surface)) continue;
      std::string lemma = (*lemmatizer_)(surface);
      if (lemma.empty() || stopwords_.count(lemma)) continue;
      const auto pos = tagger_->tag(lemma);
      out.push_back(Token{std::move(surface), std::move(lemma), pos});
    }
    return out;
  }

  std::vector<std::string> noun_lemmas(std::string_view text) const {
    std::vector<std::string> out;
    for (auto& t : filter_nouns(analyze(text))) out.push_back(std::move(t.lemma));
    return out;
  }

  const std::set<std::string>& stopwords() const { return stopwords_; }

 private:
  const Lemmatizer* lemmatizer_;
  const Tagger* tagger_;
  std::set<std::string> stopwords_;
};

// ---------------------------------------------------------------------------
// tf-idf

// tf * ln(N / df), no smoothing. tf = 0 scores 0.
inline double tfidf_score(std::size_t tf, std::size_t df, std::size_t n_documents) {
  if (tf == 0) return 0.0;
  if (df == 0 || n_documents == 0 || df > n_documents)
    throw Error(ErrorCode::UndefinedIdf, "",
                "df=" + std::to_string(df) + " N=" + std::to_string(n_documents) +
                    " with tf=" + std::to_string(tf));
  return static_cast<double>(tf) *
         std::log(static_cast<double>(n_documents) / static_cast<double>(df));
}

// Noun-lemma counts for every artifact of a reading. Documents are single
// artifacts; only those with at least one noun lemma count toward N and df.
class DocumentTable {
 public:
  struct Document {
    Id artifact_id;
    Id author_id;
    std::map<std::string, std::size_t> counts;
  };

  DocumentTable(const Reading& reading, const TextPipeline& pipeline) {
    for (const auto& a : reading.artifacts()) {
      Document doc{a.id, a.author_id, {}};
      for (auto& lemma : pipeline.noun_lemmas(a.body)) ++doc.counts[lemma];
      if (!doc.counts.empty()) ++n_documents_;
      for (const auto& [lemma, n] : doc.counts) {
        ++df_[lemma];
        totals_[lemma] += n;
      }
      index_.emplace(a.id, documents_.size());
      documents_.push_back(std::move(doc));
    }
  }

  const std::vector<Document>& documents() const { return documents_; }
  std::size_t document_count() const { return n_documents_; }

  std::size_t document_frequency(const std::string& lemma) const {
    const auto it = df_.find(lemma);
    return it == df_.end() ? 0 : it->second;
  }

  std::size_t total_count(const std::string& lemma) const {
    const auto it = totals_.find(lemma);
    return it == totals_.end() ? 0 : it->second;
  }

  const std::map<std::string, std::size_t>& totals() const { return totals_; }

  std::size_t term_frequency(const std::string& lemma, const Id& artifact_id) const {
    const auto it = index_.find(artifact_id);
    if (it == index_.end()) return 0;
    const auto& counts = documents_[it->second].counts;
    const auto c = counts.find(lemma);
    return c == counts.end() ? 0 : c->second;
  }

  double tfidf(const std::string& lemma, const Id& artifact_id) const {
    return tfidf_score(term_frequency(lemma, artifact_id), document_frequency(lemma), n_documents_);
  }

 private:
  std::vector<Document> documents_;
  std::unordered_map<Id, std::size_t> index_;
  std::map<std::string, std::size_t> df_;
  std::map<std::string, std::size_t> totals_;
  std::size_t n_documents_ = 0;
};

inline double tfidf(const std::string& lemma, const Artifact& artifact, const Reading& reading,
                    const TextPipeline& pipeline = TextPipeline()) {
  return DocumentTable(reading, pipeline).tfidf(lemma, artifact.id);
}

// ---------------------------------------------------------------------------
// Creation-network word selection

enum class ScoreAggregator { max, mean };

struct WordSelectionParams {
  std::size_t min_frequency = 5;
  std::size_t drop_lowest = 5;
  std::size_t top_k = 70;
  ScoreAggregator aggregator = ScoreAggregator::max;

  void validate() const {
    if (min_frequency < 1)
      throw Error(ErrorCode::InvalidArgument, "min_frequency", "must be >= 1");
    if (top_k < 1) throw Error(ErrorCode::InvalidArgument, "top_k", "must be >= 1");
  }
};

struct SelectedWord {
  std::string lemma;
  Id author_id;
  double score = 0.0;

  friend bool operator==(const SelectedWord&, const SelectedWord&) = default;
};

struct ScoredPair {
  std::string lemma;
  Id artifact_id;
  Id author_id;
  double score = 0.0;
};

// Intermediate stages, exposed for inspection and testing.
struct WordSelectionTrace {
  std::vector<std::string> candidates;        // after the frequency floor, sorted
  std::map<std::string, double> lemma_scores;  // aggregate score per candidate
  std::vector<std::string> dropped;           // lowest-scoring lemmas removed
  std::vector<ScoredPair> ranked;             // surviving pairs, best first
  std::vector<ScoredPair> kept;               // first top_k of `ranked`
  std::vector<SelectedWord> selection;        // deduplicated per (lemma, author)
};

inline WordSelectionTrace select_cn_words_traced(const Reading& reading,
                                                 const WordSelectionParams& params,
                                                 const TextPipeline& pipeline = TextPipeline()) {
  params.validate();
  WordSelectionTrace trace;
  const DocumentTable table(reading, pipeline);

  // Frequency floor over reading-wide noun counts.
  for (const auto& [lemma, total] : table.totals())
    if (total >= params.min_frequency) trace.candidates.push_back(lemma);
  const std::set<std::string> candidate_set(trace.candidates.begin(), trace.candidates.end());

  // Score every (lemma, artifact) occurrence.
  std::vector<ScoredPair> pairs;
  for (const auto& doc : table.documents()) {
    for (const auto& [lemma, tf] : doc.counts) {
      if (!candidate_set.count(lemma)) continue;
      pairs.push_back({lemma, doc.artifact_id, doc.author_id, table.tfidf(lemma, doc.artifact_id)});
    }
  }

  // Aggregate per lemma and drop the lowest.
  std::map<std::string, std::pair<double, std::size_t>> acc;
  for (const auto& p : pairs) {
    auto& [value, n] = acc[p.lemma];
    if (params.aggregator == ScoreAggregator::max)
      value = n == 0 ? p.score : std::max(value, p.score);
    else
      value += p.score;
    ++n;
  }
  for (const auto& [lemma, vn] : acc)
    trace.lemma_scores[lemma] =
        params.aggregator == ScoreAggregator::max ? vn.first : vn.first / static_cast<double>(vn.second);

  std::vector<std::pair<double, std::string>> by_score;
  for (const auto& [lemma, score] : trace.lemma_scores) by_score.emplace_back(score, lemma);
  std::sort(by_score.begin(), by_score.end());
  std::set<std::string> dropped;
  for (std::size_t i = 0; i < by_score.size() && i < params.drop_lowest; ++i) {
    dropped.insert(by_score[i].second);
    trace.dropped.push_back(by_score[i].second);
  }

  // Rank surviving pairs: score desc, lemma asc, artifact id asc.
  for (auto& p : pairs)
    if (!dropped.count(p.lemma)) trace.ranked.push_back(p);
  std::sort(trace.ranked.begin(), trace.ranked.end(), [](const ScoredPair& a, const ScoredPair& b) {
    if (a.score != b.score) return a.score > b.score;
    return std::tie(a.lemma, a.artifact_id) < std::tie(b.lemma, b.artifact_id);
  });
  trace.kept.assign(trace.ranked.begin(),
                    trace.ranked.begin() +
                        static_cast<std::ptrdiff_t>(std::min(params.top_k, trace.ranked.size())));

  // Same word from the same author collapses to its best-scoring occurrence.
  // `kept` is already best-first, so first occurrence wins.
  std::set<std::pair<std::string, Id>> seen;
  for (const auto& p : trace.kept) {
    if (seen.emplace(p.lemma, p.author_id).second)
      trace.selection.push_back({p.lemma, p.author_id, p.score});
  }
  return trace;
}

inline std::vector<SelectedWord> select_cn_words(const Reading& reading,
                                                 const WordSelectionParams& params,
                                                 const TextPipeline& pipeline = TextPipeline()) {
  return select_cn_words_traced(reading, params, pipeline).selection;
}

}  // namespace aicnet
