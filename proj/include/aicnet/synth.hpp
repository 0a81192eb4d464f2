#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <istream>
#include <map>
#include <ostream>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "aicnet/corpus.hpp"
#include "aicnet/graph.hpp"
#include "aicnet/networks.hpp"
#include "aicnet/semantic.hpp"
#include "aicnet/textpipe.hpp"

// Synthetic discourse with planted structure:
//  - attention: authors in one block annotate copies of the same quote texts
//    (identical normalized text, so similarity is exactly 1.0); distinct texts
//    are regenerated until their hash embeddings fall below the threshold;
//  - interaction: each reply edge (replier, target) becomes one reply to an
//    artifact written by the target;
//  - vocabulary: each overlapping pair shares fresh nouns that clear the
//    frequency floor and carry the only positive tf-idf scores, while decoy
//    nouns appear in every document (tf-idf 0) to absorb the lowest-score drop.

namespace aicnet {

namespace synth_words {

inline constexpr std::string_view kQuoteWords[] = {
    "stage", "light", "ancient", "court", "rhythm", "silent", "body", "river",
    "machine", "circle", "village", "memory", "festival", "modern", "crowd", "mirror",
    "spiral", "garden", "winter", "market", "thread", "signal", "harbor", "lantern",
    "echo", "copper", "meadow", "engine", "velvet", "canyon", "orbit", "paper",
    "marble", "tide", "forest", "window", "ribbon", "anchor", "violet", "desert",
};

// Disjoint from the decoys. Planted nouns are rejected if they collide with
// either list.
inline constexpr std::string_view kFillerNouns[] = {
    "ability", "access", "account", "action", "activity", "actor", "agency", "agreement",
    "answer", "approach", "area", "argument", "article", "artist", "aspect", "assignment",
    "audience", "author", "background", "ballet", "beauty", "behavior", "belief", "book",
    "boundary", "brain", "career", "category", "center", "century", "chapter", "character",
    "choice", "choreographer", "church", "city", "classroom", "colleague", "comment", "community",
    "company", "comparison", "concept", "conclusion", "condition", "conflict", "connection", "content",
    "context", "costume", "country", "creativity", "critic", "decade", "decision", "definition",
    "design", "detail", "development", "dialogue", "difference", "direction", "discipline", "discussion",
    "distinction", "diversity", "document", "drama", "economy", "education", "effect", "element",
    "emotion", "emphasis", "energy", "environment", "essay", "event", "evidence", "example",
    "experience", "explanation", "expression", "family", "feature", "feeling", "figure", "film",
    "foundation", "framework", "freedom", "friend", "future", "gender", "generation", "genre",
    "gesture", "goal", "government", "grace", "growth", "identity", "image", "impact",
    "importance", "information", "insight", "institution", "instructor", "interpretation", "journey", "judgment",
    "knowledge", "language", "leader", "lesson", "literature", "material", "meaning", "message",
    "method", "model", "moment", "motion", "movement", "musician", "nation", "network",
    "notion", "observation", "opinion", "opportunity", "organization", "origin", "outcome", "participant",
    "partner", "passage", "pattern", "performance", "performer", "period", "perspective", "phrase",
    "policy", "posture", "presence", "pressure", "principle", "problem", "production",
    "professor", "program", "project", "purpose", "quality", "reality", "reference", "reflection",
    "relationship", "religion", "representation", "research", "resource", "response", "ritual", "scene",
    "science", "sentence", "significance", "situation", "skill", "society", "song", "speaker",
    "strategy", "strength", "structure", "style", "success", "summary", "symbol", "technique",
    "technology", "tempo", "tension", "theater", "theme", "theory", "tradition", "truth",
    "understanding", "version", "video", "viewer", "voice", "writer", "writing", "youth",
};

inline constexpr std::string_view kDecoyNouns[] = {
    "dance", "history", "course", "idea", "text", "class", "reading", "learning", "culture", "music",
};

// Non-noun glue: stopwords and verbs the default tagger never tags as nouns.
inline constexpr std::string_view kGlue[] = {
    "i", "think", "this", "is", "very", "and", "the", "we", "see", "how", "really", "so",
};

inline constexpr std::string_view kSyllables[] = {
    "ka", "lo", "mi", "ru", "te", "vo", "zi", "pa", "ne", "su", "da", "fe", "go", "bi",
};

inline constexpr std::string_view kPlantedSuffixes[] = {"tion", "ment", "ity", "ness"};

}  // namespace synth_words

struct SynthParams {
  std::size_t n_authors = 6;
  std::size_t n_quotes = 4;
  // Partition of author indices; every author in exactly one block.
  std::vector<std::vector<std::size_t>> attention_blocks;
  // (replier, target) author indices; repeats allowed.
  std::vector<std::pair<std::size_t, std::size_t>> reply_edges;
  // Unordered author-index pair -> number of shared nouns.
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> vocab_overlap;
  std::uint64_t seed = 1;

  Id reading_id = "r1";
  double threshold = kDefaultThreshold;
  std::size_t embed_dim = kDefaultHashDim;
  WordSelectionParams words;  // pipeline configuration the planted words must survive

  static Id author_id(std::size_t index) { return "s" + std::to_string(101 + index); }

  void validate() const {
    auto infeasible = [](const std::string& why) {
      throw Error(ErrorCode::InfeasibleParams, "", why);
    };
    if (n_authors < 2) infeasible("n_authors must be at least 2");
    if (n_quotes < 1) infeasible("n_quotes must be at least 1");
    words.validate();
    check_threshold(threshold);
    if (threshold <= 0.0) infeasible("planted separation needs a positive threshold");
    std::vector<int> seen(n_authors, 0);
    for (const auto& block : attention_blocks) {
      if (block.empty()) infeasible("empty attention block");
      for (auto a : block) {
        if (a >= n_authors) infeasible("attention block references unknown author");
        ++seen[a];
      }
    }
    if (std::any_of(seen.begin(), seen.end(), [](int n) { return n != 1; }))
      infeasible("attention blocks must partition the authors");
    if (n_quotes < attention_blocks.size()) infeasible("need at least one quote per block");
    for (auto [r, t] : reply_edges)
      if (r >= n_authors || t >= n_authors) infeasible("reply edge references unknown author");
    std::size_t planted_pairs = 0;
    for (const auto& [pair, count] : vocab_overlap) {
      if (pair.first >= n_authors || pair.second >= n_authors || pair.first == pair.second)
        infeasible("vocabulary overlap needs two distinct known authors");
      planted_pairs += 2 * count;
    }
    if (planted_pairs > words.top_k)
      infeasible("planted (word, artifact) pairs exceed top_k = " + std::to_string(words.top_k));
    if (words.drop_lowest > std::size(synth_words::kDecoyNouns))
      infeasible("drop_lowest exceeds the decoy word list");
  }
};

struct GroundTruth {
  Id reading_id;
  WeightedGraph expected_an;
  WeightedGraph expected_in;
  std::set<std::pair<Id, Id>> expected_cn_edges;  // ordered (smaller id first)

  friend bool operator==(const GroundTruth&, const GroundTruth&) = default;
};

struct SynthOutput {
  Corpus corpus;
  EmbeddingStore store;
  GroundTruth truth;
};

namespace detail {

// Deterministic across platforms (std distributions are not).
class SplitRng {
 public:
  explicit SplitRng(std::uint64_t seed) : engine_(seed) {}
  std::size_t below(std::size_t n) { return n == 0 ? 0 : static_cast<std::size_t>(engine_() % n); }
  bool coin() { return (engine_() >> 63) != 0; }
  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[below(i)]);
  }

 private:
  std::mt19937_64 engine_;
};

inline std::string repeat_word(std::string_view w, std::size_t times) {
  std::string out;
  for (std::size_t i = 0; i < times; ++i) {
    out += w;
    out += ' ';
  }
  return out;
}

}  // namespace detail

inline SynthOutput generate(const SynthParams& params) {
  params.validate();
  detail::SplitRng rng(params.seed);
  const std::size_t n = params.n_authors;
  const std::size_t n_blocks = params.attention_blocks.size();

  std::vector<std::size_t> block_of(n);
  for (std::size_t b = 0; b < n_blocks; ++b)
    for (auto a : params.attention_blocks[b]) block_of[a] = b;

  // Quote texts, one list per block, pairwise below the threshold.
  std::vector<std::vector<std::string>> block_texts(n_blocks);
  std::vector<std::pair<std::string, Vector>> accepted;
  for (std::size_t k = 0; k < params.n_quotes; ++k) {
    bool placed = false;
    for (int attempt = 0; attempt < 200 && !placed; ++attempt) {
      std::string text;
      const std::size_t len = 8 + rng.below(7);
      for (std::size_t i = 0; i < len; ++i) {
        if (i) text += ' ';
        text += synth_words::kQuoteWords[rng.below(std::size(synth_words::kQuoteWords))];
      }
      text += '.';
      const std::string norm = normalize_text(text);
      Vector v = hash_embed(text, params.embed_dim);
      bool ok = true;
      for (const auto& [other, ov] : accepted) {
        if (normalize_text(other) == norm || meets_threshold(cosine(v, ov), params.threshold)) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      accepted.emplace_back(text, std::move(v));
      block_texts[k % n_blocks].push_back(text);
      placed = true;
    }
    if (!placed) throw Error(ErrorCode::InfeasibleParams, "", "could not separate quote texts");
  }

  Reading reading(params.reading_id, "Synthetic reading " + params.reading_id);
  EmbeddingStore store(params.embed_dim);

  // Quote records: every block member gets its own copy of each block text,
  // with case and spacing varied so only normalization makes them equal.
  std::map<std::pair<std::size_t, std::size_t>, Id> quote_of;  // (author, text index) -> quote id
  std::map<Id, std::string> text_of_quote;
  for (std::size_t b = 0; b < n_blocks; ++b) {
    for (std::size_t t = 0; t < block_texts[b].size(); ++t) {
      for (std::size_t m = 0; m < params.attention_blocks[b].size(); ++m) {
        const std::size_t a = params.attention_blocks[b][m];
        std::string text = block_texts[b][t];
        if (m % 3 == 1) {
          text[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(text[0])));
        } else if (m % 3 == 2) {
          const auto sp = text.find(' ');
          if (sp != std::string::npos) text.replace(sp, 1, "  ");
          text = " " + text;
        }
        const Id qid = params.reading_id + "-q" + std::to_string(b) + "-" + std::to_string(t) + "-" +
                       SynthParams::author_id(a);
        reading.add_quote(Quote::make(qid, params.reading_id, text));
        store.insert(qid, hash_embed(text, params.embed_dim));
        quote_of[{a, t}] = qid;
        text_of_quote[qid] = normalize_text(text);
      }
    }
  }

  // Annotation skeleton: (id, author, quote), bodies filled in later.
  struct Draft {
    Artifact artifact;
    std::string planted;
  };
  std::vector<Draft> drafts;
  std::map<std::size_t, std::size_t> first_annotation;  // author -> draft index
  std::map<std::size_t, std::vector<std::size_t>> written_by;
  for (std::size_t a = 0; a < n; ++a) {
    const std::size_t b = block_of[a];
    for (std::size_t t = 0; t < block_texts[b].size(); ++t) {
      Artifact art;
      art.id = params.reading_id + "-a" + std::to_string(a) + "-" + std::to_string(t);
      art.author_id = SynthParams::author_id(a);
      art.reading_id = params.reading_id;
      art.kind = ArtifactKind::annotation;
      art.quote_id = quote_of.at({a, t});
      if (!first_annotation.count(a)) first_annotation[a] = drafts.size();
      written_by[a].push_back(drafts.size());
      drafts.push_back({std::move(art), {}});
    }
  }

  // Replies. Each targets an artifact of the target author chosen at random
  // among those written so far; the root quote is tracked for ground truth.
  std::map<Id, Id> root_quote;  // artifact id -> quote id of thread root
  for (const auto& d : drafts) root_quote[d.artifact.id] = *d.artifact.quote_id;
  std::vector<std::set<std::string>> attention(n);
  for (std::size_t a = 0; a < n; ++a)
    for (const auto& t : block_texts[block_of[a]]) attention[a].insert(normalize_text(t));
  WeightedGraph expected_in;
  for (std::size_t e = 0; e < params.reply_edges.size(); ++e) {
    const auto [r, t] = params.reply_edges[e];
    const auto& options = written_by[t];
    const Draft& parent = drafts[options[rng.below(options.size())]];
    Artifact art;
    art.id = params.reading_id + "-p" + std::to_string(e);
    art.author_id = SynthParams::author_id(r);
    art.reading_id = params.reading_id;
    art.kind = ArtifactKind::reply;
    art.parent_id = parent.artifact.id;
    root_quote[art.id] = root_quote.at(parent.artifact.id);
    attention[r].insert(text_of_quote.at(root_quote[art.id]));
    if (r != t) expected_in.add_weight(SynthParams::author_id(r), SynthParams::author_id(t), 1.0);
    written_by[r].push_back(drafts.size());
    drafts.push_back({std::move(art), {}});
  }

  // Tf-idf needs at least three documents for a df = 2 word to score above
  // the df = N decoys. Extra annotations reuse the author's first quote.
  for (std::size_t extra = 0; drafts.size() < 3; ++extra) {
    Artifact art = drafts[first_annotation.at(extra % n)].artifact;
    art.id = params.reading_id + "-x" + std::to_string(extra);
    drafts.push_back({std::move(art), {}});
  }

  // Planted vocabulary.
  const std::size_t per_doc = (params.words.min_frequency + 1) / 2;
  std::set<std::string> used_planted(std::begin(synth_words::kFillerNouns),
                                     std::end(synth_words::kFillerNouns));
  used_planted.insert(std::begin(synth_words::kDecoyNouns), std::end(synth_words::kDecoyNouns));
  std::set<std::pair<Id, Id>> expected_cn;
  for (const auto& [pair, count] : params.vocab_overlap) {
    if (count == 0) continue;
    for (std::size_t c = 0; c < count; ++c) {
      std::string word;
      do {
        word.clear();
        for (int s = 0; s < 3; ++s)
          word += synth_words::kSyllables[rng.below(std::size(synth_words::kSyllables))];
        word += synth_words::kPlantedSuffixes[rng.below(std::size(synth_words::kPlantedSuffixes))];
      } while (!used_planted.insert(word).second);
      drafts[first_annotation.at(pair.first)].planted += detail::repeat_word(word, per_doc);
      drafts[first_annotation.at(pair.second)].planted += detail::repeat_word(word, per_doc);
    }
    expected_cn.insert(WeightedGraph::key(SynthParams::author_id(pair.first),
                                          SynthParams::author_id(pair.second)));
  }

  // Bodies: glue + filler (author-disjoint slices, each filler below the
  // frequency floor) + planted + decoys (every document).
  const std::size_t n_filler = std::size(synth_words::kFillerNouns);
  const std::size_t slice = std::max<std::size_t>(1, n_filler / n);
  const std::size_t filler_cap = params.words.min_frequency - 1;
  std::map<std::size_t, std::size_t> filler_used;  // filler index -> uses
  std::map<std::size_t, std::size_t> cursor;       // author -> next offset in slice
  const std::size_t n_decoys = params.words.drop_lowest;
  // Every document carries each decoy once; the first carries extra copies
  // so the decoys clear the frequency floor.
  const std::size_t decoy_reps =
      params.words.min_frequency > drafts.size() ? params.words.min_frequency - drafts.size() + 1 : 1;
  for (std::size_t i = 0; i < drafts.size(); ++i) {
    auto& d = drafts[i];
    const std::size_t a = static_cast<std::size_t>(std::stoul(d.artifact.author_id.substr(1))) - 101;
    std::string body;
    const std::size_t glue_words = 4 + rng.below(5);
    for (std::size_t g = 0; g < glue_words; ++g) {
      body += synth_words::kGlue[rng.below(std::size(synth_words::kGlue))];
      body += ' ';
    }
    if (a * slice < n_filler && filler_cap > 0) {
      const std::size_t begin = a * slice;
      const std::size_t end = std::min(n_filler, begin + slice);
      for (int f = 0; f < 2; ++f) {
        const std::size_t idx = begin + (cursor[a]++ % (end - begin));
        if (filler_used[idx] < filler_cap) {
          ++filler_used[idx];
          body += synth_words::kFillerNouns[idx];
          body += ' ';
        }
      }
    }
    body += d.planted;
    for (std::size_t k = 0; k < n_decoys; ++k)
      body += detail::repeat_word(synth_words::kDecoyNouns[k], i == 0 ? decoy_reps : 1);
    while (!body.empty() && body.back() == ' ') body.pop_back();
    d.artifact.body = body + ".";
  }

  for (auto& d : drafts) reading.add_artifact(std::move(d.artifact));

  GroundTruth truth;
  truth.reading_id = params.reading_id;
  for (std::size_t a = 0; a < n; ++a) {
    truth.expected_an.add_node(SynthParams::author_id(a));
    truth.expected_in.add_node(SynthParams::author_id(a));
  }
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) {
      std::size_t shared = 0;
      for (const auto& t : attention[u]) shared += attention[v].count(t);
      if (shared > 0)
        truth.expected_an.add_weight(SynthParams::author_id(u), SynthParams::author_id(v),
                                     static_cast<double>(shared));
    }
  }
  for (const auto& [k, w] : expected_in.edges()) truth.expected_in.add_weight(k.first, k.second, w);
  truth.expected_cn_edges = std::move(expected_cn);

  std::map<Id, Reading> readings;
  readings.emplace(params.reading_id, std::move(reading));
  return {Corpus(std::move(readings)), std::move(store), std::move(truth)};
}

// Random but valid parameters for property tests and the CLI.
inline SynthParams random_params(std::uint64_t seed, std::size_t n_authors, std::size_t n_quotes,
                                 std::size_t n_blocks, std::size_t n_replies, std::size_t n_overlaps) {
  if (n_authors < 2) throw Error(ErrorCode::InfeasibleParams, "", "n_authors must be at least 2");
  if (n_blocks < 1 || n_blocks > n_authors)
    throw Error(ErrorCode::InfeasibleParams, "", "n_blocks must lie in [1, n_authors]");
  detail::SplitRng rng(seed ^ 0x9e3779b97f4a7c15ULL);
  SynthParams p;
  p.n_authors = n_authors;
  p.n_quotes = std::max(n_quotes, n_blocks);
  p.seed = seed;
  std::vector<std::size_t> order(n_authors);
  for (std::size_t i = 0; i < n_authors; ++i) order[i] = i;
  rng.shuffle(order);
  p.attention_blocks.assign(n_blocks, {});
  for (std::size_t i = 0; i < n_authors; ++i)
    p.attention_blocks[i < n_blocks ? i : rng.below(n_blocks)].push_back(order[i]);
  for (auto& b : p.attention_blocks) std::sort(b.begin(), b.end());
  for (std::size_t e = 0; e < n_replies; ++e) {
    const std::size_t r = rng.below(n_authors);
    std::size_t t = rng.below(n_authors - 1);
    if (t >= r) ++t;
    p.reply_edges.emplace_back(r, t);
  }
  const std::size_t max_pairs = n_authors * (n_authors - 1) / 2;
  std::size_t budget = p.words.top_k / 2;
  for (std::size_t o = 0; o < n_overlaps && p.vocab_overlap.size() < max_pairs && budget > 0; ++o) {
    std::size_t u = rng.below(n_authors), v = rng.below(n_authors - 1);
    if (v >= u) ++v;
    if (u > v) std::swap(u, v);
    const std::size_t count = std::min<std::size_t>(budget, 1 + rng.below(3));
    if (p.vocab_overlap.emplace(std::pair{u, v}, count).second) budget -= count;
  }
  return p;
}

// ---------------------------------------------------------------------------
// Verification

struct EdgeDifference {
  std::string network;  // "AN", "IN" or "CN"
  Id source;
  Id target;
  double expected = 0.0;  // 0 = no edge expected
  double actual = 0.0;    // 0 = no edge built

  friend bool operator==(const EdgeDifference&, const EdgeDifference&) = default;
};

struct VerificationReport {
  std::vector<EdgeDifference> differences;
  bool passed() const { return differences.empty(); }
};

inline constexpr double kVerifyTolerance = 1e-9;

namespace detail {

inline void diff_weighted(const std::string& name, const WeightedGraph& expected,
                          const WeightedGraph& actual, std::vector<EdgeDifference>& out) {
  std::set<WeightedGraph::EdgeKey> keys;
  for (const auto& [k, w] : expected.edges()) keys.insert(k);
  for (const auto& [k, w] : actual.edges()) keys.insert(k);
  for (const auto& k : keys) {
    const double e = expected.weight(k.first, k.second);
    const double a = actual.weight(k.first, k.second);
    if (std::abs(e - a) > kVerifyTolerance) out.push_back({name, k.first, k.second, e, a});
  }
}

}  // namespace detail

inline VerificationReport verify(const Corpus& corpus, const EmbeddingStore& store, const GroundTruth& truth,
                                 const NetworkParams& params = {},
                                 const TextPipeline& pipeline = TextPipeline()) {
  const Reading& reading = corpus.reading(truth.reading_id);
  VerificationReport report;
  detail::diff_weighted("AN", truth.expected_an,
                        build_an(reading, corpus, store, params.threshold, params.scope),
                        report.differences);
  detail::diff_weighted("IN", truth.expected_in, build_in(reading, corpus, params.scope),
                        report.differences);
  const WeightedGraph cn = build_cn(reading, corpus, params.words, pipeline, params.scope);
  std::set<WeightedGraph::EdgeKey> keys(truth.expected_cn_edges.begin(), truth.expected_cn_edges.end());
  for (const auto& [k, w] : cn.edges()) keys.insert(k);
  for (const auto& k : keys) {
    const double e = truth.expected_cn_edges.count(k) ? 1.0 : 0.0;
    const double a = cn.has_edge(k.first, k.second) ? 1.0 : 0.0;
    if (e != a) report.differences.push_back({"CN", k.first, k.second, e, a});
  }
  return report;
}

// ---------------------------------------------------------------------------
// Ground-truth file

inline nlohmann::json ground_truth_json(const GroundTruth& truth) {
  auto edges = [](const WeightedGraph& g) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& [k, w] : g.edges()) arr.push_back({{"source", k.first}, {"target", k.second}, {"weight", w}});
    return arr;
  };
  nlohmann::json cn = nlohmann::json::array();
  for (const auto& [u, v] : truth.expected_cn_edges) cn.push_back({{"source", u}, {"target", v}});
  return {{"reading_id", truth.reading_id},
          {"nodes", truth.expected_an.nodes()},
          {"an", edges(truth.expected_an)},
          {"in", edges(truth.expected_in)},
          {"cn", cn}};
}

inline void write_ground_truth(const GroundTruth& truth, std::ostream& out) {
  out << ground_truth_json(truth).dump(2) << '\n';
}

inline GroundTruth parse_ground_truth(std::istream& in) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(in);
    GroundTruth truth;
    truth.reading_id = j.at("reading_id").get<std::string>();
    for (const auto& id : j.at("nodes")) {
      truth.expected_an.add_node(id.get<std::string>());
      truth.expected_in.add_node(id.get<std::string>());
    }
    for (const auto& e : j.at("an"))
      truth.expected_an.set_weight(e.at("source"), e.at("target"), e.at("weight").get<double>());
    for (const auto& e : j.at("in"))
      truth.expected_in.set_weight(e.at("source"), e.at("target"), e.at("weight").get<double>());
    for (const auto& e : j.at("cn"))
      truth.expected_cn_edges.insert(WeightedGraph::key(e.at("source"), e.at("target")));
    return truth;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::Parse, "", std::string("ground truth: ") + e.what());
  }
}

}  // namespace aicnet
