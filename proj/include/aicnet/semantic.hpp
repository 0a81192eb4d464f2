#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "json.hpp"

#include "aicnet/corpus.hpp"
#include "aicnet/detail/utf8.hpp"
#include "aicnet/error.hpp"

namespace aicnet {

using Vector = std::vector<double>;

// Similarities within this distance below a threshold still meet it, so that
// a stored .8 that rounds to 0.7999999999999999 is not lost.
inline constexpr double kSimilarityTolerance = 1e-9;

inline constexpr std::size_t kDefaultHashDim = 256;
inline constexpr double kDefaultThreshold = 0.8;

class EmbeddingStore {
 public:
  EmbeddingStore() = default;
  explicit EmbeddingStore(std::size_t dim) : dim_(dim) {}

  // Zero until the first vector fixes it.
  std::size_t dim() const { return dim_; }
  std::size_t size() const { return vectors_.size(); }
  bool empty() const { return vectors_.empty(); }
  const std::map<Id, Vector>& vectors() const { return vectors_; }

  void insert(Id quote_id, Vector v) {
    if (v.empty())
      throw Error(ErrorCode::DimensionMismatch, quote_id, "empty vector");
    if (dim_ == 0) dim_ = v.size();
    if (v.size() != dim_)
      throw Error(ErrorCode::DimensionMismatch, quote_id,
                  "expected " + std::to_string(dim_) + " components, got " + std::to_string(v.size()));
    if (!std::all_of(v.begin(), v.end(), [](double x) { return std::isfinite(x); }))
      throw Error(ErrorCode::Parse, quote_id, "vector has non-finite components");
    if (std::all_of(v.begin(), v.end(), [](double x) { return x == 0.0; }))
      throw Error(ErrorCode::ZeroVector, quote_id, "all components are zero");
    if (!vectors_.emplace(quote_id, std::move(v)).second)
      throw Error(ErrorCode::DuplicateId, quote_id, "quote has more than one vector");
  }

  const Vector* find(const Id& quote_id) const {
    const auto it = vectors_.find(quote_id);
    return it == vectors_.end() ? nullptr : &it->second;
  }

  friend bool operator==(const EmbeddingStore&, const EmbeddingStore&) = default;

 private:
  std::size_t dim_ = 0;
  std::map<Id, Vector> vectors_;
};

// ---------------------------------------------------------------------------
// Cosine similarity

inline double cosine(std::span<const double> u, std::span<const double> v) {
  if (u.size() != v.size())
    throw Error(ErrorCode::DimensionMismatch, "",
                std::to_string(u.size()) + " vs " + std::to_string(v.size()));
  double dot = 0.0, uu = 0.0, vv = 0.0;
  for (std::size_t i = 0; i < u.size(); ++i) {
    dot += u[i] * v[i];
    uu += u[i] * u[i];
    vv += v[i] * v[i];
  }
  if (uu == 0.0 || vv == 0.0) throw Error(ErrorCode::ZeroVector, "", "cosine of a zero vector");
  return std::clamp(dot / (std::sqrt(uu) * std::sqrt(vv)), -1.0, 1.0);
}

// ---------------------------------------------------------------------------
// Fallback embedder
//
// Byte 3-, 4- and 5-grams of the normalized text are hashed with 64-bit
// FNV-1a. Bucket = hash mod dim, sign = bit 32 of the hash (set -> -1).
// Texts shorter than 3 bytes contribute the whole text as a single gram. The
// vector is L2-normalised; if the signed counts cancel exactly, the bucket of
// the whole-text hash is set to 1 instead.

inline Vector hash_embed(std::string_view text, std::size_t dim = kDefaultHashDim) {
  if (dim < 8) throw Error(ErrorCode::InvalidArgument, "dim", "hash_embed needs dim >= 8");
  const std::string norm = normalize_text(text);
  if (norm.empty()) throw Error(ErrorCode::EmptyText, "", "cannot embed empty text");
  Vector v(dim, 0.0);
  auto add = [&](std::string_view gram) {
    const std::uint64_t h = detail::fnv1a(gram);
    v[h % dim] += ((h >> 32) & 1U) ? -1.0 : 1.0;
  };
  if (norm.size() < 3) {
    add(norm);
  } else {
    for (std::size_t n = 3; n <= 5; ++n)
      for (std::size_t i = 0; i + n <= norm.size(); ++i) add(std::string_view(norm).substr(i, n));
  }
  double ss = 0.0;
  for (double x : v) ss += x * x;
  if (ss == 0.0) {
    v[detail::fnv1a(norm) % dim] = 1.0;
    return v;
  }
  const double inv = 1.0 / std::sqrt(ss);
  for (double& x : v) x *= inv;
  return v;
}

// Fallback store: one hash embedding per quote in the corpus.
inline EmbeddingStore hash_embed_corpus(const Corpus& corpus, std::size_t dim = kDefaultHashDim) {
  EmbeddingStore store(dim);
  for (const auto& [rid, reading] : corpus.readings())
    for (const auto& [qid, q] : reading.quotes()) store.insert(qid, hash_embed(q.text, dim));
  return store;
}

// ---------------------------------------------------------------------------
// Embedding files

namespace detail {

inline constexpr std::array<char, 8> kEmbeddingMagic = {'A', 'I', 'C', 'E', 'M', 'B', '0', '1'};

inline void put_u32(std::ostream& out, std::uint32_t x) {
  const char bytes[4] = {static_cast<char>(x & 0xFF), static_cast<char>((x >> 8) & 0xFF),
                         static_cast<char>((x >> 16) & 0xFF), static_cast<char>((x >> 24) & 0xFF)};
  out.write(bytes, 4);
}

inline std::uint32_t get_u32(std::istream& in) {
  unsigned char b[4];
  if (!in.read(reinterpret_cast<char*>(b), 4))
    throw Error(ErrorCode::Parse, "", "truncated binary embedding file");
  return static_cast<std::uint32_t>(b[0]) | (static_cast<std::uint32_t>(b[1]) << 8) |
         (static_cast<std::uint32_t>(b[2]) << 16) | (static_cast<std::uint32_t>(b[3]) << 24);
}

inline void put_f32(std::ostream& out, float f) {
  std::uint32_t bits;
  std::memcpy(&bits, &f, 4);
  put_u32(out, bits);
}

inline float get_f32(std::istream& in) {
  const std::uint32_t bits = get_u32(in);
  float f;
  std::memcpy(&f, &bits, 4);
  return f;
}

}  // namespace detail

// JSONL: {"quote_id": "...", "vector": [ ... ]} per line.
inline EmbeddingStore parse_embeddings_jsonl(std::istream& in) {
  EmbeddingStore store;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (detail::trim(line).empty()) continue;
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(line);
    } catch (const nlohmann::json::parse_error& e) {
      throw Error(ErrorCode::Parse, "", std::string("invalid JSON: ") + e.what(), line_no);
    }
    if (!j.is_object() || !j.contains("quote_id") || !j["quote_id"].is_string() ||
        !j.contains("vector") || !j["vector"].is_array())
      throw Error(ErrorCode::Parse, "", "expected {\"quote_id\": string, \"vector\": [number]}", line_no);
    Vector v;
    for (const auto& x : j["vector"]) {
      if (!x.is_number()) throw Error(ErrorCode::Parse, "", "vector component is not a number", line_no);
      v.push_back(x.get<double>());
    }
    try {
      store.insert(j["quote_id"].get<std::string>(), std::move(v));
    } catch (const Error& e) {
      throw Error(e.code(), e.subject(), e.reason(), line_no);
    }
  }
  return store;
}

inline EmbeddingStore parse_embeddings_binary(std::istream& in) {
  std::array<char, 8> magic{};
  if (!in.read(magic.data(), 8) || magic != detail::kEmbeddingMagic)
    throw Error(ErrorCode::Parse, "", "bad magic in binary embedding file");
  const std::uint32_t dim = detail::get_u32(in);
  const std::uint32_t count = detail::get_u32(in);
  if (dim == 0) throw Error(ErrorCode::Parse, "", "binary embedding file declares dim 0");
  std::vector<Id> ids;
  ids.reserve(count);
  for (std::uint32_t i = 0; i < count; ++i) {
    const std::uint32_t len = detail::get_u32(in);
    std::string id(len, '\0');
    if (len > 0 && !in.read(id.data(), len))
      throw Error(ErrorCode::Parse, "", "truncated binary embedding file");
    ids.push_back(std::move(id));
  }
  EmbeddingStore store(dim);
  for (std::uint32_t i = 0; i < count; ++i) {
    Vector v(dim);
    for (auto& x : v) x = detail::get_f32(in);
    store.insert(ids[i], std::move(v));
  }
  return store;
}

inline void write_embeddings_jsonl(const EmbeddingStore& store, std::ostream& out) {
  for (const auto& [id, v] : store.vectors())
    out << nlohmann::json{{"quote_id", id}, {"vector", v}}.dump() << '\n';
}

inline void write_embeddings_binary(const EmbeddingStore& store, std::ostream& out) {
  out.write(detail::kEmbeddingMagic.data(), 8);
  detail::put_u32(out, static_cast<std::uint32_t>(store.dim()));
  detail::put_u32(out, static_cast<std::uint32_t>(store.size()));
  for (const auto& [id, v] : store.vectors()) {
    detail::put_u32(out, static_cast<std::uint32_t>(id.size()));
    out.write(id.data(), static_cast<std::streamsize>(id.size()));
  }
  for (const auto& [id, v] : store.vectors())
    for (double x : v) detail::put_f32(out, static_cast<float>(x));
}

// Detects the binary variant by its magic; anything else is read as JSONL.
inline EmbeddingStore load_embeddings(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::Io, path.string(), "cannot open embedding file");
  std::array<char, 8> magic{};
  in.read(magic.data(), 8);
  const bool binary = in.gcount() == 8 && magic == detail::kEmbeddingMagic;
  in.clear();
  in.seekg(0);
  return binary ? parse_embeddings_binary(in) : parse_embeddings_jsonl(in);
}

struct EmbeddingLoad {
  EmbeddingStore store;
  std::vector<Id> orphans;  // vectors for quote ids the corpus does not know
};

inline std::vector<Id> orphan_quotes(const EmbeddingStore& store, const Corpus& corpus) {
  std::set<Id> known;
  for (const auto& [rid, reading] : corpus.readings())
    for (const auto& [qid, q] : reading.quotes()) known.insert(qid);
  std::vector<Id> out;
  for (const auto& [id, v] : store.vectors())
    if (!known.count(id)) out.push_back(id);
  return out;
}

inline EmbeddingLoad load_embeddings(const std::filesystem::path& path, const Corpus& corpus) {
  EmbeddingLoad result{load_embeddings(path), {}};
  result.orphans = orphan_quotes(result.store, corpus);
  return result;
}

// ---------------------------------------------------------------------------
// Quote similarity and joint quotes

// Common references (same id or same normalized text) are exactly 1.0 no
// matter what the stored vectors say; otherwise cosine of the stored vectors.
inline double quote_similarity(const Quote& a, const Quote& b, const EmbeddingStore& store) {
  if (a.id == b.id || a.normalized_text == b.normalized_text) return 1.0;
  const Vector* va = store.find(a.id);
  if (!va) throw Error(ErrorCode::MissingEmbedding, a.id, "no vector for quote");
  const Vector* vb = store.find(b.id);
  if (!vb) throw Error(ErrorCode::MissingEmbedding, b.id, "no vector for quote");
  return cosine(*va, *vb);
}

struct JointPair {
  Id quote_a;  // quote_a <= quote_b
  Id quote_b;
  double similarity = 0.0;

  friend bool operator==(const JointPair&, const JointPair&) = default;
};

inline bool meets_threshold(double similarity, double threshold) {
  return similarity >= threshold - kSimilarityTolerance;
}

inline void check_threshold(double threshold) {
  if (!(threshold >= 0.0 && threshold <= 1.0))
    throw Error(ErrorCode::InvalidArgument, "threshold", "must lie in [0, 1]");
}

// Unordered quote pairs, one side from each set, whose similarity meets the
// threshold. Sorted by (quote_a, quote_b).
inline std::vector<JointPair> joint_pairs(std::span<const Quote> first, std::span<const Quote> second,
                                          const EmbeddingStore& store, double threshold) {
  check_threshold(threshold);
  std::map<std::pair<Id, Id>, double> found;
  std::set<std::pair<Id, Id>> visited;
  for (const auto& q : first) {
    for (const auto& r : second) {
      auto key = q.id <= r.id ? std::pair{q.id, r.id} : std::pair{r.id, q.id};
      if (!visited.insert(key).second) continue;
      const double s = quote_similarity(q, r, store);
      if (meets_threshold(s, threshold)) found.emplace(std::move(key), s);
    }
  }
  std::vector<JointPair> out;
  out.reserve(found.size());
  for (auto& [key, s] : found) out.push_back({key.first, key.second, s});
  return out;
}

}  // namespace aicnet
