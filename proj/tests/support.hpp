#pragma once

#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "aicnet/corpus.hpp"
#include "aicnet/graph.hpp"

namespace testing_support {

using aicnet::Id;

// Builds corpora in code. Readings are created on first mention.
class Fixture {
 public:
  Fixture& quote(const Id& rid, const Id& qid, const std::string& text) {
    reading(rid).add_quote(aicnet::Quote::make(qid, rid, text));
    return *this;
  }

  Fixture& note(const Id& rid, const Id& id, const Id& author, const Id& qid, const std::string& body = "note") {
    aicnet::Artifact a;
    a.id = id;
    a.author_id = author;
    a.reading_id = rid;
    a.kind = aicnet::ArtifactKind::annotation;
    a.quote_id = qid;
    a.body = body;
    reading(rid).add_artifact(a);
    return *this;
  }

  Fixture& reply(const Id& rid, const Id& id, const Id& author, const Id& parent, const std::string& body = "reply") {
    aicnet::Artifact a;
    a.id = id;
    a.author_id = author;
    a.reading_id = rid;
    a.kind = aicnet::ArtifactKind::reply;
    a.parent_id = parent;
    a.body = body;
    reading(rid).add_artifact(a);
    return *this;
  }

  aicnet::Reading& reading(const Id& rid) {
    auto it = readings_.find(rid);
    if (it == readings_.end()) it = readings_.emplace(rid, aicnet::Reading(rid)).first;
    return it->second;
  }

  aicnet::Corpus corpus() const { return aicnet::Corpus(readings_); }

 private:
  std::map<Id, aicnet::Reading> readings_;
};

inline aicnet::Corpus parse_jsonl(const std::string& text) {
  std::istringstream in(text);
  return aicnet::parse_corpus(in, aicnet::CorpusFormat::jsonl);
}

inline std::string node_name(std::size_t i) { return "n" + std::to_string(i); }

inline aicnet::WeightedGraph from_edges(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
  aicnet::WeightedGraph g;
  for (std::size_t i = 0; i < n; ++i) g.add_node(node_name(i));
  for (auto [u, v] : edges) g.set_weight(node_name(u), node_name(v), 1.0);
  return g;
}

inline aicnet::WeightedGraph path_graph(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> e;
  for (std::size_t i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return from_edges(n, e);
}

inline aicnet::WeightedGraph cycle_graph(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> e;
  for (std::size_t i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  return from_edges(n, e);
}

// Hub is n0.
inline aicnet::WeightedGraph star_graph(std::size_t leaves) {
  std::vector<std::pair<std::size_t, std::size_t>> e;
  for (std::size_t i = 1; i <= leaves; ++i) e.emplace_back(0, i);
  return from_edges(leaves + 1, e);
}

inline aicnet::WeightedGraph complete_graph(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> e;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) e.emplace_back(i, j);
  return from_edges(n, e);
}

}  // namespace testing_support
