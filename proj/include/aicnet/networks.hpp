#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "aicnet/corpus.hpp"
#include "aicnet/graph.hpp"
#include "aicnet/semantic.hpp"
#include "aicnet/textpipe.hpp"

namespace aicnet {

// Which authors become nodes: those active in the reading, or the whole
// corpus roster (useful when comparing readings node by node).
enum class NodeScope { active, roster };

inline std::set<Id> network_nodes(const Reading& reading, const Corpus& corpus, NodeScope scope) {
  return scope == NodeScope::roster ? corpus.authors() : reading.active_authors();
}

// Quotes the author attended to: quotes of their annotations plus, for each
// of their replies, the quote of the thread's root annotation. Sorted by id.
inline std::vector<Quote> attention_quotes(const Id& author, const Reading& reading) {
  std::set<Id> ids;
  for (const auto& a : reading.artifacts()) {
    if (a.author_id != author) continue;
    const Artifact& root = thread_root(a, reading);
    ids.insert(root.quote_id.value());
  }
  std::vector<Quote> out;
  for (const auto& id : ids) out.push_back(*reading.find_quote(id));
  return out;
}

inline std::vector<Quote> attention_quotes(const Id& author, const Reading& reading, const Corpus&) {
  return attention_quotes(author, reading);
}

// One representative (smallest id) per normalized text.
inline std::vector<Quote> distinct_texts(const std::vector<Quote>& quotes) {
  std::map<std::string, const Quote*> by_text;
  for (const auto& q : quotes) {
    auto [it, inserted] = by_text.emplace(q.normalized_text, &q);
    if (!inserted && q.id < it->second->id) it->second = &q;
  }
  std::vector<Quote> out;
  for (const auto& [t, q] : by_text) out.push_back(*q);
  std::sort(out.begin(), out.end(), [](const Quote& a, const Quote& b) { return a.id < b.id; });
  return out;
}

// Joint attention network: an edge wherever two authors share at least one
// joint quote pair; weight is the summed similarity of those pairs.
inline WeightedGraph build_an(const Reading& reading, const Corpus& corpus, const EmbeddingStore& store,
                              double threshold = kDefaultThreshold, NodeScope scope = NodeScope::active) {
  check_threshold(threshold);
  WeightedGraph g;
  const auto nodes = network_nodes(reading, corpus, scope);
  std::map<Id, std::vector<Quote>> attention;
  for (const auto& author : nodes) {
    g.add_node(author);
    attention[author] = distinct_texts(attention_quotes(author, reading));
  }
  for (auto u = attention.begin(); u != attention.end(); ++u) {
    if (u->second.empty()) continue;
    for (auto v = std::next(u); v != attention.end(); ++v) {
      if (v->second.empty()) continue;
      double weight = 0.0;
      const auto pairs = joint_pairs(u->second, v->second, store, threshold);
      for (const auto& p : pairs) weight += p.similarity;
      if (!pairs.empty()) g.add_weight(u->first, v->first, weight);
    }
  }
  return g;
}

// Interaction network: one event per reply between the replier and the
// parent's author; self-replies are dropped.
inline WeightedGraph build_in(const Reading& reading, const Corpus& corpus,
                              NodeScope scope = NodeScope::active) {
  WeightedGraph g;
  for (const auto& author : network_nodes(reading, corpus, scope)) g.add_node(author);
  for (const auto& a : reading.artifacts()) {
    if (!a.is_reply()) continue;
    const Artifact* parent = reading.find_artifact(a.parent_id.value());
    if (parent->author_id != a.author_id) g.add_weight(a.author_id, parent->author_id, 1.0);
  }
  return g;
}

inline BipartiteGraph build_cn_bipartite(const Reading& reading, const Corpus& corpus,
                                         const WordSelectionParams& params,
                                         const TextPipeline& pipeline = TextPipeline(),
                                         NodeScope scope = NodeScope::active) {
  BipartiteGraph bg;
  bg.authors = network_nodes(reading, corpus, scope);
  for (const auto& w : select_cn_words(reading, params, pipeline)) {
    bg.authors.insert(w.author_id);
    bg.words.insert(w.lemma);
    bg.edges.emplace(w.author_id, w.lemma);
  }
  return bg;
}

inline WeightedGraph build_cn(const Reading& reading, const Corpus& corpus,
                              const WordSelectionParams& params,
                              const TextPipeline& pipeline = TextPipeline(),
                              NodeScope scope = NodeScope::active) {
  return project(build_cn_bipartite(reading, corpus, params, pipeline, scope));
}

struct NetworkParams {
  double threshold = kDefaultThreshold;
  WordSelectionParams words;
  NodeScope scope = NodeScope::active;
};

struct AicNetworks {
  WeightedGraph an;
  WeightedGraph in;
  WeightedGraph cn;
};

inline AicNetworks build_networks(const Reading& reading, const Corpus& corpus,
                                  const EmbeddingStore& store, const NetworkParams& params = {},
                                  const TextPipeline& pipeline = TextPipeline()) {
  return {build_an(reading, corpus, store, params.threshold, params.scope),
          build_in(reading, corpus, params.scope),
          build_cn(reading, corpus, params.words, pipeline, params.scope)};
}

}  // namespace aicnet
