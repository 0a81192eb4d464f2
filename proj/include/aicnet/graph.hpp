#pragma once

#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "aicnet/corpus.hpp"
#include "aicnet/error.hpp"

namespace aicnet {

// Undirected learner-learner graph with positive edge weights and no
// self-loops. Edge keys are ordered pairs (smaller id first).
class WeightedGraph {
 public:
  using EdgeKey = std::pair<Id, Id>;

  static EdgeKey key(const Id& u, const Id& v) { return u < v ? EdgeKey{u, v} : EdgeKey{v, u}; }

  void add_node(const Id& id) { adjacency_.try_emplace(id); nodes_.insert(id); }

  // Accumulates `weight` onto edge {u, v}, creating nodes as needed.
  void add_weight(const Id& u, const Id& v, double weight) {
    if (u == v) throw Error(ErrorCode::Internal, u, "self-loop");
    if (!(weight > 0.0)) throw Error(ErrorCode::Internal, u + "--" + v, "edge weight must be positive");
    add_node(u);
    add_node(v);
    edges_[key(u, v)] += weight;
    adjacency_[u].insert(v);
    adjacency_[v].insert(u);
  }

  void set_weight(const Id& u, const Id& v, double weight) {
    if (u == v) throw Error(ErrorCode::Internal, u, "self-loop");
    if (!(weight > 0.0)) throw Error(ErrorCode::Internal, u + "--" + v, "edge weight must be positive");
    add_node(u);
    add_node(v);
    edges_[key(u, v)] = weight;
    adjacency_[u].insert(v);
    adjacency_[v].insert(u);
  }

  const std::set<Id>& nodes() const { return nodes_; }
  const std::map<EdgeKey, double>& edges() const { return edges_; }
  std::size_t node_count() const { return nodes_.size(); }
  std::size_t edge_count() const { return edges_.size(); }

  bool has_node(const Id& id) const { return nodes_.count(id) > 0; }
  bool has_edge(const Id& u, const Id& v) const { return edges_.count(key(u, v)) > 0; }

  double weight(const Id& u, const Id& v) const {
    const auto it = edges_.find(key(u, v));
    return it == edges_.end() ? 0.0 : it->second;
  }

  const std::set<Id>& neighbors(const Id& id) const {
    const auto it = adjacency_.find(id);
    if (it == adjacency_.end()) throw Error(ErrorCode::UnknownNode, id, "node not in graph");
    return it->second;
  }

  std::size_t degree(const Id& id) const { return neighbors(id).size(); }
  bool is_isolated(const Id& id) const { return degree(id) == 0; }

  double total_weight() const {
    double sum = 0.0;
    for (const auto& [k, w] : edges_) sum += w;
    return sum;
  }

  friend bool operator==(const WeightedGraph& a, const WeightedGraph& b) {
    return a.nodes_ == b.nodes_ && a.edges_ == b.edges_;
  }

 private:
  std::set<Id> nodes_;
  std::map<EdgeKey, double> edges_;
  std::map<Id, std::set<Id>> adjacency_;
};

// Nodes with at least one edge, and all edges. The input is not modified.
inline WeightedGraph non_isolated_subgraph(const WeightedGraph& g) {
  WeightedGraph out;
  for (const auto& [k, w] : g.edges()) out.set_weight(k.first, k.second, w);
  return out;
}

// Two-mode author-word graph.
struct BipartiteGraph {
  std::set<Id> authors;
  std::set<std::string> words;
  std::set<std::pair<Id, std::string>> edges;  // (author, lemma)

  std::map<Id, std::set<std::string>> words_by_author() const {
    std::map<Id, std::set<std::string>> out;
    for (const auto& a : authors) out[a];
    for (const auto& [a, w] : edges) out[a].insert(w);
    return out;
  }

  friend bool operator==(const BipartiteGraph&, const BipartiteGraph&) = default;
};

// Learner-level projection: authors sharing at least one word are linked,
// weighted by the number of distinct shared words.
inline WeightedGraph project(const BipartiteGraph& bg) {
  WeightedGraph g;
  for (const auto& a : bg.authors) g.add_node(a);
  std::map<std::string, std::vector<Id>> authors_by_word;
  for (const auto& [a, w] : bg.edges) authors_by_word[w].push_back(a);
  for (const auto& [w, users] : authors_by_word)
    for (std::size_t i = 0; i < users.size(); ++i)
      for (std::size_t j = i + 1; j < users.size(); ++j) g.add_weight(users[i], users[j], 1.0);
  return g;
}

}  // namespace aicnet
