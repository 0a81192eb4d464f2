#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <deque>
#include <limits>
#include <map>
#include <optional>
#include <queue>
#include <set>
#include <string>
#include <vector>

#include "aicnet/graph.hpp"

// Network- and node-level measures. Every measure runs on the unweighted
// skeleton unless PathMode::inverse_weight is requested for the path-based
// ones, in which case an edge of weight w has length 1/w. Undefined values
// (isolated nodes, zero denominators) are std::nullopt, never NaN.

namespace aicnet {

enum class PathMode { unweighted, inverse_weight };

namespace detail {

// Index-based view of a WeightedGraph, nodes in id order.
struct Skeleton {
  std::vector<Id> ids;
  std::map<Id, std::size_t> index;
  std::vector<std::vector<std::size_t>> adj;
  std::vector<std::vector<double>> lengths;  // parallel to adj

  explicit Skeleton(const WeightedGraph& g, PathMode mode = PathMode::unweighted) {
    for (const auto& id : g.nodes()) {
      index.emplace(id, ids.size());
      ids.push_back(id);
    }
    adj.resize(ids.size());
    lengths.resize(ids.size());
    for (const auto& [k, w] : g.edges()) {
      const std::size_t a = index.at(k.first), b = index.at(k.second);
      const double len = mode == PathMode::unweighted ? 1.0 : 1.0 / w;
      adj[a].push_back(b);
      adj[b].push_back(a);
      lengths[a].push_back(len);
      lengths[b].push_back(len);
    }
  }

  std::size_t size() const { return ids.size(); }
};

// Single-source shortest paths with path counts and predecessor lists, in
// the order nodes were settled (needed by Brandes accumulation).
struct ShortestPaths {
  std::vector<double> dist;
  std::vector<double> sigma;
  std::vector<std::vector<std::size_t>> preds;
  std::vector<std::size_t> order;
};

inline ShortestPaths shortest_paths(const Skeleton& s, std::size_t source, PathMode mode) {
  const std::size_t n = s.size();
  constexpr double inf = std::numeric_limits<double>::infinity();
  ShortestPaths sp{std::vector<double>(n, inf), std::vector<double>(n, 0.0),
                   std::vector<std::vector<std::size_t>>(n), {}};
  sp.dist[source] = 0.0;
  sp.sigma[source] = 1.0;
  if (mode == PathMode::unweighted) {
    std::deque<std::size_t> queue{source};
    while (!queue.empty()) {
      const std::size_t v = queue.front();
      queue.pop_front();
      sp.order.push_back(v);
      for (std::size_t w : s.adj[v]) {
        if (sp.dist[w] == inf) {
          sp.dist[w] = sp.dist[v] + 1.0;
          queue.push_back(w);
        }
        if (sp.dist[w] == sp.dist[v] + 1.0) {
          sp.sigma[w] += sp.sigma[v];
          sp.preds[w].push_back(v);
        }
      }
    }
    return sp;
  }
  // Dijkstra; path lengths equal within a relative 1e-12 count as ties.
  auto same = [](double a, double b) { return std::abs(a - b) <= 1e-12 * std::max(1.0, std::abs(a)); };
  using Item = std::pair<double, std::size_t>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
  std::vector<bool> settled(n, false);
  heap.emplace(0.0, source);
  while (!heap.empty()) {
    auto [d, v] = heap.top();
    heap.pop();
    if (settled[v] || d > sp.dist[v]) continue;
    settled[v] = true;
    sp.order.push_back(v);
    for (std::size_t i = 0; i < s.adj[v].size(); ++i) {
      const std::size_t w = s.adj[v][i];
      const double nd = d + s.lengths[v][i];
      if (settled[w]) continue;
      if (sp.dist[w] == inf || (nd < sp.dist[w] && !same(nd, sp.dist[w]))) {
        sp.dist[w] = nd;
        sp.sigma[w] = sp.sigma[v];
        sp.preds[w] = {v};
        heap.emplace(nd, w);
      } else if (same(nd, sp.dist[w])) {
        sp.sigma[w] += sp.sigma[v];
        sp.preds[w].push_back(v);
      }
    }
  }
  return sp;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Network level

struct TriadCounts {
  std::size_t triangles = 0;
  std::size_t connected_triples = 0;
};

inline TriadCounts triad_counts(const WeightedGraph& g) {
  const detail::Skeleton s(g);
  TriadCounts out;
  std::size_t closed = 0;  // each triangle is seen once per corner
  for (std::size_t v = 0; v < s.size(); ++v) {
    const auto& nb = s.adj[v];
    const std::size_t d = nb.size();
    if (d >= 2) out.connected_triples += d * (d - 1) / 2;
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = i + 1; j < d; ++j)
        if (g.has_edge(s.ids[nb[i]], s.ids[nb[j]])) ++closed;
  }
  out.triangles = closed / 3;
  return out;
}

// Global clustering coefficient: 3 * triangles / connected triples.
inline std::optional<double> transitivity(const WeightedGraph& g) {
  const auto t = triad_counts(non_isolated_subgraph(g));
  if (t.connected_triples == 0) return std::nullopt;
  return 3.0 * static_cast<double>(t.triangles) / static_cast<double>(t.connected_triples);
}

// Freeman degree centralization over the non-isolated nodes.
inline std::optional<double> degree_centralization(const WeightedGraph& g) {
  const WeightedGraph h = non_isolated_subgraph(g);
  const std::size_t n = h.node_count();
  if (n < 3) return std::nullopt;
  std::size_t d_max = 0;
  for (const auto& v : h.nodes()) d_max = std::max(d_max, h.degree(v));
  double sum = 0.0;
  for (const auto& v : h.nodes()) sum += static_cast<double>(d_max - h.degree(v));
  return sum / (static_cast<double>(n - 1) * static_cast<double>(n - 2));
}

// ---------------------------------------------------------------------------
// Node level

// Component-local closeness: (k - 1) / sum of distances to the other k - 1
// members of v's component. Null for isolates.
inline std::optional<double> closeness(const WeightedGraph& g, const Id& v,
                                       PathMode mode = PathMode::unweighted) {
  if (!g.has_node(v)) throw Error(ErrorCode::UnknownNode, v, "node not in graph");
  if (g.is_isolated(v)) return std::nullopt;
  const detail::Skeleton s(g, mode);
  const auto sp = detail::shortest_paths(s, s.index.at(v), mode);
  double total = 0.0;
  std::size_t reached = 0;
  for (double d : sp.dist) {
    if (std::isinf(d) || d == 0.0) continue;
    total += d;
    ++reached;
  }
  return static_cast<double>(reached) / total;
}

// Betweenness for every node of g (Brandes). Normalised by (n-1)(n-2)/2
// where n counts non-isolated nodes; null for isolates and when n < 3.
inline std::map<Id, std::optional<double>> betweenness_all(const WeightedGraph& g,
                                                           PathMode mode = PathMode::unweighted) {
  std::map<Id, std::optional<double>> out;
  for (const auto& v : g.nodes()) out[v] = std::nullopt;
  const WeightedGraph h = non_isolated_subgraph(g);
  const std::size_t n = h.node_count();
  if (n < 3) return out;
  const detail::Skeleton s(h, mode);
  std::vector<double> raw(n, 0.0);
  for (std::size_t src = 0; src < n; ++src) {
    const auto sp = detail::shortest_paths(s, src, mode);
    std::vector<double> delta(n, 0.0);
    for (auto it = sp.order.rbegin(); it != sp.order.rend(); ++it) {
      const std::size_t w = *it;
      for (std::size_t v : sp.preds[w]) delta[v] += sp.sigma[v] / sp.sigma[w] * (1.0 + delta[w]);
      if (w != src) raw[w] += delta[w];
    }
  }
  // Each unordered pair was counted from both endpoints.
  const double norm = static_cast<double>(n - 1) * static_cast<double>(n - 2) / 2.0;
  for (std::size_t i = 0; i < n; ++i) out[s.ids[i]] = raw[i] / 2.0 / norm;
  return out;
}

inline std::optional<double> betweenness(const WeightedGraph& g, const Id& v,
                                         PathMode mode = PathMode::unweighted) {
  if (!g.has_node(v)) throw Error(ErrorCode::UnknownNode, v, "node not in graph");
  if (g.is_isolated(v)) return std::nullopt;
  return betweenness_all(g, mode).at(v);
}

inline std::map<Id, std::optional<double>> closeness_all(const WeightedGraph& g,
                                                         PathMode mode = PathMode::unweighted) {
  std::map<Id, std::optional<double>> out;
  for (const auto& v : g.nodes()) out[v] = closeness(g, v, mode);
  return out;
}

// ---------------------------------------------------------------------------
// Reports

struct NodeMetricsRow {
  Id author_id;
  std::optional<double> an_closeness;
  std::optional<double> in_betweenness;
  std::optional<double> cn_betweenness;

  friend bool operator==(const NodeMetricsRow&, const NodeMetricsRow&) = default;
};

struct NetworkMetricsRow {
  Id reading_id;
  std::optional<double> an_transitivity;
  std::optional<double> in_centralization;
  std::optional<double> cn_transitivity;

  friend bool operator==(const NetworkMetricsRow&, const NetworkMetricsRow&) = default;
};

// One row per roster author, sorted by id. Authors absent from or isolated
// in a network get null for that network's measure.
inline std::vector<NodeMetricsRow> node_report(const WeightedGraph& an, const WeightedGraph& in,
                                               const WeightedGraph& cn, const std::set<Id>& roster,
                                               PathMode mode = PathMode::unweighted) {
  const auto an_close = closeness_all(an, mode);
  const auto in_btw = betweenness_all(in, mode);
  const auto cn_btw = betweenness_all(cn, mode);
  auto lookup = [](const std::map<Id, std::optional<double>>& m, const Id& id) {
    const auto it = m.find(id);
    return it == m.end() ? std::nullopt : it->second;
  };
  std::vector<NodeMetricsRow> rows;
  for (const auto& a : roster)
    rows.push_back({a, lookup(an_close, a), lookup(in_btw, a), lookup(cn_btw, a)});
  return rows;
}

struct ReadingNetworks {
  Id reading_id;
  WeightedGraph an;
  WeightedGraph in;
  WeightedGraph cn;
};

inline NetworkMetricsRow network_metrics(const ReadingNetworks& r) {
  return {r.reading_id, transitivity(r.an), degree_centralization(r.in), transitivity(r.cn)};
}

inline std::vector<NetworkMetricsRow> network_report(const std::vector<ReadingNetworks>& readings) {
  std::vector<NetworkMetricsRow> rows;
  for (const auto& r : readings) rows.push_back(network_metrics(r));
  std::sort(rows.begin(), rows.end(),
            [](const auto& a, const auto& b) { return a.reading_id < b.reading_id; });
  return rows;
}

}  // namespace aicnet
