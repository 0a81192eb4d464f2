#pragma once

#include <cmath>
#include <cstdio>
#include <optional>
#include <ostream>
#include <set>
#include <string>
#include <vector>

#include "json.hpp"

#include "aicnet/corpus.hpp"
#include "aicnet/detail/csv.hpp"
#include "aicnet/metrics.hpp"

// Tabular renderings of the descriptive statistics and the node- and
// network-level measures. CSV output is for reading (rounded, "na" for
// undefined values); JSON keeps full precision and uses null.

namespace aicnet {

inline constexpr const char* kNa = "na";

// Fixed-point with `decimals` places. With strip_zero, "0.56" becomes ".56"
// (and "-0.25" becomes "-.25"). Values that round to zero never carry a sign.
inline std::string format_fixed(double x, int decimals, bool strip_zero) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", decimals, x);
  std::string s = buf;
  if (s[0] == '-' && s.find_first_not_of("-0.") == std::string::npos) s.erase(0, 1);
  if (strip_zero) {
    if (s.rfind("0.", 0) == 0)
      s.erase(0, 1);
    else if (s.rfind("-0.", 0) == 0)
      s.erase(1, 1);
  }
  return s;
}

inline std::string format_measure(const std::optional<double>& x) {
  return x ? format_fixed(*x, 2, true) : std::string(kNa);
}

inline nlohmann::json json_value(const std::optional<double>& x) {
  return x ? nlohmann::json(*x) : nlohmann::json(nullptr);
}

// ---------------------------------------------------------------------------
// Descriptive statistics: one column per reading, then the mean and
// (population) SD across readings.

inline void write_stats_csv(const StatsTable& t, std::ostream& out) {
  out << "Reading";
  for (const auto& r : t.rows) out << ',' << detail::csv_escape(r.reading_id);
  out << ",Mean,SD\n";
  out << "Posts";
  for (const auto& r : t.rows) out << ',' << r.posts;
  out << ',' << format_fixed(t.posts.mean, 1, false) << ',' << format_fixed(t.posts.sd, 1, false) << '\n';
  out << "Replies";
  for (const auto& r : t.rows) out << ',' << r.replies;
  out << ',' << format_fixed(t.replies.mean, 1, false) << ',' << format_fixed(t.replies.sd, 1, false)
      << '\n';
  out << "Average words per post";
  for (const auto& r : t.rows)
    out << ',' << (r.average_words ? format_fixed(*r.average_words, 1, false) : kNa);
  if (t.average_words)
    out << ',' << format_fixed(t.average_words->mean, 1, false) << ','
        << format_fixed(t.average_words->sd, 1, false) << '\n';
  else
    out << ',' << kNa << ',' << kNa << '\n';
}

inline nlohmann::json stats_json(const StatsTable& t) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& r : t.rows)
    rows.push_back({{"reading_id", r.reading_id},
                    {"posts", r.posts},
                    {"replies", r.replies},
                    {"average_words", json_value(r.average_words)}});
  auto msd = [](const MeanSd& m) { return nlohmann::json{{"mean", m.mean}, {"sd", m.sd}}; };
  return {{"readings", rows},
          {"posts", msd(t.posts)},
          {"replies", msd(t.replies)},
          {"average_words", t.average_words ? msd(*t.average_words) : nlohmann::json(nullptr)}};
}

// ---------------------------------------------------------------------------
// Node level: measures as rows, students as columns.

inline void write_node_csv(const std::vector<NodeMetricsRow>& rows, std::ostream& out) {
  out << "Student";
  for (const auto& r : rows) out << ',' << detail::csv_escape(r.author_id);
  out << "\nAN Closeness";
  for (const auto& r : rows) out << ',' << format_measure(r.an_closeness);
  out << "\nIN Betweenness";
  for (const auto& r : rows) out << ',' << format_measure(r.in_betweenness);
  out << "\nCN Betweenness";
  for (const auto& r : rows) out << ',' << format_measure(r.cn_betweenness);
  out << '\n';
}

inline nlohmann::json node_json(const std::vector<NodeMetricsRow>& rows) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& r : rows)
    out.push_back({{"author_id", r.author_id},
                   {"an_closeness", json_value(r.an_closeness)},
                   {"in_betweenness", json_value(r.in_betweenness)},
                   {"cn_betweenness", json_value(r.cn_betweenness)}});
  return out;
}

// ---------------------------------------------------------------------------
// Network level: one row per reading.

inline void write_network_csv(const std::vector<NetworkMetricsRow>& rows, std::ostream& out) {
  out << "Reading,AN transitivity,IN centralization,CN transitivity\n";
  for (const auto& r : rows)
    out << detail::csv_escape(r.reading_id) << ',' << format_measure(r.an_transitivity) << ','
        << format_measure(r.in_centralization) << ',' << format_measure(r.cn_transitivity) << '\n';
}

inline nlohmann::json network_json(const std::vector<NetworkMetricsRow>& rows) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& r : rows)
    out.push_back({{"reading_id", r.reading_id},
                   {"an_transitivity", json_value(r.an_transitivity)},
                   {"in_centralization", json_value(r.in_centralization)},
                   {"cn_transitivity", json_value(r.cn_transitivity)}});
  return out;
}

// ---------------------------------------------------------------------------
// Comparison of two readings.

inline std::optional<double> delta(const std::optional<double>& a, const std::optional<double>& b) {
  if (!a || !b) return std::nullopt;
  return *b - *a;
}

struct Comparison {
  NetworkMetricsRow a;
  NetworkMetricsRow b;
  // Per author over the union of both rosters; delta = b - a.
  std::vector<NodeMetricsRow> node_a;
  std::vector<NodeMetricsRow> node_b;
  std::set<Id> only_in_a;
  std::set<Id> only_in_b;
};

inline std::vector<NodeMetricsRow> node_deltas(const Comparison& c) {
  std::vector<NodeMetricsRow> out;
  for (std::size_t i = 0; i < c.node_a.size(); ++i) {
    const auto& x = c.node_a[i];
    const auto& y = c.node_b[i];
    out.push_back({x.author_id, delta(x.an_closeness, y.an_closeness),
                   delta(x.in_betweenness, y.in_betweenness), delta(x.cn_betweenness, y.cn_betweenness)});
  }
  return out;
}

inline void write_comparison_csv(const Comparison& c, std::ostream& out) {
  out << "Measure," << detail::csv_escape(c.a.reading_id) << ',' << detail::csv_escape(c.b.reading_id)
      << ",Delta\n";
  auto line = [&](const char* name, const std::optional<double>& x, const std::optional<double>& y) {
    out << name << ',' << format_measure(x) << ',' << format_measure(y) << ',' << format_measure(delta(x, y))
        << '\n';
  };
  line("AN transitivity", c.a.an_transitivity, c.b.an_transitivity);
  line("IN centralization", c.a.in_centralization, c.b.in_centralization);
  line("CN transitivity", c.a.cn_transitivity, c.b.cn_transitivity);
  out << '\n';
  write_node_csv(node_deltas(c), out);
}

inline nlohmann::json comparison_json(const Comparison& c) {
  const auto d = node_deltas(c);
  nlohmann::json nodes = nlohmann::json::array();
  for (std::size_t i = 0; i < d.size(); ++i) {
    nlohmann::json row = {{"author_id", d[i].author_id}};
    row["a"] = node_json({c.node_a[i]})[0];
    row["b"] = node_json({c.node_b[i]})[0];
    row["delta"] = node_json({d[i]})[0];
    for (auto* part : {&row["a"], &row["b"], &row["delta"]}) part->erase("author_id");
    nodes.push_back(row);
  }
  return {{"reading_a", c.a.reading_id},
          {"reading_b", c.b.reading_id},
          {"network",
           {{"a", network_json({c.a})[0]},
            {"b", network_json({c.b})[0]},
            {"delta",
             {{"an_transitivity", json_value(delta(c.a.an_transitivity, c.b.an_transitivity))},
              {"in_centralization", json_value(delta(c.a.in_centralization, c.b.in_centralization))},
              {"cn_transitivity", json_value(delta(c.a.cn_transitivity, c.b.cn_transitivity))}}}}},
          {"nodes", nodes},
          {"only_in_a", c.only_in_a},
          {"only_in_b", c.only_in_b}};
}

}  // namespace aicnet
