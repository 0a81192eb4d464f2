#pragma once

#include <cctype>
#include <charconv>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <system_error>
#include <vector>

#include <boost/property_tree/ptree.hpp>
#include <boost/property_tree/xml_parser.hpp>

#include "json.hpp"

#include "aicnet/detail/csv.hpp"
#include "aicnet/error.hpp"
#include "aicnet/graph.hpp"

// Graph file formats. Every format carries node ids, an `isolated` flag per
// node and full-precision edge weights (shortest round-trip decimal form).

namespace aicnet {

enum class GraphFormat { graphml, dot, csv, json };

inline std::string_view to_string(GraphFormat f) {
  switch (f) {
    case GraphFormat::graphml: return "graphml";
    case GraphFormat::dot: return "dot";
    case GraphFormat::csv: return "csv";
    case GraphFormat::json: return "json";
  }
  return "";
}

inline GraphFormat parse_graph_format(std::string_view name) {
  if (name == "graphml") return GraphFormat::graphml;
  if (name == "dot") return GraphFormat::dot;
  if (name == "csv") return GraphFormat::csv;
  if (name == "json") return GraphFormat::json;
  throw Error(ErrorCode::InvalidArgument, std::string(name), "unknown graph format");
}

// Shortest decimal string that parses back to exactly `x`.
inline std::string format_double(double x) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

inline double parse_double(std::string_view text) {
  double x = 0.0;
  const auto res = std::from_chars(text.data(), text.data() + text.size(), x);
  if (res.ec != std::errc() || res.ptr != text.data() + text.size())
    throw Error(ErrorCode::Parse, std::string(text), "not a number");
  return x;
}

namespace detail {

inline std::string xml_escape(std::string_view s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      case '\'': out += "&apos;"; break;
      default: out.push_back(c);
    }
  }
  return out;
}

inline std::string dot_quote(std::string_view s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// GraphML

inline void write_graphml(const WeightedGraph& g, const std::string& name, std::ostream& out) {
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<graphml xmlns=\"http://graphml.graphdrawing.org/xmlns\">\n"
      << "  <key id=\"isolated\" for=\"node\" attr.name=\"isolated\" attr.type=\"boolean\"/>\n"
      << "  <key id=\"weight\" for=\"edge\" attr.name=\"weight\" attr.type=\"double\"/>\n"
      << "  <graph id=\"" << detail::xml_escape(name) << "\" edgedefault=\"undirected\">\n";
  for (const auto& v : g.nodes())
    out << "    <node id=\"" << detail::xml_escape(v) << "\"><data key=\"isolated\">"
        << (g.is_isolated(v) ? "true" : "false") << "</data></node>\n";
  for (const auto& [k, w] : g.edges())
    out << "    <edge source=\"" << detail::xml_escape(k.first) << "\" target=\""
        << detail::xml_escape(k.second) << "\"><data key=\"weight\">" << format_double(w)
        << "</data></edge>\n";
  out << "  </graph>\n</graphml>\n";
}

inline WeightedGraph read_graphml(std::istream& in) {
  namespace pt = boost::property_tree;
  pt::ptree tree;
  try {
    pt::read_xml(in, tree);
  } catch (const pt::xml_parser_error& e) {
    throw Error(ErrorCode::Parse, "", std::string("GraphML: ") + e.what());
  }
  WeightedGraph g;
  const auto graph = tree.get_child_optional("graphml.graph");
  if (!graph) throw Error(ErrorCode::Parse, "", "GraphML: no <graph> element");
  for (const auto& [tag, child] : *graph) {
    if (tag == "node") {
      g.add_node(child.get<std::string>("<xmlattr>.id"));
    } else if (tag == "edge") {
      double weight = 1.0;
      for (const auto& [dtag, data] : child)
        if (dtag == "data" && data.get<std::string>("<xmlattr>.key", "") == "weight")
          weight = parse_double(data.get_value<std::string>());
      g.set_weight(child.get<std::string>("<xmlattr>.source"), child.get<std::string>("<xmlattr>.target"),
                   weight);
    }
  }
  return g;
}

// ---------------------------------------------------------------------------
// DOT

inline void write_dot(const WeightedGraph& g, const std::string& name, std::ostream& out) {
  out << "graph " << detail::dot_quote(name) << " {\n";
  for (const auto& v : g.nodes())
    out << "  " << detail::dot_quote(v) << " [isolated=" << (g.is_isolated(v) ? "true" : "false") << "];\n";
  for (const auto& [k, w] : g.edges())
    out << "  " << detail::dot_quote(k.first) << " -- " << detail::dot_quote(k.second)
        << " [weight=" << format_double(w) << "];\n";
  out << "}\n";
}

namespace detail {

// Tokens: quoted strings, bare identifiers/numerals, "--", "->" and single
// punctuation characters. Comments are skipped.
class DotLexer {
 public:
  explicit DotLexer(std::string text) : text_(std::move(text)) {}

  struct Token {
    std::string text;
    bool quoted = false;
  };

  std::optional<Token> next() {
    skip();
    if (pos_ >= text_.size()) return std::nullopt;
    const char c = text_[pos_];
    if (c == '"') {
      std::string out;
      ++pos_;
      while (pos_ < text_.size() && text_[pos_] != '"') {
        if (text_[pos_] == '\\' && pos_ + 1 < text_.size()) ++pos_;
        out.push_back(text_[pos_++]);
      }
      if (pos_ >= text_.size()) throw Error(ErrorCode::Parse, "", "DOT: unterminated string");
      ++pos_;
      return Token{out, true};
    }
    if (text_.compare(pos_, 2, "--") == 0 || text_.compare(pos_, 2, "->") == 0) {
      pos_ += 2;
      return Token{text_.substr(pos_ - 2, 2), false};
    }
    if (std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.' || c == '-' ||
        static_cast<unsigned char>(c) >= 0x80) {
      const std::size_t start = pos_;
      while (pos_ < text_.size()) {
        const char d = text_[pos_];
        if (!(std::isalnum(static_cast<unsigned char>(d)) || d == '_' || d == '.' ||
              static_cast<unsigned char>(d) >= 0x80 || (d == '-' && text_.compare(pos_, 2, "--") != 0 &&
                                                        text_.compare(pos_, 2, "->") != 0)))
          break;
        ++pos_;
      }
      return Token{text_.substr(start, pos_ - start), false};
    }
    ++pos_;
    return Token{std::string(1, c), false};
  }

 private:
  void skip() {
    while (pos_ < text_.size()) {
      if (std::isspace(static_cast<unsigned char>(text_[pos_]))) {
        ++pos_;
      } else if (text_.compare(pos_, 2, "//") == 0 || text_[pos_] == '#') {
        while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
      } else if (text_.compare(pos_, 2, "/*") == 0) {
        const auto end = text_.find("*/", pos_ + 2);
        pos_ = end == std::string::npos ? text_.size() : end + 2;
      } else {
        break;
      }
    }
  }

  std::string text_;
  std::size_t pos_ = 0;
};

}  // namespace detail

// Reads the subset of DOT that write_dot produces: node statements and
// single-edge statements with optional [key=value, ...] attribute lists.
inline WeightedGraph read_dot(std::istream& in) {
  std::stringstream buf;
  buf << in.rdbuf();
  detail::DotLexer lex(buf.str());
  auto expect = [&](std::string_view what) {
    auto t = lex.next();
    if (!t || t->text != what)
      throw Error(ErrorCode::Parse, "", "DOT: expected '" + std::string(what) + "'");
  };
  auto t = lex.next();
  if (t && t->text == "strict") t = lex.next();
  if (!t || t->text != "graph") throw Error(ErrorCode::Parse, "", "DOT: expected 'graph'");
  t = lex.next();
  if (t && t->text != "{") expect("{");
  // Semicolons between statements are optional, so one token of lookahead
  // may need to go back.
  std::optional<detail::DotLexer::Token> pending;
  auto take = [&] {
    if (!pending) return lex.next();
    auto t = pending;
    pending.reset();
    return t;
  };
  WeightedGraph g;
  while (true) {
    auto first = take();
    if (!first) throw Error(ErrorCode::Parse, "", "DOT: missing '}'");
    if (first->text == "}") break;
    if (first->text == ";") continue;
    auto tok = lex.next();
    if (!tok) throw Error(ErrorCode::Parse, "", "DOT: truncated statement");
    std::optional<std::string> second;
    if (tok->text == "--") {
      auto s = lex.next();
      if (!s) throw Error(ErrorCode::Parse, "", "DOT: edge without target");
      second = s->text;
      tok = lex.next();
    } else if (tok->text == "->") {
      throw Error(ErrorCode::Parse, "", "DOT: directed edges are not supported");
    }
    double weight = 1.0;
    if (tok && tok->text == "[") {
      while (true) {
        auto key = lex.next();
        if (!key) throw Error(ErrorCode::Parse, "", "DOT: unterminated attribute list");
        if (key->text == "]") break;
        if (key->text == ",") continue;
        expect("=");
        auto value = lex.next();
        if (!value) throw Error(ErrorCode::Parse, "", "DOT: attribute without value");
        if (key->text == "weight") weight = parse_double(value->text);
      }
      tok = lex.next();
    }
    if (second)
      g.set_weight(first->text, *second, weight);
    else
      g.add_node(first->text);
    if (!tok) throw Error(ErrorCode::Parse, "", "DOT: missing '}'");
    if (tok->text == "}") break;
    if (tok->text != ";") pending = tok;
  }
  return g;
}

// ---------------------------------------------------------------------------
// CSV and JSON

inline void write_nodes_csv(const WeightedGraph& g, std::ostream& out) {
  out << "id,isolated\n";
  for (const auto& v : g.nodes())
    out << detail::csv_escape(v) << ',' << (g.is_isolated(v) ? "true" : "false") << '\n';
}

inline void write_edges_csv(const WeightedGraph& g, std::ostream& out) {
  out << "source,target,weight\n";
  for (const auto& [k, w] : g.edges())
    out << detail::csv_escape(k.first) << ',' << detail::csv_escape(k.second) << ',' << format_double(w)
        << '\n';
}

inline WeightedGraph read_graph_csv(std::istream& nodes, std::istream& edges) {
  WeightedGraph g;
  detail::CsvReader nr(nodes);
  nr.next();  // header
  while (auto row = nr.next())
    if (!row->fields.empty() && !row->fields[0].empty()) g.add_node(row->fields[0]);
  detail::CsvReader er(edges);
  er.next();
  while (auto row = er.next()) {
    if (row->fields.size() < 3) continue;
    g.set_weight(row->fields[0], row->fields[1], parse_double(row->fields[2]));
  }
  return g;
}

inline nlohmann::json graph_json(const WeightedGraph& g, const std::string& name,
                                 const std::string& reading_id) {
  nlohmann::json nodes = nlohmann::json::array();
  for (const auto& v : g.nodes()) nodes.push_back({{"id", v}, {"isolated", g.is_isolated(v)}});
  nlohmann::json edges = nlohmann::json::array();
  for (const auto& [k, w] : g.edges())
    edges.push_back({{"source", k.first}, {"target", k.second}, {"weight", w}});
  return {{"network", name}, {"reading_id", reading_id}, {"nodes", nodes}, {"edges", edges}};
}

inline WeightedGraph read_graph_json(std::istream& in) {
  try {
    const auto j = nlohmann::json::parse(in);
    WeightedGraph g;
    for (const auto& n : j.at("nodes")) g.add_node(n.at("id").get<std::string>());
    for (const auto& e : j.at("edges"))
      g.set_weight(e.at("source").get<std::string>(), e.at("target").get<std::string>(),
                   e.at("weight").get<double>());
    return g;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::Parse, "", std::string("graph JSON: ") + e.what());
  }
}

}  // namespace aicnet
