#pragma once

#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <memory>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "aicnet/corpus.hpp"
#include "aicnet/error.hpp"
#include "aicnet/export.hpp"
#include "aicnet/metrics.hpp"
#include "aicnet/networks.hpp"
#include "aicnet/report.hpp"
#include "aicnet/semantic.hpp"
#include "aicnet/synth.hpp"
#include "aicnet/textpipe.hpp"

// The `aicnet` command line. run() never touches std::cout/std::cerr
// directly so tests can capture both streams.

namespace aicnet::cli {

namespace fs = std::filesystem;

struct Options {
  std::string corpus_path;
  std::string input_format;  // empty = from extension
  std::string embeddings_path;
  std::string embedder = "auto";
  double threshold = kDefaultThreshold;
  std::size_t min_freq = 5;
  std::size_t drop_lowest = 5;
  std::size_t top_words = 70;
  std::string aggregator = "max";
  std::string stopwords_path;
  std::string noun_lexicon_path;
  std::string out_dir;
  std::vector<std::string> formats;
  std::string reading;
  std::string network = "all";
  std::string level = "both";
  std::string distance = "hops";
  bool roster_wide = false;

  std::string reading_a;
  std::string reading_b;

  std::size_t authors = 6;
  std::size_t quotes = 4;
  std::size_t blocks = 2;
  std::size_t replies = 8;
  std::size_t overlaps = 3;
  std::uint64_t seed = 1;
  std::string synth_reading = "r1";
  bool verify = false;
};

class Console {
 public:
  Console(std::ostream& out, std::ostream& err, bool color) : out(out), err(err), color_(color) {}

  void error(const std::string& message) { err << paint("31", "error:") << ' ' << message << '\n'; }
  void warn(const std::string& message) { err << paint("33", "warning:") << ' ' << message << '\n'; }

  std::ostream& out;
  std::ostream& err;

 private:
  std::string paint(const char* code, const std::string& text) const {
    return color_ ? "\x1b[" + std::string(code) + "m" + text + "\x1b[0m" : text;
  }
  bool color_;
};

namespace detail {

// Owns the lemmatizer and tagger the pipeline points at.
struct PipelineBundle {
  Lemmatizer lemmatizer;
  std::unique_ptr<LexiconTagger> tagger;
  std::unique_ptr<TextPipeline> pipeline;
};

inline std::unique_ptr<PipelineBundle> make_pipeline(const Options& o) {
  auto b = std::make_unique<PipelineBundle>();
  auto stopwords = o.stopwords_path.empty() ? default_stopwords() : load_term_list(o.stopwords_path);
  auto nouns = o.noun_lexicon_path.empty() ? default_noun_lexicon() : load_term_list(o.noun_lexicon_path);
  for (const auto& n : nouns) b->lemmatizer.add_base_form(n);
  b->tagger = std::make_unique<LexiconTagger>(nouns, stopwords);
  b->pipeline = std::make_unique<TextPipeline>(b->lemmatizer, *b->tagger, std::move(stopwords));
  return b;
}

inline WordSelectionParams word_params(const Options& o) {
  WordSelectionParams p;
  p.min_frequency = o.min_freq;
  p.drop_lowest = o.drop_lowest;
  p.top_k = o.top_words;
  p.aggregator = o.aggregator == "mean" ? ScoreAggregator::mean : ScoreAggregator::max;
  p.validate();
  return p;
}

inline NetworkParams network_params(const Options& o) {
  return {o.threshold, word_params(o), o.roster_wide ? NodeScope::roster : NodeScope::active};
}

inline PathMode path_mode(const Options& o) {
  return o.distance == "inverse-weight" ? PathMode::inverse_weight : PathMode::unweighted;
}

inline Corpus load(const Options& o) {
  if (o.input_format.empty()) return load_corpus(o.corpus_path);
  return load_corpus(o.corpus_path, o.input_format == "csv" ? CorpusFormat::csv : CorpusFormat::jsonl);
}

inline EmbeddingStore resolve_store(const Options& o, const Corpus& corpus, Console& console) {
  const bool from_file = o.embedder == "file" || (o.embedder == "auto" && !o.embeddings_path.empty());
  if (!from_file) return hash_embed_corpus(corpus);
  if (o.embeddings_path.empty())
    throw Error(ErrorCode::MissingEmbedding, "", "--embedder file needs --embeddings");
  auto loaded = load_embeddings(o.embeddings_path, corpus);
  if (!loaded.orphans.empty())
    console.warn(std::to_string(loaded.orphans.size()) + " embedding(s) for unknown quotes, e.g. " +
                 loaded.orphans.front());
  return std::move(loaded.store);
}

inline std::vector<const Reading*> selected_readings(const Options& o, const Corpus& corpus) {
  std::vector<const Reading*> out;
  if (!o.reading.empty()) {
    out.push_back(&corpus.reading(o.reading));
  } else {
    for (const auto& [id, r] : corpus.readings()) out.push_back(&r);
  }
  return out;
}

inline void write_file(const fs::path& path, const std::function<void(std::ostream&)>& body) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error(ErrorCode::Io, path.string(), "cannot open for writing");
  body(f);
  if (!f) throw Error(ErrorCode::Io, path.string(), "write failed");
}

// Table-shaped output: every requested format goes to <out>/<stem>.<ext>
// when --out is given, otherwise to stdout.
inline void emit_table(const Options& o, Console& console, const std::string& stem,
                       const std::function<void(std::ostream&)>& csv, const std::function<nlohmann::json()>& json) {
  const std::vector<std::string> formats = o.formats.empty() ? std::vector<std::string>{"csv"} : o.formats;
  for (const auto& f : formats) {
    auto body = [&](std::ostream& s) {
      if (f == "json")
        s << json().dump(2) << '\n';
      else
        csv(s);
    };
    if (o.out_dir.empty()) {
      body(console.out);
    } else {
      const fs::path path = fs::path(o.out_dir) / (stem + "." + f);
      write_file(path, body);
      console.out << path.string() << '\n';
    }
  }
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Commands

inline int cmd_validate(const Options& o, Console& console) {
  std::ifstream in(o.corpus_path, std::ios::binary);
  if (!in) throw Error(ErrorCode::Io, o.corpus_path, "cannot open corpus file");
  const auto format = o.input_format.empty() ? format_from_path(o.corpus_path)
                      : o.input_format == "csv" ? CorpusFormat::csv
                                                : CorpusFormat::jsonl;
  const auto check = check_corpus(in, format);
  if (!check.corpus) {
    for (const auto& issue : check.issues) console.error(issue.what());
    console.err << check.issues.size() << " issue(s) in " << o.corpus_path << '\n';
    return 1;
  }
  const Corpus& corpus = *check.corpus;
  if (!o.embeddings_path.empty()) {
    auto loaded = load_embeddings(o.embeddings_path, corpus);
    for (const auto& id : loaded.orphans) console.warn("embedding for unknown quote " + id);
    for (const auto& [rid, reading] : corpus.readings())
      for (const auto& [qid, q] : reading.quotes())
        if (!loaded.store.find(qid)) console.warn("no embedding for quote " + qid);
  }
  console.out << "ok: " << corpus.readings().size() << " readings, " << corpus.artifact_count()
              << " artifacts, " << corpus.authors().size() << " authors\n";
  return 0;
}

inline int cmd_stats(const Options& o, Console& console) {
  const Corpus corpus = detail::load(o);
  const auto table =
      descriptive_stats(corpus, o.reading.empty() ? std::nullopt : std::optional<Id>(o.reading));
  detail::emit_table(
      o, console, "stats", [&](std::ostream& s) { write_stats_csv(table, s); },
      [&] { return stats_json(table); });
  return 0;
}

inline int cmd_build(const Options& o, Console& console) {
  const Corpus corpus = detail::load(o);
  const auto params = detail::network_params(o);
  const auto bundle = detail::make_pipeline(o);
  const auto readings = detail::selected_readings(o, corpus);
  const bool want_an = o.network == "all" || o.network == "an";
  std::optional<EmbeddingStore> store;
  if (want_an) store = detail::resolve_store(o, corpus, console);
  const std::vector<std::string> formats = o.formats.empty() ? std::vector<std::string>{"graphml"} : o.formats;
  const fs::path dir = o.out_dir.empty() ? fs::path(".") : fs::path(o.out_dir);

  for (const Reading* r : readings) {
    std::vector<std::pair<std::string, WeightedGraph>> graphs;
    if (want_an) graphs.emplace_back("AN", build_an(*r, corpus, *store, params.threshold, params.scope));
    if (o.network == "all" || o.network == "in") graphs.emplace_back("IN", build_in(*r, corpus, params.scope));
    if (o.network == "all" || o.network == "cn")
      graphs.emplace_back("CN", build_cn(*r, corpus, params.words, *bundle->pipeline, params.scope));
    for (const auto& [net, g] : graphs) {
      std::string lower = net;
      for (auto& c : lower) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
      const std::string stem = r->id() + "_" + lower;
      const std::string name = r->id() + " " + net;
      for (const auto& f : formats) {
        std::vector<fs::path> written;
        switch (parse_graph_format(f)) {
          case GraphFormat::graphml:
            written.push_back(dir / (stem + ".graphml"));
            detail::write_file(written.back(), [&](std::ostream& s) { write_graphml(g, name, s); });
            break;
          case GraphFormat::dot:
            written.push_back(dir / (stem + ".dot"));
            detail::write_file(written.back(), [&](std::ostream& s) { write_dot(g, name, s); });
            break;
          case GraphFormat::csv:
            written.push_back(dir / (stem + "_nodes.csv"));
            detail::write_file(written.back(), [&](std::ostream& s) { write_nodes_csv(g, s); });
            written.push_back(dir / (stem + "_edges.csv"));
            detail::write_file(written.back(), [&](std::ostream& s) { write_edges_csv(g, s); });
            break;
          case GraphFormat::json:
            written.push_back(dir / (stem + ".json"));
            detail::write_file(written.back(),
                               [&](std::ostream& s) { s << graph_json(g, net, r->id()).dump(2) << '\n'; });
            break;
        }
        for (const auto& p : written) console.out << p.string() << '\n';
      }
    }
  }
  return 0;
}

inline ReadingNetworks reading_networks(const Reading& r, const Corpus& corpus, const EmbeddingStore& store,
                                        const NetworkParams& params, const TextPipeline& pipeline) {
  auto nets = build_networks(r, corpus, store, params, pipeline);
  return {r.id(), std::move(nets.an), std::move(nets.in), std::move(nets.cn)};
}

inline int cmd_metrics(const Options& o, Console& console) {
  const Corpus corpus = detail::load(o);
  const auto params = detail::network_params(o);
  const auto bundle = detail::make_pipeline(o);
  const auto store = detail::resolve_store(o, corpus, console);
  const auto mode = detail::path_mode(o);
  const bool node = o.level != "network";
  const bool network = o.level != "node";

  std::vector<ReadingNetworks> all;
  for (const Reading* r : detail::selected_readings(o, corpus))
    all.push_back(reading_networks(*r, corpus, store, params, *bundle->pipeline));
  std::map<Id, std::vector<NodeMetricsRow>> node_rows;
  if (node)
    for (const auto& rn : all)
      node_rows[rn.reading_id] = node_report(rn.an, rn.in, rn.cn,
                                             network_nodes(corpus.reading(rn.reading_id), corpus, params.scope),
                                             mode);
  const auto net_rows = network_report(all);

  if (!o.out_dir.empty()) {
    for (const auto& [rid, rows] : node_rows)
      detail::emit_table(
          o, console, "node_" + rid, [&](std::ostream& s) { write_node_csv(rows, s); },
          [&] { return nlohmann::json{{"reading_id", rid}, {"nodes", node_json(rows)}}; });
    if (network)
      detail::emit_table(
          o, console, "network", [&](std::ostream& s) { write_network_csv(net_rows, s); },
          [&] { return network_json(net_rows); });
    return 0;
  }
  auto csv = [&](std::ostream& s) {
    bool first = true;
    for (const auto& [rid, rows] : node_rows) {
      if (!first) s << '\n';
      first = false;
      s << "# Node-level measures: reading " << rid << '\n';
      write_node_csv(rows, s);
    }
    if (network) {
      if (!first) s << '\n';
      s << "# Network-level measures\n";
      write_network_csv(net_rows, s);
    }
  };
  auto json = [&] {
    nlohmann::json j = nlohmann::json::object();
    if (node) {
      j["node"] = nlohmann::json::object();
      for (const auto& [rid, rows] : node_rows) j["node"][rid] = node_json(rows);
    }
    if (network) j["network"] = network_json(net_rows);
    return j;
  };
  detail::emit_table(o, console, "metrics", csv, json);
  return 0;
}

inline int cmd_compare(const Options& o, Console& console) {
  const Corpus corpus = detail::load(o);
  const Reading& ra = corpus.reading(o.reading_a);
  const Reading& rb = corpus.reading(o.reading_b);
  const auto params = detail::network_params(o);
  const auto bundle = detail::make_pipeline(o);
  const auto store = detail::resolve_store(o, corpus, console);
  const auto mode = detail::path_mode(o);

  const auto na = reading_networks(ra, corpus, store, params, *bundle->pipeline);
  const auto nb = reading_networks(rb, corpus, store, params, *bundle->pipeline);
  const auto roster_a = network_nodes(ra, corpus, params.scope);
  const auto roster_b = network_nodes(rb, corpus, params.scope);
  std::set<Id> roster = roster_a;
  roster.insert(roster_b.begin(), roster_b.end());

  Comparison c;
  c.a = network_metrics(na);
  c.b = network_metrics(nb);
  c.node_a = node_report(na.an, na.in, na.cn, roster, mode);
  c.node_b = node_report(nb.an, nb.in, nb.cn, roster, mode);
  for (const auto& id : roster_a)
    if (!roster_b.count(id)) c.only_in_a.insert(id);
  for (const auto& id : roster_b)
    if (!roster_a.count(id)) c.only_in_b.insert(id);
  if (!c.only_in_a.empty() || !c.only_in_b.empty()) {
    std::string names;
    for (const auto* s : {&c.only_in_a, &c.only_in_b})
      for (const auto& id : *s) names += (names.empty() ? "" : " ") + id;
    console.warn("rosters differ; no deltas for authors in only one reading: " + names);
  }
  detail::emit_table(
      o, console, "compare_" + o.reading_a + "_" + o.reading_b,
      [&](std::ostream& s) { write_comparison_csv(c, s); }, [&] { return comparison_json(c); });
  return 0;
}

inline int cmd_synth(const Options& o, Console& console) {
  SynthParams params = random_params(o.seed, o.authors, o.quotes, o.blocks, o.replies, o.overlaps);
  params.reading_id = o.synth_reading;
  params.threshold = o.threshold;
  params.words = detail::word_params(o);
  const auto output = generate(params);
  const fs::path dir = o.out_dir.empty() ? fs::path(".") : fs::path(o.out_dir);
  const fs::path corpus_path = dir / "corpus.jsonl";
  const fs::path embeddings_path = dir / "embeddings.jsonl";
  const fs::path truth_path = dir / "ground_truth.json";
  detail::write_file(corpus_path, [&](std::ostream& s) { write_corpus_jsonl(output.corpus, s); });
  detail::write_file(embeddings_path, [&](std::ostream& s) { write_embeddings_jsonl(output.store, s); });
  detail::write_file(truth_path, [&](std::ostream& s) { write_ground_truth(output.truth, s); });
  for (const auto& p : {corpus_path, embeddings_path, truth_path}) console.out << p.string() << '\n';
  if (!o.verify) return 0;

  // Check the files as written, not the in-memory objects.
  const Corpus corpus = load_corpus(corpus_path);
  const EmbeddingStore store = load_embeddings(embeddings_path);
  std::ifstream tin(truth_path, std::ios::binary);
  const GroundTruth truth = parse_ground_truth(tin);
  const auto bundle = detail::make_pipeline(o);
  const auto report = verify(corpus, store, truth, detail::network_params(o), *bundle->pipeline);
  if (report.passed()) {
    console.out << "verify: passed\n";
    return 0;
  }
  for (const auto& d : report.differences)
    console.error(d.network + " " + d.source + "--" + d.target + ": expected " + format_double(d.expected) +
                  ", built " + format_double(d.actual));
  console.out << "verify: " << report.differences.size() << " difference(s)\n";
  return 2;
}

// ---------------------------------------------------------------------------
// Entry point

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, bool color = false) {
  if (std::getenv("AICNET_NO_COLOR")) color = false;
  Console console(out, err, color);
  Options o;
  CLI::App app{"Joint attention, interaction and creation networks from annotated readings", "aicnet"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "aicnet 0.1.0");

  auto corpus_arg = [&](CLI::App* sub) {
    sub->add_option("corpus", o.corpus_path, "Corpus file (.jsonl or .csv)")->required();
    sub->add_option("--input-format", o.input_format, "Corpus format if not implied by the extension")
        ->check(CLI::IsMember({"jsonl", "csv"}));
  };
  auto pipeline_opts = [&](CLI::App* sub) {
    sub->add_option("--min-freq", o.min_freq, "Minimum corpus frequency of a CN noun")->capture_default_str();
    sub->add_option("--drop-lowest", o.drop_lowest, "Number of lowest-scoring nouns removed")
        ->capture_default_str();
    sub->add_option("--top-words", o.top_words, "Number of (word, artifact) pairs kept")
        ->check(CLI::Range(std::size_t{1}, std::numeric_limits<std::size_t>::max()))
        ->capture_default_str();
    sub->add_option("--aggregator", o.aggregator, "Per-lemma score used for dropping")
        ->check(CLI::IsMember({"max", "mean"}))
        ->capture_default_str();
    sub->add_option("--stopwords", o.stopwords_path, "Stopword list, one per line");
    sub->add_option("--noun-lexicon", o.noun_lexicon_path, "Noun lexicon, one per line");
    sub->add_option("--threshold", o.threshold, "Joint-attention similarity threshold")
        ->check(CLI::Range(0.0, 1.0))
        ->capture_default_str();
  };
  auto analysis_opts = [&](CLI::App* sub) {
    pipeline_opts(sub);
    sub->add_option("--embeddings", o.embeddings_path, "Quote embeddings (JSONL or binary)");
    sub->add_option("--embedder", o.embedder, "Where quote vectors come from")
        ->check(CLI::IsMember({"auto", "file", "hash"}))
        ->capture_default_str();
    sub->add_flag("--roster-wide", o.roster_wide, "Use every corpus author as a node in every reading");
    sub->add_option("--distance", o.distance, "Path length for closeness and betweenness")
        ->check(CLI::IsMember({"hops", "inverse-weight"}))
        ->capture_default_str();
  };
  auto table_opts = [&](CLI::App* sub) {
    sub->add_option("--format", o.formats, "csv and/or json")->delimiter(',')->check(CLI::IsMember({"csv", "json"}));
    sub->add_option("--out", o.out_dir, "Write files here instead of stdout");
  };

  auto* validate = app.add_subcommand("validate", "Check a corpus (and optionally its embeddings)");
  corpus_arg(validate);
  validate->add_option("--embeddings", o.embeddings_path, "Quote embeddings to check against the corpus");

  auto* stats = app.add_subcommand("stats", "Posts, replies and average words per post");
  corpus_arg(stats);
  stats->add_option("--reading", o.reading, "Only this reading");
  table_opts(stats);

  auto* build = app.add_subcommand("build", "Write AN, IN and CN graph files");
  corpus_arg(build);
  analysis_opts(build);
  build->add_option("--reading", o.reading, "Only this reading");
  build->add_option("--network", o.network, "an, in, cn or all")
      ->check(CLI::IsMember({"an", "in", "cn", "all"}))
      ->capture_default_str();
  build->add_option("--format", o.formats, "graphml, dot, csv, json")
      ->delimiter(',')
      ->check(CLI::IsMember({"graphml", "dot", "csv", "json"}));
  build->add_option("--out", o.out_dir, "Output directory")->capture_default_str();

  auto* metrics = app.add_subcommand("metrics", "Node- and network-level measures");
  corpus_arg(metrics);
  analysis_opts(metrics);
  metrics->add_option("--reading", o.reading, "Only this reading");
  metrics->add_option("--level", o.level, "node, network or both")
      ->check(CLI::IsMember({"node", "network", "both"}))
      ->capture_default_str();
  table_opts(metrics);

  auto* compare = app.add_subcommand("compare", "Network measures and per-author deltas for two readings");
  corpus_arg(compare);
  compare->add_option("reading_a", o.reading_a, "First reading")->required();
  compare->add_option("reading_b", o.reading_b, "Second reading")->required();
  analysis_opts(compare);
  table_opts(compare);

  auto* synth = app.add_subcommand("synth", "Generate a corpus with planted AN/IN/CN structure");
  pipeline_opts(synth);
  synth->add_option("--authors", o.authors, "Number of authors")
      ->check(CLI::Range(std::size_t{2}, std::size_t{500}))
      ->capture_default_str();
  synth->add_option("--quotes", o.quotes, "Number of distinct quotes")
      ->check(CLI::Range(std::size_t{1}, std::size_t{500}))
      ->capture_default_str();
  synth->add_option("--blocks", o.blocks, "Attention blocks")->capture_default_str();
  synth->add_option("--replies", o.replies, "Reply events")->capture_default_str();
  synth->add_option("--overlaps", o.overlaps, "Author pairs sharing planted nouns")->capture_default_str();
  synth->add_option("--seed", o.seed, "Random seed")->capture_default_str();
  synth->add_option("--reading", o.synth_reading, "Reading id")->capture_default_str();
  synth->add_option("--out", o.out_dir, "Output directory")->capture_default_str();
  synth->add_flag("--verify", o.verify, "Reload the written files and check them against the ground truth");

  std::vector<std::string> argv_store{"aicnet"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_store) argv.push_back(a.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }

  try {
    if (*validate) return cmd_validate(o, console);
    if (*stats) return cmd_stats(o, console);
    if (*build) return cmd_build(o, console);
    if (*metrics) return cmd_metrics(o, console);
    if (*compare) return cmd_compare(o, console);
    if (*synth) return cmd_synth(o, console);
  } catch (const Error& e) {
    console.error(e.what());
    return is_internal(e.code()) ? 2 : 1;
  } catch (const fs::filesystem_error& e) {
    console.error(e.what());
    return 1;
  } catch (const std::exception& e) {
    console.error(std::string("internal: ") + e.what());
    return 2;
  }
  return 2;
}

}  // namespace aicnet::cli
