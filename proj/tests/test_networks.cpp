#include <gtest/gtest.h>

#include <cmath>

#include "aicnet/networks.hpp"
#include "cn_fixture.hpp"
#include "support.hpp"

using namespace aicnet;
using testing_support::Fixture;

namespace {

// Three students, three quotes, vectors giving sim(Q1,Q2) = .8 and
// sim(Q2,Q3) = .5.
struct ThreeQuoteExample {
  Corpus corpus;
  EmbeddingStore store;
};

ThreeQuoteExample three_quote_example() {
  Fixture f;
  f.quote("r", "Q1", "Quote one")
      .quote("r", "Q2", "Quote two")
      .quote("r", "Q3", "Quote three")
      .note("r", "a", "A", "Q1")
      .note("r", "b", "B", "Q2")
      .note("r", "c", "C", "Q3");
  EmbeddingStore s;
  s.insert("Q1", {0.8, 0.6});
  s.insert("Q2", {1.0, 0.0});
  s.insert("Q3", {0.5, -std::sqrt(0.75)});
  return {f.corpus(), s};
}

std::vector<Id> ids(const std::vector<Quote>& qs) {
  std::vector<Id> out;
  for (const auto& q : qs) out.push_back(q.id);
  return out;
}

}  // namespace

TEST(AttentionQuotes, Examples) {
  Fixture f;
  f.quote("r", "Q1", "one")
      .quote("r", "Q2", "two")
      .note("r", "a1", "A", "Q1")
      .note("r", "a2", "A", "Q1")
      .note("r", "b1", "B", "Q2")
      .reply("r", "p1", "C", "b1")
      .reply("r", "p2", "D", "p1");
  const auto c = f.corpus();
  const auto& r = c.reading("r");
  EXPECT_EQ(ids(attention_quotes("A", r, c)), std::vector<Id>{"Q1"});
  EXPECT_EQ(ids(attention_quotes("C", r, c)), std::vector<Id>{"Q2"});
  EXPECT_EQ(ids(attention_quotes("D", r, c)), std::vector<Id>{"Q2"});
  EXPECT_TRUE(attention_quotes("Z", r, c).empty());
}

TEST(BuildAn, ThreeQuoteExample) {
  const auto fx = three_quote_example();
  const auto g = build_an(fx.corpus.reading("r"), fx.corpus, fx.store);
  EXPECT_EQ(g.nodes(), (std::set<Id>{"A", "B", "C"}));
  ASSERT_EQ(g.edge_count(), 1u);
  EXPECT_NEAR(g.weight("A", "B"), 0.8, 1e-9);
  EXPECT_TRUE(g.is_isolated("C"));
  EXPECT_EQ(non_isolated_subgraph(g).nodes(), (std::set<Id>{"A", "B"}));
}

TEST(BuildAn, CommonReferencePlusSimilarPair) {
  Fixture f;
  f.quote("r", "c", "Shared passage")
      .quote("r", "x", "first")
      .quote("r", "y", "second")
      .note("r", "a1", "A", "c")
      .note("r", "a2", "A", "x")
      .note("r", "b1", "B", "c")
      .note("r", "b2", "B", "y");
  EmbeddingStore s;
  s.insert("c", {1, 0, 0});
  s.insert("x", {0, 1, 0});
  s.insert("y", {0, 0.9, std::sqrt(0.19)});
  const auto corpus = f.corpus();
  const auto g = build_an(corpus.reading("r"), corpus, s);
  EXPECT_NEAR(g.weight("A", "B"), 1.9, 1e-12);
  // Brute force over every cross pair.
  double expected = 0;
  for (const char* u : {"c", "x"})
    for (const char* v : {"c", "y"}) {
      const double sim = std::string(u) == v ? 1.0 : cosine(*s.find(u), *s.find(v));
      if (sim >= 0.8 - 1e-9) expected += sim;
    }
  EXPECT_NEAR(g.weight("A", "B"), expected, 1e-12);
}

TEST(BuildAn, IdenticalTextIsCommonReference) {
  Fixture f;
  f.quote("r", "q1", "The body remembers.").quote("r", "q2", "the  BODY remembers.").note("r", "a", "A", "q1").note(
      "r", "b", "B", "q2");
  EmbeddingStore orthogonal;
  orthogonal.insert("q1", {1, 0});
  orthogonal.insert("q2", {0, 1});
  const auto c = f.corpus();
  EXPECT_EQ(build_an(c.reading("r"), c, orthogonal).weight("A", "B"), 1.0);
  EXPECT_EQ(build_an(c.reading("r"), c, hash_embed_corpus(c)).weight("A", "B"), 1.0);
}

TEST(BuildAn, DuplicateTextsCountOnce) {
  Fixture f;
  f.quote("r", "q1", "Same").quote("r", "q2", "same").note("r", "a1", "A", "q1").note("r", "a2", "A", "q2").note(
      "r", "b", "B", "q1");
  const auto c = f.corpus();
  EXPECT_EQ(build_an(c.reading("r"), c, hash_embed_corpus(c)).weight("A", "B"), 1.0);
}

TEST(BuildAn, MissingEmbedding) {
  const auto fx = three_quote_example();
  EmbeddingStore partial;
  partial.insert("Q1", {1, 0});
  try {
    build_an(fx.corpus.reading("r"), fx.corpus, partial);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::MissingEmbedding);
  }
}

TEST(BuildIn, Examples) {
  Fixture f;
  f.quote("r", "q", "x")
      .note("r", "a1", "A", "q")
      .note("r", "b1", "B", "q")
      .reply("r", "p1", "B", "a1")
      .reply("r", "p2", "B", "a1")
      .reply("r", "p3", "A", "a1")
      .reply("r", "p4", "A", "p1");
  const auto c = f.corpus();
  const auto g = build_in(c.reading("r"), c);
  EXPECT_EQ(g.weight("A", "B"), 3.0);
  EXPECT_EQ(g.edge_count(), 1u);

  Fixture quiet;
  quiet.quote("r", "q", "x").note("r", "a1", "A", "q").note("r", "b1", "B", "q");
  const auto qc = quiet.corpus();
  const auto h = build_in(qc.reading("r"), qc);
  EXPECT_EQ(h.node_count(), 2u);
  EXPECT_EQ(h.edge_count(), 0u);
}

TEST(BuildIn, TwoRepliesWeightTwo) {
  Fixture f;
  f.quote("r", "q", "x").note("r", "a1", "A", "q").reply("r", "p1", "B", "a1").reply("r", "p2", "B", "a1");
  const auto c = f.corpus();
  EXPECT_EQ(build_in(c.reading("r"), c).weight("A", "B"), 2.0);
}

TEST(Project, Examples) {
  BipartiteGraph bg;
  bg.authors = {"A", "B"};
  bg.edges = {{"A", "x"}, {"A", "y"}, {"B", "y"}, {"B", "z"}};
  EXPECT_EQ(project(bg).weight("A", "B"), 1.0);
  bg.edges = {{"A", "x"}, {"A", "y"}, {"A", "z"}, {"B", "x"}, {"B", "y"}, {"B", "z"}};
  EXPECT_EQ(project(bg).weight("A", "B"), 3.0);
  bg.edges = {{"A", "x"}, {"B", "y"}};
  EXPECT_EQ(project(bg).edge_count(), 0u);
}

TEST(BuildCn, BipartiteFromFixture) {
  const auto c = cn_fixture::corpus();
  const auto bg = build_cn_bipartite(c.reading(cn_fixture::kReading), c, {});
  EXPECT_EQ(bg.words, (std::set<std::string>{"costume", "rhythm", "ritual"}));
  EXPECT_EQ(bg.edges.size(), 4u);
  const auto g = project(bg);
  EXPECT_EQ(g.edge_count(), 1u);
  EXPECT_EQ(g.weight("A", "C"), 1.0);
  EXPECT_TRUE(g.is_isolated("B"));
}

TEST(BuildCn, EmptySelection) {
  Fixture f;
  f.quote("r", "q", "x").note("r", "a", "A", "q", "hello there");
  const auto c = f.corpus();
  const auto bg = build_cn_bipartite(c.reading("r"), c, {});
  EXPECT_TRUE(bg.words.empty());
  EXPECT_TRUE(bg.edges.empty());
  EXPECT_EQ(bg.authors, std::set<Id>{"A"});
}

TEST(NonIsolatedSubgraph, Examples) {
  WeightedGraph g;
  g.add_node("a");
  g.add_node("b");
  EXPECT_EQ(non_isolated_subgraph(g).node_count(), 0u);
  auto star = testing_support::star_graph(3);
  star.add_node("loner");
  const auto h = non_isolated_subgraph(star);
  EXPECT_EQ(h, testing_support::star_graph(3));
  EXPECT_EQ(star.node_count(), 5u);
}

TEST(Networks, RosterScope) {
  Fixture f;
  f.quote("r1", "q1", "x").quote("r2", "q2", "y").note("r1", "a", "A", "q1").note("r2", "b", "B", "q2");
  const auto c = f.corpus();
  const auto& r1 = c.reading("r1");
  EXPECT_EQ(build_in(r1, c).nodes(), std::set<Id>{"A"});
  EXPECT_EQ(build_in(r1, c, NodeScope::roster).nodes(), (std::set<Id>{"A", "B"}));
  EXPECT_EQ(build_an(r1, c, hash_embed_corpus(c), 0.8, NodeScope::roster).nodes(), (std::set<Id>{"A", "B"}));
}

TEST(WeightedGraph, Invariants) {
  WeightedGraph g;
  EXPECT_THROW(g.add_weight("a", "a", 1.0), Error);
  EXPECT_THROW(g.add_weight("a", "b", 0.0), Error);
  g.add_weight("b", "a", 1.5);
  g.add_weight("a", "b", 0.5);
  EXPECT_EQ(g.weight("a", "b"), 2.0);
  EXPECT_EQ(g.edges().begin()->first, (WeightedGraph::EdgeKey{"a", "b"}));
  EXPECT_THROW(g.neighbors("zz"), Error);
}
