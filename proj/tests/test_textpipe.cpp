#include <gtest/gtest.h>

#include <cmath>

#include "aicnet/synth.hpp"
#include "aicnet/textpipe.hpp"
#include "cn_fixture.hpp"
#include "support.hpp"

using namespace aicnet;
using testing_support::Fixture;

TEST(Tokenize, Examples) {
  EXPECT_TRUE(tokenize("").empty());
  EXPECT_EQ(tokenize("Dancers' bodies move."), (std::vector<std::string>{"dancers", "bodies", "move"}));
  EXPECT_EQ(tokenize("co-construction of ideas"),
            (std::vector<std::string>{"co-construction", "of", "ideas"}));
}

TEST(Tokenize, Boundaries) {
  EXPECT_EQ(tokenize("don't -- 'quoted' well-known-"), (std::vector<std::string>{"don't", "quoted", "well-known"}));
  EXPECT_EQ(tokenize("Ça va, ÉCOLE!"), (std::vector<std::string>{"ça", "va", "école"}));
  EXPECT_EQ(tokenize("dancer’s 2021"), (std::vector<std::string>{"dancer's", "2021"}));
}

TEST(Lemmatize, Examples) {
  EXPECT_EQ(lemmatize("dance"), "dance");
  EXPECT_EQ(lemmatize("bodies"), "body");
  EXPECT_EQ(lemmatize("children"), "child");
}

TEST(Lemmatize, SuffixRules) {
  EXPECT_EQ(lemmatize("classes"), "class");
  EXPECT_EQ(lemmatize("costumes"), "costume");
  EXPECT_EQ(lemmatize("boxes"), "box");
  EXPECT_EQ(lemmatize("ideas"), "idea");
  EXPECT_EQ(lemmatize("dancer's"), "dancer");
  EXPECT_EQ(lemmatize("dancing"), "dance");
  EXPECT_EQ(lemmatize("studied"), "study");
  EXPECT_EQ(lemmatize("analysis"), "analysis");
  EXPECT_EQ(lemmatize("criteria"), "criterion");
}

TEST(Lemmatize, LexiconIsClosed) {
  for (auto w : lexicon::kNouns) EXPECT_EQ(lemmatize(w), w) << w;
  for (auto w : lexicon::kOtherBaseForms) EXPECT_EQ(lemmatize(w), w) << w;
  for (auto w : synth_words::kFillerNouns) EXPECT_EQ(lemmatize(w), w) << w;
  for (auto w : synth_words::kDecoyNouns) EXPECT_EQ(lemmatize(w), w) << w;
}

TEST(Tagger, NounsAndStopwordsDisjoint) {
  const auto stop = default_stopwords();
  for (auto w : lexicon::kNouns) EXPECT_FALSE(stop.count(std::string(w))) << w;
  for (auto w : synth_words::kFillerNouns) EXPECT_EQ(default_tagger().tag(w), PartOfSpeech::noun) << w;
  for (auto w : synth_words::kDecoyNouns) EXPECT_EQ(default_tagger().tag(w), PartOfSpeech::noun) << w;
}

TEST(FilterNouns, Examples) {
  EXPECT_TRUE(filter_nouns({}).empty());
  std::vector<Token> tokens;
  for (const char* w : {"movement", "move"})
    tokens.push_back({w, w, default_tagger().tag(w)});
  const auto nouns = filter_nouns(tokens);
  ASSERT_EQ(nouns.size(), 1u);
  EXPECT_EQ(nouns[0].lemma, "movement");
  EXPECT_TRUE(TextPipeline().noun_lemmas("the of and it was because").empty());
}

TEST(Tagger, SuffixHeuristic) {
  const auto& t = default_tagger();
  EXPECT_EQ(t.tag("embodiment"), PartOfSpeech::noun);
  EXPECT_EQ(t.tag("playfulness"), PartOfSpeech::noun);
  EXPECT_EQ(t.tag("ment"), PartOfSpeech::other);
  EXPECT_EQ(t.tag("2021"), PartOfSpeech::other);
  EXPECT_EQ(t.tag("quickly"), PartOfSpeech::other);
}

TEST(Tfidf, Score) {
  EXPECT_EQ(tfidf_score(1, 4, 4), 0.0);
  EXPECT_NEAR(tfidf_score(2, 1, 4), 2.772588722239781, 1e-12);
  EXPECT_EQ(tfidf_score(0, 0, 4), 0.0);
  EXPECT_THROW(tfidf_score(1, 0, 4), Error);
  EXPECT_THROW(tfidf_score(1, 5, 4), Error);
}

TEST(Tfidf, FromReading) {
  Fixture f;
  f.quote("r", "q", "x")
      .note("r", "d1", "A", "q", "rhythm rhythm")
      .note("r", "d2", "B", "q", "space")
      .note("r", "d3", "C", "q", "space")
      .note("r", "d4", "D", "q", "space");
  const auto c = f.corpus();
  const auto& r = c.reading("r");
  EXPECT_NEAR(tfidf("rhythm", *r.find_artifact("d1"), r), 2 * std::log(4.0), 1e-12);
  EXPECT_EQ(tfidf("rhythm", *r.find_artifact("d2"), r), 0.0);
}

TEST(SelectCnWords, FrequencyFloor) {
  Fixture f;
  f.quote("r", "q", "x").note("r", "a", "A", "q", "rhythm rhythm space").note("r", "b", "B", "q", "space");
  EXPECT_TRUE(select_cn_words(f.corpus().reading("r"), {}).empty());
}

TEST(SelectCnWords, AuthorDedupe) {
  Fixture f;
  f.quote("r", "q", "x")
      .note("r", "a1", "A", "q", "pedagogy pedagogy pedagogy")
      .note("r", "a2", "A", "q", "our pedagogy and pedagogy")
      .note("r", "b1", "B", "q", "pedagogy pedagogy pedagogy")
      .note("r", "c1", "C", "q", "the rhythm");
  WordSelectionParams p;
  p.drop_lowest = 0;
  const auto sel = select_cn_words(f.corpus().reading("r"), p);
  ASSERT_EQ(sel.size(), 2u);
  EXPECT_EQ(sel[0].lemma, "pedagogy");
  EXPECT_EQ(sel[0].author_id, "A");
  EXPECT_EQ(sel[1].author_id, "B");
}

TEST(SelectCnWords, HandCheckDefaults) {
  const auto c = cn_fixture::corpus();
  const auto& r = c.reading(cn_fixture::kReading);
  const auto trace = select_cn_words_traced(r, {});
  // Scores against the hand count table.
  const DocumentTable table(r, TextPipeline());
  for (const auto& row : cn_fixture::counts()) {
    EXPECT_EQ(table.total_count(row.lemma), row.total()) << row.lemma;
    EXPECT_EQ(table.document_frequency(row.lemma), row.df()) << row.lemma;
    for (std::size_t d = 0; d < 4; ++d)
      EXPECT_NEAR(table.tfidf(row.lemma, cn_fixture::kDocs[d]), row.score(d), 1e-9) << row.lemma;
  }
  EXPECT_EQ(trace.candidates, (std::vector<std::string>{"audience", "costume", "gesture", "memory", "rhythm",
                                                        "ritual", "space", "tempo"}));
  EXPECT_EQ(trace.dropped, (std::vector<std::string>{"space", "tempo", "memory", "audience", "gesture"}));
  EXPECT_EQ(trace.selection, cn_fixture::expected_default());
}

TEST(SelectCnWords, HandCheckTopOne) {
  const auto c = cn_fixture::corpus();
  WordSelectionParams p;
  p.top_k = 1;
  const auto sel = select_cn_words(c.reading(cn_fixture::kReading), p);
  ASSERT_EQ(sel.size(), 1u);
  EXPECT_EQ(sel[0].lemma, "costume");
  EXPECT_EQ(sel[0].author_id, "A");
  EXPECT_NEAR(sel[0].score, 6 * std::log(4.0), 1e-9);
}

TEST(SelectCnWords, MeanAggregator) {
  const auto c = cn_fixture::corpus();
  WordSelectionParams p;
  p.aggregator = ScoreAggregator::mean;
  const auto trace = select_cn_words_traced(c.reading(cn_fixture::kReading), p);
  // memory/audience tie at 5/3 ln(4/3) and gesture/ritual at 5/2 ln 2, so
  // only the tie groups are fixed.
  EXPECT_NEAR(trace.lemma_scores.at("memory"), 5.0 / 3.0 * std::log(4.0 / 3.0), 1e-12);
  EXPECT_NEAR(trace.lemma_scores.at("audience"), 5.0 / 3.0 * std::log(4.0 / 3.0), 1e-12);
  EXPECT_NEAR(trace.lemma_scores.at("gesture"), 5.0 / 2.0 * std::log(2.0), 1e-12);
  ASSERT_EQ(trace.dropped.size(), 5u);
  EXPECT_EQ(trace.dropped[0], "space");
  EXPECT_EQ(trace.dropped[1], "tempo");
  EXPECT_EQ(std::set<std::string>(trace.dropped.begin() + 2, trace.dropped.begin() + 4),
            (std::set<std::string>{"audience", "memory"}));
  EXPECT_TRUE(trace.dropped[4] == "gesture" || trace.dropped[4] == "ritual");
}

TEST(SelectCnWords, RejectsZeroTopK) {
  WordSelectionParams p;
  p.top_k = 0;
  EXPECT_THROW(p.validate(), Error);
}

TEST(TextPipeline, CustomNounLexicon) {
  const Lemmatizer lem;
  const LexiconTagger tagger({"zorb"}, default_stopwords());
  const TextPipeline pipeline(lem, tagger, default_stopwords());
  EXPECT_EQ(pipeline.noun_lemmas("zorbs and rhythm"), (std::vector<std::string>{"zorb"}));
}
