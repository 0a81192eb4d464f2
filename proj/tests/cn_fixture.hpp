#pragma once

// Four-document reading with hand-counted noun occurrences, shared by the
// unit tests and the acceptance runner.

#include <cmath>
#include <string>
#include <vector>

#include "aicnet/corpus.hpp"
#include "aicnet/textpipe.hpp"
#include "support.hpp"

namespace cn_fixture {

inline constexpr const char* kReading = "h";
inline const std::vector<std::string> kDocs = {"d1", "d2", "d3", "d4"};
inline const std::vector<std::string> kAuthors = {"A", "B", "C", "A"};

inline const std::vector<std::string> kBodies = {
    "The rhythm and rhythms, rhythm rhythm Rhythm. Gesture gestures gesture, space space; tempo, audience, we move.",
    "Gesture and gestures in space with memories, memory, tempo, the audience; ballet ballets.",
    "Ritual rituals ritual ritual: memory memories, space, tempo, audience audiences audience.",
    "Costume costumes costume costume costume costumes; ritual, memory, space, tempo tempos.",
};

struct Row {
  std::string lemma;
  std::vector<std::size_t> tf;  // per document

  std::size_t total() const {
    std::size_t n = 0;
    for (auto x : tf) n += x;
    return n;
  }
  std::size_t df() const {
    std::size_t n = 0;
    for (auto x : tf) n += x > 0;
    return n;
  }
  double score(std::size_t d) const { return tf[d] == 0 ? 0.0 : tf[d] * std::log(4.0 / df()); }
};

// Read off the bodies above by hand.
inline std::vector<Row> counts() {
  return {{"rhythm", {5, 0, 0, 0}},   {"gesture", {3, 2, 0, 0}}, {"space", {2, 1, 1, 1}},
          {"memory", {0, 2, 2, 1}},   {"ritual", {0, 0, 4, 1}},  {"tempo", {1, 1, 1, 2}},
          {"costume", {0, 0, 0, 6}},  {"audience", {1, 1, 3, 0}}, {"ballet", {0, 2, 0, 0}}};
}

inline aicnet::Corpus corpus() {
  testing_support::Fixture f;
  f.quote(kReading, "hq", "A passage about ritual and rhythm.");
  for (std::size_t d = 0; d < kDocs.size(); ++d) f.note(kReading, kDocs[d], kAuthors[d], "hq", kBodies[d]);
  return f.corpus();
}

// Under (5, 5, 70): space, tempo, memory, audience and gesture are dropped
// (max scores 0, 0, 2 ln(4/3), 3 ln(4/3), 3 ln 2); costume, rhythm and
// ritual survive.
inline std::vector<aicnet::SelectedWord> expected_default() {
  return {{"costume", "A", 6 * std::log(4.0)},
          {"rhythm", "A", 5 * std::log(4.0)},
          {"ritual", "C", 4 * std::log(2.0)},
          {"ritual", "A", 1 * std::log(2.0)}};
}

}  // namespace cn_fixture
