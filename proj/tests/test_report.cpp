#include <gtest/gtest.h>

#include <sstream>

#include "aicnet/report.hpp"

using namespace aicnet;

TEST(FormatMeasure, TwoDecimalsNoLeadingZero) {
  EXPECT_EQ(format_measure(0.5555), ".56");
  EXPECT_EQ(format_measure(1.0), "1.00");
  EXPECT_EQ(format_measure(0.0), ".00");
  EXPECT_EQ(format_measure(-0.25), "-.25");
  EXPECT_EQ(format_measure(-0.001), ".00");
  EXPECT_EQ(format_measure(0.125), ".12");  // exact binary ties go to even
  EXPECT_EQ(format_measure(std::nullopt), "na");
  EXPECT_EQ(format_fixed(23.94, 1, false), "23.9");
}

TEST(Report, NodeLayout) {
  const std::vector<NodeMetricsRow> rows = {{"101", 0.5, std::nullopt, 0.126}, {"102", 1.0, 0.0, std::nullopt}};
  std::ostringstream out;
  write_node_csv(rows, out);
  EXPECT_EQ(out.str(),
            "Student,101,102\n"
            "AN Closeness,.50,1.00\n"
            "IN Betweenness,na,.00\n"
            "CN Betweenness,.13,na\n");
  const auto j = node_json(rows);
  EXPECT_TRUE(j[0]["in_betweenness"].is_null());
  EXPECT_EQ(j[0]["cn_betweenness"].get<double>(), 0.126);
}

TEST(Report, NetworkLayout) {
  const std::vector<NetworkMetricsRow> rows = {{"3a", 0.7213, 0.375, std::nullopt}, {"6b", 1.0, 0.0, 0.5}};
  std::ostringstream out;
  write_network_csv(rows, out);
  EXPECT_EQ(out.str(),
            "Reading,AN transitivity,IN centralization,CN transitivity\n"
            "3a,.72,.38,na\n"
            "6b,1.00,.00,.50\n");
}

TEST(Report, StatsLayout) {
  StatsTable t;
  t.rows = {{"3a", 27, 27, 24.5}, {"6b", 28, 23, 23.1}};
  t.posts = {27.5, 0.5};
  t.replies = {25.0, 2.0};
  t.average_words = MeanSd{23.8, 0.7};
  std::ostringstream out;
  write_stats_csv(t, out);
  EXPECT_EQ(out.str(),
            "Reading,3a,6b,Mean,SD\n"
            "Posts,27,28,27.5,0.5\n"
            "Replies,27,23,25.0,2.0\n"
            "Average words per post,24.5,23.1,23.8,0.7\n");
}

TEST(Report, ComparisonDeltas) {
  Comparison c;
  c.a = {"r1", 0.5, 0.25, std::nullopt};
  c.b = {"r2", 0.75, 0.25, 0.5};
  c.node_a = {{"x", 1.0, std::nullopt, 0.5}};
  c.node_b = {{"x", 0.5, 0.0, 0.5}};
  const auto d = node_deltas(c);
  EXPECT_EQ(d[0], (NodeMetricsRow{"x", -0.5, std::nullopt, 0.0}));
  std::ostringstream out;
  write_comparison_csv(c, out);
  EXPECT_EQ(out.str(),
            "Measure,r1,r2,Delta\n"
            "AN transitivity,.50,.75,.25\n"
            "IN centralization,.25,.25,.00\n"
            "CN transitivity,na,.50,na\n"
            "\n"
            "Student,x\n"
            "AN Closeness,-.50\n"
            "IN Betweenness,na\n"
            "CN Betweenness,.00\n");
}
