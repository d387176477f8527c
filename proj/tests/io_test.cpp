#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <sstream>

#include "bicentrality/errors.hpp"
#include "bicentrality/io.hpp"
#include "json.hpp"
#include "support/test_support.hpp"

namespace bicentrality::io {
namespace {

using centrality::rank;

const char* const kExampleCsv = ",a1,a2\nb1,2,3\nb2,2,1\n";
const char* const kExampleEdges = "a1\tb1\t2\na1\tb2\t2\na2\tb1\t3\na2\tb2\t1\n";

template <class F>
ErrorCode parse_code(F&& f, std::size_t* line = nullptr) {
  try {
    f();
  } catch (const ParseError& e) {
    if (line) *line = e.line();
    return e.code();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "expected an Error";
  return ErrorCode::kInvalidArgument;
}

TEST(ReadMatrixCsv, WorkerTaskExample) {
  const WeightRelation rel = read_matrix_csv(kExampleCsv);
  EXPECT_EQ(rel.a_labels(), (std::vector<std::string>{"a1", "a2"}));
  EXPECT_EQ(rel.b_labels(), (std::vector<std::string>{"b1", "b2"}));
  EXPECT_EQ(rel.weights(), (Matrix{{2, 3}, {2, 1}}));
}

TEST(ReadMatrixCsv, SingleCell) {
  const WeightRelation rel = read_matrix_csv("x,a\nb,5\n");
  EXPECT_EQ(rel.weights(), Matrix{{5}});
}

TEST(ReadMatrixCsv, FractionsEmptyCellsCrlfAndQuotes) {
  const WeightRelation rel =
      read_matrix_csv(",\"a,1\",a2\r\n\r\nb1,4/3,\r\nb2, 1.5e1 ,1/3\r\n");
  EXPECT_EQ(rel.a_labels()[0], "a,1");
  EXPECT_EQ(rel.weights()(0, 0), 4.0 / 3.0);
  EXPECT_EQ(rel.weights()(0, 1), 0.0);
  EXPECT_EQ(rel.weights()(1, 0), 15.0);
  EXPECT_EQ(rel.weights()(1, 1), 1.0 / 3.0);
}

TEST(ReadMatrixCsv, Errors) {
  std::size_t line = 0;
  EXPECT_EQ(parse_code([] { read_matrix_csv(",a1\nb1,-1\n"); }, &line),
            ErrorCode::kNegativeWeight);
  EXPECT_EQ(line, 2u);
  EXPECT_EQ(parse_code([] { read_matrix_csv(",a1,a1\nb1,1,2\n"); }),
            ErrorCode::kDuplicateLabel);
  EXPECT_EQ(parse_code([] { read_matrix_csv(",a1\nb1,1\nb1,2\n"); }),
            ErrorCode::kDuplicateLabel);
  EXPECT_EQ(parse_code([] { read_matrix_csv(",a1,a2\nb1,1\n"); }),
            ErrorCode::kParseError);
  EXPECT_EQ(parse_code([] { read_matrix_csv(",a1\nb1,abc\n"); }),
            ErrorCode::kParseError);
  EXPECT_EQ(parse_code([] { read_matrix_csv(",a1\nb1,1/0\n"); }),
            ErrorCode::kParseError);
  EXPECT_EQ(parse_code([] { read_matrix_csv(",a1\nb1,inf\n"); }),
            ErrorCode::kParseError);
  EXPECT_EQ(parse_code([] { read_matrix_csv(""); }), ErrorCode::kEmptyRelation);
  EXPECT_EQ(parse_code([] { read_matrix_csv(",a1\n"); }),
            ErrorCode::kEmptyRelation);
}

TEST(ReadMatrixCsv, ErrorPositions) {
  try {
    read_matrix_csv(",a1,a2\nb1,1,2\nb2,3,x\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3u);
    EXPECT_EQ(e.column(), 3u);
  }
}

TEST(ReadEdgeList, MatchesCsvFixture) {
  EXPECT_EQ(read_edge_list(kExampleEdges), read_matrix_csv(kExampleCsv));
}

TEST(ReadEdgeList, AbsentPairsAreZero) {
  const WeightRelation rel = read_edge_list("x\tp\t1\ny\tq\t2/4\n");
  EXPECT_EQ(rel.weights(), (Matrix{{1, 0}, {0, 0.5}}));
}

TEST(ReadEdgeList, Errors) {
  EXPECT_EQ(parse_code([] { read_edge_list(""); }), ErrorCode::kEmptyRelation);
  EXPECT_EQ(parse_code([] { read_edge_list("\n\n"); }), ErrorCode::kEmptyRelation);
  EXPECT_EQ(parse_code([] { read_edge_list("a1\tb1\t1\na1\tb1\t2\n"); }),
            ErrorCode::kDuplicateEdge);
  EXPECT_EQ(parse_code([] { read_edge_list("a1\tb1\t0\n"); }),
            ErrorCode::kNonPositiveWeight);
  EXPECT_EQ(parse_code([] { read_edge_list("a1 b1 1\n"); }),
            ErrorCode::kParseError);
}

TEST(ReadEdgeList, EquivalentToCsvUpToLabelOrder) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 20; ++trial) {
    const Matrix w = testing::random_positive(rng, 1 + trial % 4, 1 + trial % 5);
    const auto rel = WeightRelation::with_default_labels(w);
    std::string csv;
    for (const auto& a : rel.a_labels()) csv += "," + a;
    csv += "\n";
    std::string edges;
    for (std::size_t i = 0; i < w.rows(); ++i) {
      csv += rel.b_labels()[i];
      for (std::size_t j = 0; j < w.cols(); ++j) {
        char buf[40];
        std::snprintf(buf, sizeof(buf), "%.17g", w(i, j));
        csv += std::string(",") + buf;
      }
      csv += "\n";
    }
    // Column-major edge order yields the same first-appearance label order.
    for (std::size_t j = 0; j < w.cols(); ++j) {
      for (std::size_t i = 0; i < w.rows(); ++i) {
        char buf[40];
        std::snprintf(buf, sizeof(buf), "%.17g", w(i, j));
        edges += rel.a_labels()[j] + "\t" + rel.b_labels()[i] + "\t" + buf + "\n";
      }
    }
    EXPECT_EQ(read_matrix_csv(csv), rel);
    EXPECT_EQ(read_edge_list(edges), rel);
  }
}

TEST(ReadSquareMatrix, RequiresMatchingLabels) {
  const auto sq = read_square_matrix_csv(",v1,v2\nv1,0,1\nv2,1,0\n");
  EXPECT_EQ(sq.matrix, (Matrix{{0, 1}, {1, 0}}));
  EXPECT_EQ(parse_code([] { read_square_matrix_csv(",v1,v2\nv2,0,1\nv1,1,0\n"); }),
            ErrorCode::kDimensionMismatch);
}

TEST(PhiTableAndMatrixCsv, RoundTrip) {
  const auto phi = ReverseTransform::table({{0.1, 1.0 / 3.0}, {2.5, 7.0}});
  EXPECT_EQ(read_phi_table(write_phi_table(phi)), phi);
  EXPECT_THROW(write_phi_table(ReverseTransform::identity()), Error);

  const Matrix m{{1.0 / 3.0, 2}, {0, 1e-7}};
  const auto rel = read_matrix_csv(write_matrix_csv({"r1", "r,2"}, {"c1", "c2"}, m));
  EXPECT_EQ(rel.weights(), m);
  EXPECT_EQ(rel.b_labels()[1], "r,2");
}

TEST(ReadTarget, OrdersByLabel) {
  EXPECT_EQ(read_target("a2\t0.8\na1\t0.6\n", {"a1", "a2"}), (Vector{0.6, 0.8}));
  EXPECT_EQ(parse_code([] { read_target("a1\t1\n", {"a1", "a2"}); }),
            ErrorCode::kDimensionMismatch);
  EXPECT_EQ(parse_code([] { read_target("zz\t1\n", {"a1"}); }),
            ErrorCode::kParseError);
}

centrality::NebsResult example_result() {
  return centrality::compute_nebs(read_matrix_csv(kExampleCsv),
                                  ReverseTransform::reciprocal());
}

TEST(WriteReport, NebsJsonSchema) {
  const auto rel = read_matrix_csv(kExampleCsv);
  const auto r = example_result();
  const auto j = nlohmann::json::parse(write_nebs_report(
      r, rank(r.a, rel.a_labels()), rank(r.b, rel.b_labels()),
      ReportFormat::kJson));
  for (const char* key : {"a", "b", "lambda", "mu", "rho", "alpha", "beta",
                          "iterations", "final_residual", "rate_estimate",
                          "warnings"}) {
    EXPECT_TRUE(j.contains(key)) << key;
  }
  EXPECT_EQ(j["b"][0]["label"], "b1");
  EXPECT_NEAR(j["b"][0]["score"].get<double>(), std::sqrt(3.0) / 2, 1e-10);
  EXPECT_EQ(j["b"][0]["rank"], 1);
  EXPECT_EQ(j["b"][0]["tied"], false);
  EXPECT_TRUE(j["warnings"].empty());
}

TEST(WriteReport, ScoresRoundTripAtTwelveDigits) {
  std::mt19937_64 rng(32);
  for (int trial = 0; trial < 10; ++trial) {
    const auto rel = WeightRelation::with_default_labels(
        testing::random_positive(rng, 3 + trial % 3, 2 + trial % 4));
    const auto r = centrality::compute_nebs(rel, ReverseTransform::reciprocal());
    const auto a_table = rank(r.a, rel.a_labels());
    const auto j = nlohmann::json::parse(write_nebs_report(
        r, a_table, rank(r.b, rel.b_labels()), ReportFormat::kJson));
    for (std::size_t p = 0; p < a_table.entries.size(); ++p) {
      const double written = j["a"][p]["score"].get<double>();
      const double expected = a_table.entries[p].score;
      char a[32], b[32];
      std::snprintf(a, sizeof(a), "%.12g", written);
      std::snprintf(b, sizeof(b), "%.12g", expected);
      EXPECT_STREQ(a, b);
    }
  }
}

TEST(WriteReport, DegeneracyWarningCode) {
  const auto rel = read_matrix_csv(",a1,a2\nb1,1,2\nb2,2,1\n");
  const auto r = centrality::compute_nebs(rel, ReverseTransform::identity());
  const auto j = nlohmann::json::parse(write_nebs_report(
      r, rank(r.a, rel.a_labels()), rank(r.b, rel.b_labels()),
      ReportFormat::kJson));
  bool found = false;
  for (const auto& w : j["warnings"]) {
    found = found || (w["code"] == "CONSTANT_B_VECTOR" && w["side"] == "b");
  }
  EXPECT_TRUE(found);
}

TEST(WriteReport, NecsJsonHasSingleTable) {
  const auto r = centrality::compute_necs(Matrix{{0, 1}, {1, 0}});
  const auto j = nlohmann::json::parse(
      write_necs_report(r, rank(r.c, {"v1", "v2"}), ReportFormat::kJson));
  EXPECT_TRUE(j.contains("c"));
  EXPECT_FALSE(j.contains("a"));
  EXPECT_FALSE(j.contains("b"));
  EXPECT_EQ(j["c"].size(), 2u);
  EXPECT_NEAR(j["eigenvalue"].get<double>(), 1.0, 1e-12);
}

TEST(WriteReport, TsvTables) {
  const auto rel = read_matrix_csv(kExampleCsv);
  const auto r = example_result();
  const std::string tsv = write_nebs_report(r, rank(r.a, rel.a_labels()),
                                            rank(r.b, rel.b_labels()),
                                            ReportFormat::kTsv);
  std::istringstream lines(tsv);
  std::string line;
  std::getline(lines, line);
  EXPECT_EQ(line, "side\trank\tlabel\tscore\ttied");
  std::vector<std::string> labels;
  std::vector<double> scores;
  while (std::getline(lines, line)) {
    std::istringstream row(line);
    std::string side, rank_str, label, score, tied;
    std::getline(row, side, '\t');
    std::getline(row, rank_str, '\t');
    std::getline(row, label, '\t');
    std::getline(row, score, '\t');
    std::getline(row, tied, '\t');
    labels.push_back(side + ":" + rank_str + ":" + label + ":" + tied);
    scores.push_back(std::stod(score));
  }
  EXPECT_EQ(labels, (std::vector<std::string>{"a:1:a2:false", "a:2:a1:false",
                                              "b:1:b1:false", "b:2:b2:false"}));
  const Vector expected{testing::example51_a()[1], testing::example51_a()[0],
                        testing::example51_b()[0], testing::example51_b()[1]};
  EXPECT_LT(testing::max_abs_diff(scores, expected), 1e-10);
}

TEST(WriteReport, ValidationJson) {
  const auto rel = read_matrix_csv(",a1,a2\nb1,1,1\nb2,0,0\n");
  const auto report = validate(rel, ReverseTransform::identity());
  const auto j = nlohmann::json::parse(
      write_validation_report(report, {}, ReportFormat::kJson));
  EXPECT_EQ(j["ok"], false);
  EXPECT_EQ(j["zero_rows"], nlohmann::json::array({1}));
  EXPECT_EQ(j["product_irreducible"], false);
}

}  // namespace
}  // namespace bicentrality::io
