#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "bicentrality/centrality.hpp"
#include "bicentrality/matrix.hpp"
#include "bicentrality/relation.hpp"
#include "bicentrality/transform.hpp"
#include "bicentrality/validation.hpp"

namespace bicentrality::io {

// Input formats
// -------------
// Matrix CSV: the first row holds the A-labels (cell (0,0) is ignored), each
// following row is a B-label followed by one weight per A-label. Weights are
// nonnegative decimals or exact fractions "p/q"; an empty cell is 0. Fields
// may be double-quoted. LF and CRLF line endings are accepted; blank lines
// are skipped.
//
// Edge list: one "a_label<TAB>b_label<TAB>weight" record per line with a
// positive weight. Labels are numbered in order of first appearance and
// unlisted pairs get weight 0.
//
// All readers throw ParseError (carrying 1-based line and column) on
// malformed input. Its code() is kParseError, or kDuplicateLabel,
// kNegativeWeight, kDuplicateEdge, kNonPositiveWeight for those specific
// faults. Empty input throws Error(kEmptyRelation).

/// Parses one weight cell: decimal, "p/q", or empty (0).
double parse_weight(std::string_view cell, std::size_t line,
                    std::size_t column);

WeightRelation read_matrix_csv(std::string_view text);
WeightRelation read_edge_list(std::string_view text);

struct LabeledSquareMatrix {
  std::vector<std::string> labels;
  Matrix matrix;
};

/// Matrix CSV whose row labels repeat the column labels in the same order;
/// entry (i, j) is the weight of the edge j -> i.
LabeledSquareMatrix read_square_matrix_csv(std::string_view text);

/// "weight<TAB>phi(weight)" lines, as written by write_phi_table.
ReverseTransform read_phi_table(std::string_view text);

/// "label<TAB>value" lines naming every A-label exactly once. Returns the
/// values in `a_labels` order, unnormalized.
Vector read_target(std::string_view text,
                   const std::vector<std::string>& a_labels);

// Output formats
// --------------

enum class ReportFormat { kJson, kTsv };

/// Rounds x to 12 significant digits, the precision used in reports.
double round_to_report_precision(double x);

/// JSON object with keys a, b (arrays of {label, score, rank, tied}),
/// lambda, mu, rho, alpha, beta, iterations, final_residual, rate_estimate
/// and warnings (array of {code, message, side}); or, for TSV, the two
/// ranked tables under a "side rank label score tied" header.
std::string write_nebs_report(const centrality::NebsResult& result,
                              const centrality::RatingTable& a_table,
                              const centrality::RatingTable& b_table,
                              ReportFormat format);

/// As write_nebs_report with a single "c" table and keys eigenvalue and
/// lambda (= 1 / eigenvalue).
std::string write_necs_report(const centrality::NecsResult& result,
                              const centrality::RatingTable& c_table,
                              ReportFormat format);

std::string write_baseline_report(const centrality::RatingTable& a_table,
                                  const centrality::RatingTable& b_table,
                                  ReportFormat format);

std::string write_validation_report(
    const ValidationReport& report,
    const std::vector<centrality::Warning>& warnings, ReportFormat format);

/// Matrix CSV with full round-trip precision.
std::string write_matrix_csv(const std::vector<std::string>& row_labels,
                             const std::vector<std::string>& column_labels,
                             const Matrix& m);

/// Requires a Table transform; throws Error(kInvalidArgument) otherwise.
std::string write_phi_table(const ReverseTransform& phi);

}  // namespace bicentrality::io
