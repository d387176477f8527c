#include <cstdio>
#include <cstdlib>
#include <variant>

#include "bicentrality/errors.hpp"
#include "bicentrality/io.hpp"
#include "json.hpp"

namespace bicentrality::io {
namespace {

using Json = nlohmann::ordered_json;
using centrality::RatingTable;

std::string format_significant(double x, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*g", digits, x);
  return buf;
}

Json table_json(const RatingTable& table) {
  Json rows = Json::array();
  for (const auto& e : table.entries) {
    rows.push_back({{"label", e.label},
                    {"score", round_to_report_precision(e.score)},
                    {"rank", e.rank},
                    {"tied", e.tied}});
  }
  return rows;
}

Json warnings_json(const std::vector<centrality::Warning>& warnings) {
  Json out = Json::array();
  for (const auto& w : warnings) {
    out.push_back({{"code", centrality::warning_code_name(w.code)},
                   {"message", w.message},
                   {"side", centrality::side_name(w.side)}});
  }
  return out;
}

void add_convergence(Json& j, const spectral::ConvergenceReport& report) {
  j["iterations"] = report.iterations;
  j["final_residual"] = round_to_report_precision(report.final_residual);
  j["rate_estimate"] = report.rate_estimate
                           ? Json(round_to_report_precision(*report.rate_estimate))
                           : Json(nullptr);
  j["shifted"] = report.shifted;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

std::string tsv_tables(
    std::initializer_list<std::pair<const char*, const RatingTable*>> tables) {
  std::string out = "side\trank\tlabel\tscore\ttied\n";
  for (const auto& [side, table] : tables) {
    for (const auto& e : table->entries) {
      out += side;
      out += '\t' + std::to_string(e.rank) + '\t' + e.label + '\t' +
             format_significant(e.score, 12) + '\t' +
             (e.tied ? "true" : "false") + '\n';
    }
  }
  return out;
}

std::string tsv_warnings(const std::vector<centrality::Warning>& warnings) {
  std::string out;
  for (const auto& w : warnings) {
    out += "# warning\t";
    out += centrality::warning_code_name(w.code);
    out += '\t';
    out += centrality::side_name(w.side);
    out += '\t' + w.message + '\n';
  }
  return out;
}

}  // namespace

double round_to_report_precision(double x) {
  return std::strtod(format_significant(x, 12).c_str(), nullptr);
}

std::string write_nebs_report(const centrality::NebsResult& result,
                              const RatingTable& a_table,
                              const RatingTable& b_table,
                              ReportFormat format) {
  if (format == ReportFormat::kTsv) {
    return tsv_tables({{"a", &a_table}, {"b", &b_table}}) +
           tsv_warnings(result.warnings);
  }
  Json j;
  j["a"] = table_json(a_table);
  j["b"] = table_json(b_table);
  j["lambda"] = round_to_report_precision(result.lambda);
  j["mu"] = round_to_report_precision(result.mu);
  j["rho"] = round_to_report_precision(result.rho);
  j["alpha"] = round_to_report_precision(result.alpha);
  j["beta"] = round_to_report_precision(result.beta);
  add_convergence(j, result.convergence);
  j["warnings"] = warnings_json(result.warnings);
  return dump(j);
}

std::string write_necs_report(const centrality::NecsResult& result,
                              const RatingTable& c_table,
                              ReportFormat format) {
  if (format == ReportFormat::kTsv) return tsv_tables({{"c", &c_table}});
  Json j;
  j["c"] = table_json(c_table);
  j["eigenvalue"] = round_to_report_precision(result.eigenvalue);
  j["lambda"] = round_to_report_precision(result.lambda);
  add_convergence(j, result.convergence);
  j["warnings"] = Json::array();
  return dump(j);
}

std::string write_baseline_report(const RatingTable& a_table,
                                  const RatingTable& b_table,
                                  ReportFormat format) {
  if (format == ReportFormat::kTsv) {
    return tsv_tables({{"a_bar", &a_table}, {"b_bar", &b_table}});
  }
  Json j;
  j["a_bar"] = table_json(a_table);
  j["b_bar"] = table_json(b_table);
  return dump(j);
}

std::string write_validation_report(
    const ValidationReport& report,
    const std::vector<centrality::Warning>& warnings, ReportFormat format) {
  if (format == ReportFormat::kTsv) {
    std::string out = "kind\tcode\tside\tmessage\n";
    for (const auto& v : report.violations) {
      out += "violation\t";
      out += violation_code_name(v.code);
      out += "\t-\t" + v.message + '\n';
    }
    for (const auto& w : warnings) {
      out += "warning\t";
      out += centrality::warning_code_name(w.code);
      out += '\t';
      out += centrality::side_name(w.side);
      out += '\t' + w.message + '\n';
    }
    return out;
  }
  const auto optional_bool = [](const std::optional<bool>& b) {
    return b ? Json(*b) : Json(nullptr);
  };
  Json violations = Json::array();
  for (const auto& v : report.violations) {
    violations.push_back(
        {{"code", violation_code_name(v.code)}, {"message", v.message}});
  }
  Json j;
  j["ok"] = report.ok();
  j["all_positive"] = report.all_positive;
  j["zero_rows"] = report.zero_rows;
  j["zero_columns"] = report.zero_columns;
  j["product_irreducible"] = optional_bool(report.product_irreducible);
  j["reverse_product_irreducible"] =
      optional_bool(report.reverse_product_irreducible);
  j["violations"] = std::move(violations);
  j["warnings"] = warnings_json(warnings);
  return dump(j);
}

std::string write_matrix_csv(const std::vector<std::string>& row_labels,
                             const std::vector<std::string>& column_labels,
                             const Matrix& m) {
  if (m.rows() != row_labels.size() || m.cols() != column_labels.size()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "labels do not match the matrix shape");
  }
  const auto quoted = [](const std::string& s) {
    if (s.find_first_of(",\"") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
      if (c == '"') out += '"';
      out += c;
    }
    return out + "\"";
  };
  std::string out;
  for (const auto& label : column_labels) out += "," + quoted(label);
  out += '\n';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    out += quoted(row_labels[i]);
    for (std::size_t j = 0; j < m.cols(); ++j) {
      out += "," + format_significant(m(i, j), 17);
    }
    out += '\n';
  }
  return out;
}

std::string write_phi_table(const ReverseTransform& phi) {
  const auto* table = std::get_if<ReverseTransform::Table>(&phi.kind());
  if (table == nullptr) {
    throw Error(ErrorCode::kInvalidArgument,
                "only table transforms can be written as a table");
  }
  std::string out;
  for (const auto& [key, value] : table->values) {
    out += format_significant(key, 17) + '\t' +
           format_significant(value, 17) + '\n';
  }
  return out;
}

}  // namespace bicentrality::io
