#include <charconv>
#include <cmath>
#include <map>
#include <unordered_map>
#include <unordered_set>

#include "bicentrality/errors.hpp"
#include "bicentrality/io.hpp"

namespace bicentrality::io {
namespace {

struct Line {
  std::size_t number;  // 1-based
  std::string_view text;
};

std::string_view trim(std::string_view s) {
  const auto is_space = [](char c) { return c == ' ' || c == '\t'; };
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return s;
}

// Non-blank lines with any trailing CR removed.
std::vector<Line> split_lines(std::string_view text) {
  std::vector<Line> lines;
  std::size_t number = 0;
  while (!text.empty()) {
    ++number;
    const std::size_t end = text.find('\n');
    std::string_view line = text.substr(0, end);
    text = end == std::string_view::npos ? std::string_view{}
                                         : text.substr(end + 1);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (!trim(line).empty()) lines.push_back({number, line});
  }
  return lines;
}

struct Field {
  std::size_t column;  // 1-based field index
  std::string value;
};

// Comma-separated fields; a field may be wrapped in double quotes, with ""
// standing for a literal quote.
std::vector<Field> split_csv(const Line& line) {
  std::vector<Field> fields;
  std::string_view rest = line.text;
  std::size_t column = 1;
  while (true) {
    std::string value;
    const std::string_view lead = trim(rest);
    if (!lead.empty() && lead.front() == '"') {
      std::size_t i = 1;
      bool closed = false;
      for (; i < lead.size(); ++i) {
        if (lead[i] == '"') {
          if (i + 1 < lead.size() && lead[i + 1] == '"') {
            value += '"';
            ++i;
          } else {
            closed = true;
            ++i;
            break;
          }
        } else {
          value += lead[i];
        }
      }
      if (!closed) {
        throw ParseError(line.number, column, "unterminated quoted field");
      }
      std::string_view after = trim(lead.substr(i));
      if (!after.empty() && after.front() != ',') {
        throw ParseError(line.number, column,
                         "unexpected text after quoted field");
      }
      fields.push_back({column, std::move(value)});
      if (after.empty()) break;
      rest = after.substr(1);
    } else {
      const std::size_t comma = rest.find(',');
      fields.push_back({column, std::string(trim(rest.substr(0, comma)))});
      if (comma == std::string_view::npos) break;
      rest = rest.substr(comma + 1);
    }
    ++column;
  }
  return fields;
}

std::vector<std::string_view> split_tabs(std::string_view text) {
  std::vector<std::string_view> out;
  while (true) {
    const std::size_t tab = text.find('\t');
    out.push_back(text.substr(0, tab));
    if (tab == std::string_view::npos) break;
    text = text.substr(tab + 1);
  }
  return out;
}

double parse_decimal(std::string_view s, std::size_t line, std::size_t column) {
  if (s.empty()) throw ParseError(line, column, "missing number");
  if (s.front() == '+') s.remove_prefix(1);
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc{} || ptr != s.data() + s.size()) {
    throw ParseError(line, column, "'" + std::string(s) + "' is not a number");
  }
  if (!std::isfinite(value)) {
    throw ParseError(line, column, "weight must be finite");
  }
  return value;
}

}  // namespace

double parse_weight(std::string_view cell, std::size_t line,
                    std::size_t column) {
  cell = trim(cell);
  if (cell.empty()) return 0.0;
  double value = 0.0;
  const std::size_t slash = cell.find('/');
  if (slash == std::string_view::npos) {
    value = parse_decimal(cell, line, column);
  } else {
    const double num = parse_decimal(trim(cell.substr(0, slash)), line, column);
    const double den = parse_decimal(trim(cell.substr(slash + 1)), line, column);
    if (den == 0.0) throw ParseError(line, column, "zero denominator");
    value = num / den;
  }
  if (value < 0.0) {
    throw ParseError(line, column, "negative weight '" + std::string(cell) + "'",
                     ErrorCode::kNegativeWeight);
  }
  return value == 0.0 ? 0.0 : value;  // folds -0
}

WeightRelation read_matrix_csv(std::string_view text) {
  const std::vector<Line> lines = split_lines(text);
  if (lines.empty()) {
    throw Error(ErrorCode::kEmptyRelation, "matrix file is empty");
  }

  const std::vector<Field> header = split_csv(lines.front());
  if (header.size() < 2) {
    throw ParseError(lines.front().number, 1,
                     "header needs at least one A-label after the corner cell");
  }
  std::vector<std::string> a_labels;
  std::unordered_set<std::string> seen;
  for (std::size_t c = 1; c < header.size(); ++c) {
    if (header[c].value.empty()) {
      throw ParseError(lines.front().number, header[c].column, "empty A-label");
    }
    if (!seen.insert(header[c].value).second) {
      throw ParseError(lines.front().number, header[c].column,
                       "duplicate A-label '" + header[c].value + "'",
                       ErrorCode::kDuplicateLabel);
    }
    a_labels.push_back(header[c].value);
  }
  const std::size_t n = a_labels.size();
  if (lines.size() < 2) {
    throw Error(ErrorCode::kEmptyRelation, "matrix file has no B-rows");
  }

  std::vector<std::string> b_labels;
  seen.clear();
  Matrix weights(lines.size() - 1, n);
  for (std::size_t r = 1; r < lines.size(); ++r) {
    const Line& line = lines[r];
    const std::vector<Field> fields = split_csv(line);
    if (fields.size() != n + 1) {
      throw ParseError(line.number, std::min(fields.size(), n + 1),
                       "expected " + std::to_string(n + 1) + " fields, got " +
                           std::to_string(fields.size()));
    }
    if (fields[0].value.empty()) {
      throw ParseError(line.number, 1, "empty B-label");
    }
    if (!seen.insert(fields[0].value).second) {
      throw ParseError(line.number, 1,
                       "duplicate B-label '" + fields[0].value + "'",
                       ErrorCode::kDuplicateLabel);
    }
    b_labels.push_back(fields[0].value);
    for (std::size_t c = 1; c <= n; ++c) {
      weights(r - 1, c - 1) =
          parse_weight(fields[c].value, line.number, fields[c].column);
    }
  }
  return WeightRelation(std::move(a_labels), std::move(b_labels),
                        std::move(weights));
}

WeightRelation read_edge_list(std::string_view text) {
  const std::vector<Line> lines = split_lines(text);
  if (lines.empty()) {
    throw Error(ErrorCode::kEmptyRelation, "edge list is empty");
  }

  std::vector<std::string> a_labels;
  std::vector<std::string> b_labels;
  std::unordered_map<std::string, std::size_t> a_index;
  std::unordered_map<std::string, std::size_t> b_index;
  std::map<std::pair<std::size_t, std::size_t>, double> edges;

  for (const Line& line : lines) {
    const auto fields = split_tabs(line.text);
    if (fields.size() != 3) {
      throw ParseError(line.number, std::min<std::size_t>(fields.size(), 4),
                       "expected a_label<TAB>b_label<TAB>weight");
    }
    const std::string a(trim(fields[0]));
    const std::string b(trim(fields[1]));
    if (a.empty()) throw ParseError(line.number, 1, "empty A-label");
    if (b.empty()) throw ParseError(line.number, 2, "empty B-label");
    const double weight = parse_weight(fields[2], line.number, 3);
    if (!(weight > 0.0)) {
      throw ParseError(line.number, 3, "edge weights must be positive",
                       ErrorCode::kNonPositiveWeight);
    }
    const auto [ai, a_new] = a_index.try_emplace(a, a_labels.size());
    if (a_new) a_labels.push_back(a);
    const auto [bi, b_new] = b_index.try_emplace(b, b_labels.size());
    if (b_new) b_labels.push_back(b);
    if (!edges.emplace(std::pair{ai->second, bi->second}, weight).second) {
      throw ParseError(line.number, 1,
                       "duplicate edge (" + a + ", " + b + ")",
                       ErrorCode::kDuplicateEdge);
    }
  }

  Matrix weights(b_labels.size(), a_labels.size());
  for (const auto& [key, weight] : edges) weights(key.second, key.first) = weight;
  return WeightRelation(std::move(a_labels), std::move(b_labels),
                        std::move(weights));
}

LabeledSquareMatrix read_square_matrix_csv(std::string_view text) {
  WeightRelation rel = read_matrix_csv(text);
  if (rel.a_labels() != rel.b_labels()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "adjacency CSV must list the same labels, in the same order, "
                "on both axes");
  }
  return {rel.a_labels(), rel.weights()};
}

ReverseTransform read_phi_table(std::string_view text) {
  std::map<double, double> values;
  for (const Line& line : split_lines(text)) {
    const auto fields = split_tabs(line.text);
    if (fields.size() != 2) {
      throw ParseError(line.number, 1, "expected weight<TAB>value");
    }
    const double key = parse_weight(fields[0], line.number, 1);
    const double value = parse_weight(fields[1], line.number, 2);
    if (!(key > 0.0) || !(value > 0.0)) {
      throw ParseError(line.number, key > 0.0 ? 2 : 1,
                       "table entries must be positive",
                       ErrorCode::kNonPositiveWeight);
    }
    if (!values.emplace(key, value).second) {
      throw ParseError(line.number, 1, "duplicate table key");
    }
  }
  if (values.empty()) {
    throw Error(ErrorCode::kEmptyRelation, "transform table is empty");
  }
  return ReverseTransform::table(std::move(values));
}

Vector read_target(std::string_view text,
                   const std::vector<std::string>& a_labels) {
  std::unordered_map<std::string, std::size_t> index;
  for (std::size_t j = 0; j < a_labels.size(); ++j) index[a_labels[j]] = j;
  Vector target(a_labels.size(), 0.0);
  std::vector<char> filled(a_labels.size(), 0);
  for (const Line& line : split_lines(text)) {
    const auto fields = split_tabs(line.text);
    if (fields.size() != 2) {
      throw ParseError(line.number, 1, "expected label<TAB>value");
    }
    const std::string label(trim(fields[0]));
    const auto it = index.find(label);
    if (it == index.end()) {
      throw ParseError(line.number, 1, "unknown A-label '" + label + "'");
    }
    if (filled[it->second]) {
      throw ParseError(line.number, 1, "A-label '" + label + "' repeated",
                       ErrorCode::kDuplicateLabel);
    }
    filled[it->second] = 1;
    target[it->second] = parse_weight(fields[1], line.number, 2);
  }
  for (std::size_t j = 0; j < a_labels.size(); ++j) {
    if (!filled[j]) {
      throw Error(ErrorCode::kDimensionMismatch,
                  "target is missing A-label '" + a_labels[j] + "'");
    }
  }
  return target;
}

}  // namespace bicentrality::io
