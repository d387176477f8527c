#include "bicentrality/validation.hpp"

#include "bicentrality/errors.hpp"
#include "bicentrality/spectral.hpp"

namespace bicentrality {

std::string_view violation_code_name(ViolationCode code) noexcept {
  switch (code) {
    case ViolationCode::kZeroRow: return "ZERO_ROW";
    case ViolationCode::kZeroColumn: return "ZERO_COLUMN";
    case ViolationCode::kTransformDomain: return "TRANSFORM_DOMAIN";
    case ViolationCode::kProductReducible: return "PRODUCT_REDUCIBLE";
    case ViolationCode::kReverseProductReducible:
      return "REVERSE_PRODUCT_REDUCIBLE";
  }
  return "UNKNOWN";
}

std::string ValidationReport::summary() const {
  std::string out;
  for (const auto& v : violations) {
    if (!out.empty()) out += "; ";
    out += v.message;
  }
  return out;
}

ValidationReport validate(const WeightRelation& rel,
                          const ReverseTransform& phi) {
  const Matrix& w = rel.weights();
  ValidationReport report;
  report.all_positive = all_positive(w);

  for (std::size_t i = 0; i < w.rows(); ++i) {
    bool any = false;
    for (double x : w.row(i)) any = any || x > 0.0;
    if (!any) {
      report.zero_rows.push_back(i);
      report.violations.push_back(
          {ViolationCode::kZeroRow,
           "B-item '" + rel.b_labels()[i] + "' has no positive weight"});
    }
  }
  for (std::size_t j = 0; j < w.cols(); ++j) {
    bool any = false;
    for (std::size_t i = 0; i < w.rows(); ++i) any = any || w(i, j) > 0.0;
    if (!any) {
      report.zero_columns.push_back(j);
      report.violations.push_back(
          {ViolationCode::kZeroColumn,
           "A-item '" + rel.a_labels()[j] + "' has no positive weight"});
    }
  }

  // Reciprocal-type transforms model data where every pair is observed, so
  // a missing pair is a domain error rather than a structural zero.
  if (phi.requires_positive_input() && !report.all_positive) {
    report.violations.push_back(
        {ViolationCode::kTransformDomain,
         phi.describe() + " is undefined at zero weights; W has zero entries"});
    return report;
  }

  Matrix w_rev;
  try {
    w_rev = reverse_matrix(w, phi);
  } catch (const Error& e) {
    report.violations.push_back({ViolationCode::kTransformDomain, e.what()});
    return report;
  }

  if (report.all_positive) {
    // Positive W and positive phi give positive products.
    report.product_irreducible = true;
    report.reverse_product_irreducible = true;
    return report;
  }

  report.product_irreducible = spectral::is_irreducible(w * w_rev);
  report.reverse_product_irreducible = spectral::is_irreducible(w_rev * w);
  if (!*report.product_irreducible) {
    report.violations.push_back(
        {ViolationCode::kProductReducible, "W W' is reducible"});
  }
  if (!*report.reverse_product_irreducible) {
    report.violations.push_back(
        {ViolationCode::kReverseProductReducible, "W' W is reducible"});
  }
  return report;
}

}  // namespace bicentrality
