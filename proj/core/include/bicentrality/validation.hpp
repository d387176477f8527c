#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "bicentrality/relation.hpp"
#include "bicentrality/transform.hpp"

namespace bicentrality {

enum class ViolationCode {
  kZeroRow,               // a B-item related to nothing
  kZeroColumn,            // an A-item related to nothing
  kTransformDomain,       // phi undefined on some entry of W
  kProductReducible,      // W W' is not irreducible
  kReverseProductReducible,  // W' W is not irreducible
};

std::string_view violation_code_name(ViolationCode code) noexcept;

struct Violation {
  ViolationCode code;
  std::string message;
};

/// Outcome of checking a relation and transform against the existence
/// conditions for a bicentrality pair: either W is entrywise positive, or
/// both W W' and W' W are nonnegative irreducible.
struct ValidationReport {
  bool all_positive = false;
  std::vector<std::size_t> zero_rows;
  std::vector<std::size_t> zero_columns;
  /// Empty when W' could not be formed.
  std::optional<bool> product_irreducible;
  std::optional<bool> reverse_product_irreducible;
  std::vector<Violation> violations;

  bool ok() const noexcept { return violations.empty(); }
  /// All violation messages joined with "; ".
  std::string summary() const;
};

ValidationReport validate(const WeightRelation& rel,
                          const ReverseTransform& phi);

}  // namespace bicentrality
