#pragma once

#include <map>
#include <string>
#include <variant>

#include "bicentrality/matrix.hpp"
#include "bicentrality/relation.hpp"

namespace bicentrality {

/// The map phi: R+ -> R+ that turns a weight w(a, b) into the reverse
/// weight w'(b, a).
class ReverseTransform {
 public:
  struct Identity {
    friend bool operator==(const Identity&, const Identity&) = default;
  };
  struct Reciprocal {
    friend bool operator==(const Reciprocal&, const Reciprocal&) = default;
  };
  struct Scale {
    double gamma;
    friend bool operator==(const Scale&, const Scale&) = default;
  };
  struct Power {
    double exponent;
    friend bool operator==(const Power&, const Power&) = default;
  };
  /// Lookup on exact weight values.
  struct Table {
    std::map<double, double> values;
    friend bool operator==(const Table&, const Table&) = default;
  };
  using Kind = std::variant<Identity, Reciprocal, Scale, Power, Table>;

  static ReverseTransform identity() { return ReverseTransform(Identity{}); }
  static ReverseTransform reciprocal() {
    return ReverseTransform(Reciprocal{});
  }
  /// gamma must be positive and finite.
  static ReverseTransform scale(double gamma);
  /// exponent must be nonzero and finite.
  static ReverseTransform power(double exponent);
  /// Keys must be positive, values positive and finite.
  static ReverseTransform table(std::map<double, double> values);

  const Kind& kind() const noexcept { return kind_; }

  /// Whether zero weights are outside the domain (Reciprocal, Power p < 0).
  bool requires_positive_input() const noexcept;

  /// Human-readable name, e.g. "scale:3".
  std::string describe() const;

  friend bool operator==(const ReverseTransform&,
                         const ReverseTransform&) = default;

 private:
  explicit ReverseTransform(Kind kind) : kind_(std::move(kind)) {}

  Kind kind_;
};

/// phi(x) for x > 0. Throws Error(kTransformDomain) when x is not positive
/// or a Table has no entry for x.
double apply_phi(double x, const ReverseTransform& phi);

/// The n x m reverse weight matrix W' with W'(j, i) = phi(W(i, j)) on the
/// positive support of W and 0 elsewhere.
Matrix reverse_matrix(const WeightRelation& rel, const ReverseTransform& phi);
Matrix reverse_matrix(const Matrix& weights, const ReverseTransform& phi);

}  // namespace bicentrality
