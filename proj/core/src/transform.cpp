#include "bicentrality/transform.hpp"

#include <cmath>
#include <cstdio>

#include "bicentrality/errors.hpp"

namespace bicentrality {
namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

std::string format_real(double x) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

}  // namespace

ReverseTransform ReverseTransform::scale(double gamma) {
  if (!(gamma > 0.0) || !std::isfinite(gamma)) {
    throw Error(ErrorCode::kInvalidArgument,
                "scale factor must be positive and finite");
  }
  return ReverseTransform(Scale{gamma});
}

ReverseTransform ReverseTransform::power(double exponent) {
  if (exponent == 0.0 || !std::isfinite(exponent)) {
    throw Error(ErrorCode::kInvalidArgument,
                "power exponent must be nonzero and finite");
  }
  return ReverseTransform(Power{exponent});
}

ReverseTransform ReverseTransform::table(std::map<double, double> values) {
  for (const auto& [key, value] : values) {
    if (!(key > 0.0) || !std::isfinite(key)) {
      throw Error(ErrorCode::kInvalidArgument,
                  "table keys must be positive weights");
    }
    if (!(value > 0.0) || !std::isfinite(value)) {
      throw Error(ErrorCode::kInvalidArgument,
                  "table values must be positive and finite");
    }
  }
  return ReverseTransform(Table{std::move(values)});
}

bool ReverseTransform::requires_positive_input() const noexcept {
  if (std::holds_alternative<Reciprocal>(kind_)) return true;
  if (const auto* p = std::get_if<Power>(&kind_)) return p->exponent < 0.0;
  return false;
}

std::string ReverseTransform::describe() const {
  return std::visit(
      Overloaded{
          [](const Identity&) -> std::string { return "identity"; },
          [](const Reciprocal&) -> std::string { return "reciprocal"; },
          [](const Scale& s) { return "scale:" + format_real(s.gamma); },
          [](const Power& p) { return "power:" + format_real(p.exponent); },
          [](const Table& t) {
            return "table(" + std::to_string(t.values.size()) + " entries)";
          },
      },
      kind_);
}

double apply_phi(double x, const ReverseTransform& phi) {
  if (!(x > 0.0)) {
    throw Error(ErrorCode::kTransformDomain,
                "reverse transform applied to non-positive weight " +
                    format_real(x));
  }
  const double y = std::visit(
      Overloaded{
          [x](const ReverseTransform::Identity&) { return x; },
          [x](const ReverseTransform::Reciprocal&) { return 1.0 / x; },
          [x](const ReverseTransform::Scale& s) { return s.gamma * x; },
          [x](const ReverseTransform::Power& p) {
            return std::pow(x, p.exponent);
          },
          [x](const ReverseTransform::Table& t) {
            const auto it = t.values.find(x);
            if (it == t.values.end()) {
              throw Error(ErrorCode::kTransformDomain,
                          "transform table has no entry for weight " +
                              format_real(x));
            }
            return it->second;
          },
      },
      phi.kind());
  if (!(y > 0.0) || !std::isfinite(y)) {
    throw Error(ErrorCode::kTransformDomain,
                phi.describe() + " maps weight " + format_real(x) +
                    " outside the positive reals");
  }
  return y;
}

Matrix reverse_matrix(const Matrix& weights, const ReverseTransform& phi) {
  Matrix out(weights.cols(), weights.rows());
  for (std::size_t i = 0; i < weights.rows(); ++i) {
    for (std::size_t j = 0; j < weights.cols(); ++j) {
      const double w = weights(i, j);
      if (w > 0.0) out(j, i) = apply_phi(w, phi);
    }
  }
  return out;
}

Matrix reverse_matrix(const WeightRelation& rel, const ReverseTransform& phi) {
  return reverse_matrix(rel.weights(), phi);
}

}  // namespace bicentrality
