#pragma once

#include <memory>
#include <span>
#include <vector>

#include "cvml/complex_order.hpp"
#include "cvml/space.hpp"

namespace cvml {

enum class DistanceKind {
  ExpIthetaSum,     // e^{i theta} (|x| + |y|)
  IMaxMod,          // i max{|x|, |y|}
  MaxShift,         // max{|x - c|, |y - c|}
  MaxReal,          // max{Re x, Re y}
  OnePlusISum,      // (1 + i)(|x| + |y|)
  ScaledEuclidean,  // w |x - y|
  UserMatrix,       // table lookup against a finite space
};

/// Evaluable distance function: the analytic catalog plus user-supplied
/// matrices. Values are whatever the formula yields; cone membership is
/// enforced where spaces are built, not here.
struct DistanceFn {
  DistanceKind kind = DistanceKind::IMaxMod;
  double theta = 0.0;          // ExpIthetaSum
  double shift = 0.0;          // MaxShift
  Complex weight = {1.0, 1.0};  // ScaledEuclidean

  // UserMatrix: matrix entries keyed by site coordinates.
  struct Table {
    DistanceMatrix matrix;
    std::vector<Complex> sites;
    double eps = 1e-9;
  };
  std::shared_ptr<const Table> table;

  Complex operator()(Complex x, Complex y) const;
  Index lookup_site(Complex p) const;  // throws InvalidInput when unmatched
};

DistanceFn exp_itheta_sum(double theta);  // requires 0 <= theta <= pi/2
DistanceFn i_max_mod();
DistanceFn max_shift(double c);
DistanceFn max_real();
DistanceFn one_plus_i_sum();
DistanceFn scaled_euclidean(Complex w, Tolerance tol = {});  // requires 0 < w strictly
DistanceFn user_matrix(const FiniteSpace& space, std::vector<Complex> sites,
                       Tolerance tol = {});

const char* kind_name(DistanceKind kind);

/// Restriction of an analytic distance to a finite sample:
/// matrix(i, j) = fn(points[i], points[j]), raw evaluations stored.
/// Throws RangeViolation naming the pair if a value escapes the cone.
FiniteSpace sample_space(const DistanceFn& fn, std::span<const Complex> points,
                         Tolerance tol = {});

inline Complex DistanceFn::operator()(Complex x, Complex y) const {
  switch (kind) {
    case DistanceKind::ExpIthetaSum: {
      const double s = modulus(x) + modulus(y);
      return {s * std::cos(theta), s * std::sin(theta)};
    }
    case DistanceKind::IMaxMod:
      return {0.0, std::max(modulus(x), modulus(y))};
    case DistanceKind::MaxShift: {
      const Complex c{shift, 0.0};
      return {std::max(modulus(x - c), modulus(y - c)), 0.0};
    }
    case DistanceKind::MaxReal:
      return {std::max(x.real(), y.real()), 0.0};
    case DistanceKind::OnePlusISum: {
      const double s = modulus(x) + modulus(y);
      return {s, s};
    }
    case DistanceKind::ScaledEuclidean:
      return weight * modulus(x - y);
    case DistanceKind::UserMatrix: {
      const Index i = lookup_site(x);
      const Index j = lookup_site(y);
      return table->matrix(i, j);
    }
  }
  throw InvalidInput("DistanceFn: unknown kind");
}

}  // namespace cvml
