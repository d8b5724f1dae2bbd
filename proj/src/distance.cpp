#include "cvml/distance.hpp"

#include <cmath>
#include <numbers>
#include <utility>

namespace cvml {

DistanceFn exp_itheta_sum(double theta) {
  if (!(theta >= 0.0 && theta <= std::numbers::pi / 2.0)) {
    throw InvalidInput("exp_itheta_sum: theta must lie in [0, pi/2]");
  }
  DistanceFn fn;
  fn.kind = DistanceKind::ExpIthetaSum;
  fn.theta = theta;
  return fn;
}

DistanceFn i_max_mod() {
  DistanceFn fn;
  fn.kind = DistanceKind::IMaxMod;
  return fn;
}

DistanceFn max_shift(double c) {
  if (!std::isfinite(c)) throw InvalidInput("max_shift: shift must be finite");
  DistanceFn fn;
  fn.kind = DistanceKind::MaxShift;
  fn.shift = c;
  return fn;
}

DistanceFn max_real() {
  DistanceFn fn;
  fn.kind = DistanceKind::MaxReal;
  return fn;
}

DistanceFn one_plus_i_sum() {
  DistanceFn fn;
  fn.kind = DistanceKind::OnePlusISum;
  return fn;
}

DistanceFn scaled_euclidean(Complex w, Tolerance tol) {
  if (!lt_strict(Complex{0.0, 0.0}, w, tol)) {
    throw InvalidInput("scaled_euclidean: weight must be strictly positive in both components");
  }
  DistanceFn fn;
  fn.kind = DistanceKind::ScaledEuclidean;
  fn.weight = w;
  return fn;
}

DistanceFn user_matrix(const FiniteSpace& space, std::vector<Complex> sites,
                       Tolerance tol) {
  validate_space(space, tol);
  if (static_cast<Index>(sites.size()) != space.size()) {
    throw InvalidInput("user_matrix: one site coordinate per matrix row required");
  }
  for (const Complex s : sites) require_finite(s, "user_matrix site");
  auto table = std::make_shared<DistanceFn::Table>();
  table->matrix = space.matrix;
  table->sites = std::move(sites);
  table->eps = tol.eps;
  DistanceFn fn;
  fn.kind = DistanceKind::UserMatrix;
  fn.table = std::move(table);
  return fn;
}

Index DistanceFn::lookup_site(Complex p) const {
  if (!table) throw InvalidInput("user_matrix: missing table");
  const double eps = table->eps;
  for (Index i = 0; i < static_cast<Index>(table->sites.size()); ++i) {
    const Complex s = table->sites[static_cast<std::size_t>(i)];
    if (std::abs(s.real() - p.real()) <= eps &&
        std::abs(s.imag() - p.imag()) <= eps) {
      return i;
    }
  }
  throw InvalidInput("user_matrix: point " + format_complex(p) +
                     " does not match any site");
}

const char* kind_name(DistanceKind kind) {
  switch (kind) {
    case DistanceKind::ExpIthetaSum: return "exp_itheta_sum";
    case DistanceKind::IMaxMod: return "i_max_mod";
    case DistanceKind::MaxShift: return "max_shift";
    case DistanceKind::MaxReal: return "max_real";
    case DistanceKind::OnePlusISum: return "one_plus_i_sum";
    case DistanceKind::ScaledEuclidean: return "scaled_euclidean";
    case DistanceKind::UserMatrix: return "user_matrix";
  }
  return "unknown";
}

FiniteSpace sample_space(const DistanceFn& fn, std::span<const Complex> points,
                         Tolerance tol) {
  if (points.empty()) throw InvalidInput("sample_space: point set is empty");
  for (const Complex p : points) require_finite(p, "sample_space point");

  const Index n = static_cast<Index>(points.size());
  FiniteSpace space;
  space.labels.reserve(points.size());
  for (const Complex p : points) space.labels.push_back(format_complex(p));
  space.matrix.resize(n, n);
  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j < n; ++j) {
      const Complex v = fn(points[static_cast<std::size_t>(i)],
                           points[static_cast<std::size_t>(j)]);
      if (!is_finite(v) || !leq(Complex{0.0, 0.0}, v, tol)) {
        throw RangeViolation(
            "distance (" + space.labels[static_cast<std::size_t>(i)] + ", " +
            space.labels[static_cast<std::size_t>(j)] + ") = " +
            format_complex(v) + " lies outside the cone");
      }
      space.matrix(i, j) = v;
    }
  }
  return space;
}

}  // namespace cvml
