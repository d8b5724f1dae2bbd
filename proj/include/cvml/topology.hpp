#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "cvml/distance.hpp"

namespace cvml {

/// Open ball data: membership means |d(center, y) - d(center, center)|_c
/// strictly below the radius in both components.
struct BallSpec {
  Complex center;
  Complex radius;  // must be strictly positive in both components
};

/// |d(a, x0) - d(x0, x0)|_c, the quantity governing ball membership,
/// convergence and closure.
Complex residual(const DistanceFn& d, Complex x0, Complex a);
Complex residual(const FiniteSpace& space, Index x0, Index a);

bool ball_contains(const DistanceFn& d, const BallSpec& ball, Complex y,
                   Tolerance tol = {});
bool ball_contains(const FiniteSpace& space, Index center, Complex radius,
                   Index y, Tolerance tol = {});

/// Cluster points of A inside the ambient finite space: x0 belongs iff some
/// a in A has zero residual within eps (membership for every strictly
/// positive radius is equivalent to that). Always contains A. Results are in
/// ambient index order.
std::vector<Index> closure(const FiniteSpace& space,
                           std::span<const Index> a_set, Tolerance tol = {});

/// Limit points: the witness must differ from the point itself.
std::vector<Index> limit_points(const FiniteSpace& space,
                                std::span<const Index> a_set,
                                Tolerance tol = {});

/// True iff every limit point of A belongs to A.
bool is_closed(const FiniteSpace& space, std::span<const Index> a_set,
               Tolerance tol = {});

/// Componentwise supremum (join) of both residual families over all ordered
/// pairs. `witness` holds indices into the supplied point list; `attained` is
/// true when a single pair realizes the join in both components and the input
/// was not flagged as a sample of a larger set.
struct DiameterResult {
  Complex value = {0.0, 0.0};
  bool attained = false;
  std::optional<std::pair<int, int>> witness;
};

DiameterResult diam_c(std::span<const Complex> points, const DistanceFn& d,
                      Tolerance tol = {}, bool sampled = false);
DiameterResult diam_c(const FiniteSpace& space, std::span<const Index> subset,
                      Tolerance tol = {});

}  // namespace cvml
