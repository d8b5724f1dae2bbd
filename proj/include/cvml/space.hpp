#pragma once

#include <Eigen/Core>
#include <string>
#include <vector>

#include "cvml/complex_order.hpp"

namespace cvml {

using DistanceMatrix =
    Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic>;
using Index = Eigen::Index;

/// A labeled point set with a square matrix of complex distances. Entries are
/// stored exactly as evaluated; symmetry is never assumed.
struct FiniteSpace {
  std::vector<std::string> labels;
  DistanceMatrix matrix;

  Index size() const { return matrix.rows(); }
  Index index_of(const std::string& label) const;  // throws UnknownLabel
};

/// Checks the structural invariants: square matrix matching the label count,
/// at least one point, and every entry finite and inside the cone.
void validate_space(const FiniteSpace& space, Tolerance tol = {});

/// Canonical `re+imi` rendering, also used as the auto-generated label when a
/// space is sampled from an analytic distance function.
std::string format_complex(Complex z);

}  // namespace cvml
