#pragma once

#include <optional>
#include <vector>

#include "cvml/distance.hpp"

namespace cvml {

/// A finite prefix or rule-generated sequence of points together with the
/// evaluation horizon. Terms are 1-indexed.
struct SequenceSpec {
  enum class Rule { Explicit, ReciprocalI, Constant, Alternating };

  Rule rule = Rule::Explicit;
  std::vector<Complex> terms;  // Explicit
  Complex first = {0.0, 0.0};  // Constant value / Alternating odd term
  Complex second = {0.0, 0.0};  // Alternating even term
  int n_max = 1024;

  int length() const;
  Complex term(int n) const;  // n in [1, length()]
};

SequenceSpec reciprocal_i_seq(int n_max = 1024);  // x_n = i / n
SequenceSpec constant_seq(Complex x, int n_max = 1024);
SequenceSpec alternating_seq(Complex a, Complex b, int n_max = 1024);
SequenceSpec explicit_seq(std::vector<Complex> terms);

/// Finite-horizon decision parameters. A tail residual below `threshold` is
/// treated as converged provided the trend guard holds: the tail maximum must
/// not exceed half the first-quarter maximum unless the whole sequence is
/// already below threshold.
struct ConvergenceParams {
  int tail = 128;
  double threshold = 1e-6;
};

struct ConvergenceVerdict {
  bool converges = false;
  std::vector<double> residuals;  // |d(x_n, x0) - d(x0, x0)| per n, full run
  std::optional<int> decision_index;  // first n past which all residuals pass
};

ConvergenceVerdict check_convergence(const DistanceFn& d,
                                     const SequenceSpec& seq, Complex x0,
                                     Tolerance tol = {},
                                     ConvergenceParams params = {});

struct CauchyVerdict {
  bool is_cauchy = false;
  std::optional<Complex> limit_estimate;
  double max_deviation = 0.0;  // over tail pairs, against the mean
};

CauchyVerdict check_cauchy(const DistanceFn& d, const SequenceSpec& seq,
                           Tolerance tol = {}, ConvergenceParams params = {});

/// Every candidate the sequence converges to, in candidate order. Two or more
/// returned points are pairwise quasi-equal.
std::vector<Complex> find_limits(const DistanceFn& d, const SequenceSpec& seq,
                                 std::span<const Complex> candidates,
                                 Tolerance tol = {},
                                 ConvergenceParams params = {});

/// d(x, x) + d(y, y) strictly below d(x, y) in both components.
bool completely_separate(const DistanceFn& d, Complex x, Complex y,
                         Tolerance tol = {});

}  // namespace cvml
