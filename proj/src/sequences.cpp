#include "cvml/sequences.hpp"

#include <algorithm>
#include <cmath>

namespace cvml {

namespace {

void require_rule_horizon(int n_max) {
  if (n_max < 8) throw InvalidInput("sequence horizon must be at least 8");
}

Complex eval_checked(const DistanceFn& d, Complex a, Complex b) {
  const Complex v = d(a, b);
  if (!is_finite(v)) {
    throw InvalidInput("distance evaluation produced a non-finite value at (" +
                       format_complex(a) + ", " + format_complex(b) + ")");
  }
  return v;
}

}  // namespace

int SequenceSpec::length() const {
  return rule == Rule::Explicit ? static_cast<int>(terms.size()) : n_max;
}

Complex SequenceSpec::term(int n) const {
  switch (rule) {
    case Rule::Explicit:
      return terms[static_cast<std::size_t>(n - 1)];
    case Rule::ReciprocalI:
      return {0.0, 1.0 / static_cast<double>(n)};
    case Rule::Constant:
      return first;
    case Rule::Alternating:
      return n % 2 == 1 ? first : second;
  }
  throw InvalidInput("sequence: unknown rule");
}

SequenceSpec reciprocal_i_seq(int n_max) {
  require_rule_horizon(n_max);
  SequenceSpec seq;
  seq.rule = SequenceSpec::Rule::ReciprocalI;
  seq.n_max = n_max;
  return seq;
}

SequenceSpec constant_seq(Complex x, int n_max) {
  require_rule_horizon(n_max);
  require_finite(x, "constant sequence value");
  SequenceSpec seq;
  seq.rule = SequenceSpec::Rule::Constant;
  seq.first = x;
  seq.n_max = n_max;
  return seq;
}

SequenceSpec alternating_seq(Complex a, Complex b, int n_max) {
  require_rule_horizon(n_max);
  require_finite(a, "alternating sequence value");
  require_finite(b, "alternating sequence value");
  SequenceSpec seq;
  seq.rule = SequenceSpec::Rule::Alternating;
  seq.first = a;
  seq.second = b;
  seq.n_max = n_max;
  return seq;
}

SequenceSpec explicit_seq(std::vector<Complex> terms) {
  if (terms.empty()) throw InvalidInput("explicit sequence must not be empty");
  for (const Complex t : terms) require_finite(t, "sequence term");
  SequenceSpec seq;
  seq.rule = SequenceSpec::Rule::Explicit;
  seq.terms = std::move(terms);
  return seq;
}

ConvergenceVerdict check_convergence(const DistanceFn& d,
                                     const SequenceSpec& seq, Complex x0,
                                     Tolerance tol, ConvergenceParams params) {
  require_finite(x0, "convergence candidate");
  const int n = seq.length();
  if (n < 1) throw InvalidInput("check_convergence: empty sequence");
  if (params.tail < 8) throw InvalidInput("check_convergence: tail must be at least 8");
  if (n < 2 * params.tail) {
    throw InvalidInput("check_convergence: horizon must be at least twice the tail");
  }
  (void)tol;

  const Complex self = eval_checked(d, x0, x0);
  ConvergenceVerdict verdict;
  verdict.residuals.resize(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) {
    verdict.residuals[static_cast<std::size_t>(i - 1)] =
        modulus(eval_checked(d, seq.term(i), x0) - self);
  }

  const auto tail_begin = verdict.residuals.end() - params.tail;
  const double tail_max = *std::max_element(tail_begin, verdict.residuals.end());
  const int quarter = std::max(1, (n + 3) / 4);
  const double head_max = *std::max_element(
      verdict.residuals.begin(), verdict.residuals.begin() + quarter);

  const bool below = std::all_of(tail_begin, verdict.residuals.end(),
                                 [&](double r) { return r < params.threshold; });
  // Trend guard: a tail that merely sits under the threshold without having
  // shrunk against the head is suspect, unless the whole run is already flat
  // at threshold level.
  const bool trending =
      head_max <= params.threshold || tail_max <= 0.5 * head_max;
  verdict.converges = below && trending;

  if (verdict.converges) {
    int idx = n;  // 1-based first index past which every residual passes
    while (idx > 1 &&
           verdict.residuals[static_cast<std::size_t>(idx - 2)] < params.threshold) {
      --idx;
    }
    verdict.decision_index = idx;
  }
  return verdict;
}

CauchyVerdict check_cauchy(const DistanceFn& d, const SequenceSpec& seq,
                           Tolerance tol, ConvergenceParams params) {
  const int n = seq.length();
  if (n < 1) throw InvalidInput("check_cauchy: empty sequence");
  if (params.tail < 8) throw InvalidInput("check_cauchy: tail must be at least 8");
  if (n < 2 * params.tail) {
    throw InvalidInput("check_cauchy: horizon must be at least twice the tail");
  }
  (void)tol;

  const int start = n - params.tail + 1;
  std::vector<Complex> window;
  window.reserve(static_cast<std::size_t>(params.tail));
  for (int i = start; i <= n; ++i) window.push_back(seq.term(i));

  Complex sum = {0.0, 0.0};
  std::vector<Complex> values;
  values.reserve(window.size() * window.size());
  for (const Complex a : window) {
    for (const Complex b : window) {
      const Complex v = eval_checked(d, a, b);
      values.push_back(v);
      sum += v;
    }
  }
  const Complex mean = sum / static_cast<double>(values.size());

  CauchyVerdict verdict;
  verdict.max_deviation = 0.0;
  for (const Complex v : values) {
    verdict.max_deviation = std::max(verdict.max_deviation, modulus(v - mean));
  }
  verdict.is_cauchy = verdict.max_deviation < params.threshold;
  if (verdict.is_cauchy) verdict.limit_estimate = mean;
  return verdict;
}

std::vector<Complex> find_limits(const DistanceFn& d, const SequenceSpec& seq,
                                 std::span<const Complex> candidates,
                                 Tolerance tol, ConvergenceParams params) {
  if (candidates.empty()) throw InvalidInput("find_limits: no candidates supplied");
  std::vector<Complex> limits;
  for (const Complex c : candidates) {
    if (check_convergence(d, seq, c, tol, params).converges) {
      limits.push_back(c);
    }
  }
  return limits;
}

bool completely_separate(const DistanceFn& d, Complex x, Complex y,
                         Tolerance tol) {
  require_finite(x, "completely_separate");
  require_finite(y, "completely_separate");
  const Complex lhs = d(x, x) + d(y, y);
  return lt_strict(lhs, d(x, y), tol);
}

}  // namespace cvml
