#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <random>

#include "cvml/axioms.hpp"
#include "cvml/distance.hpp"
#include "cvml/errors.hpp"
#include "generators.hpp"

using namespace cvml;
using cvml::testing::SpaceGen;

namespace {

// Independent verdict oracle: plain loops straight off the definitions, kept
// apart from the library's checker machinery.
namespace oracle {

bool le(Complex a, Complex b, double e) {
  return a.real() <= b.real() + e && a.imag() <= b.imag() + e;
}
bool eq(Complex a, Complex b, double e) {
  return std::abs(a.real() - b.real()) <= e && std::abs(a.imag() - b.imag()) <= e;
}
bool zero(Complex a, double e) { return eq(a, {0, 0}, e); }

bool cone_ok(const DistanceMatrix& m, double e) {
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j)
      if (!le({0, 0}, m(i, j), e)) return false;
  return true;
}
bool real_ok(const DistanceMatrix& m, double e) {
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j)
      if (std::abs(m(i, j).imag()) > e) return false;
  return true;
}
bool symmetric(const DistanceMatrix& m, double e) {
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j)
      if (!eq(m(i, j), m(j, i), e)) return false;
  return true;
}
bool triangle(const DistanceMatrix& m, double e) {
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j)
      for (Index k = 0; k < m.rows(); ++k)
        if (!le(m(i, j), m(i, k) + m(k, j), e)) return false;
  return true;
}
bool partial_triangle(const DistanceMatrix& m, double e) {
  for (Index i = 0; i < m.rows(); ++i)
    for (Index k = 0; k < m.cols(); ++k)
      for (Index j = 0; j < m.rows(); ++j)
        if (!le(m(i, k), m(i, j) + m(j, k) - m(j, j), e)) return false;
  return true;
}
bool separation(const DistanceMatrix& m, double e) {
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j)
      if (i != j && zero(m(i, j), e)) return false;
  return true;
}
bool self_zero(const DistanceMatrix& m, double e) {
  for (Index i = 0; i < m.rows(); ++i)
    if (!zero(m(i, i), e)) return false;
  return true;
}
bool identity_only_if(const DistanceMatrix& m, double e) {
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = i + 1; j < m.cols(); ++j)
      if (eq(m(i, i), m(j, j), e) && eq(m(i, i), m(i, j), e) &&
          eq(m(j, j), m(i, j), e))
        return false;
  return true;
}
bool self_lower_bound_global(const DistanceMatrix& m, double e) {
  for (Index w = 0; w < m.rows(); ++w)
    for (Index i = 0; i < m.rows(); ++i)
      for (Index j = 0; j < m.cols(); ++j)
        if (i != j && !le(m(w, w), m(i, j), e)) return false;
  return true;
}
bool self_lower_bound_pairwise(const DistanceMatrix& m, double e) {
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j)
      if (i != j && (!le(m(i, i), m(i, j), e) || !le(m(j, j), m(i, j), e)))
        return false;
  return true;
}

bool passes(const FiniteSpace& s, AxiomClass cls, double e) {
  const DistanceMatrix& m = s.matrix;
  switch (cls) {
    case AxiomClass::Metric:
      return cone_ok(m, e) && real_ok(m, e) && self_zero(m, e) &&
             separation(m, e) && symmetric(m, e) && triangle(m, e);
    case AxiomClass::PartialMetric:
      return cone_ok(m, e) && real_ok(m, e) && identity_only_if(m, e) &&
             self_lower_bound_global(m, e) && symmetric(m, e) &&
             partial_triangle(m, e);
    case AxiomClass::MetricLike:
      return cone_ok(m, e) && real_ok(m, e) && separation(m, e) &&
             symmetric(m, e) && triangle(m, e);
    case AxiomClass::CvMetric:
      return cone_ok(m, e) && self_zero(m, e) && separation(m, e) &&
             symmetric(m, e) && triangle(m, e);
    case AxiomClass::CvPartialMetric:
      return cone_ok(m, e) && identity_only_if(m, e) &&
             self_lower_bound_pairwise(m, e) && symmetric(m, e) &&
             partial_triangle(m, e);
    case AxiomClass::Cvml:
      return cone_ok(m, e) && separation(m, e) && symmetric(m, e) &&
             triangle(m, e);
  }
  return false;
}

}  // namespace oracle

FiniteSpace permuted(const FiniteSpace& s, const std::vector<Index>& perm) {
  FiniteSpace out;
  out.matrix.resize(s.size(), s.size());
  for (Index i = 0; i < s.size(); ++i) {
    out.labels.push_back(s.labels[static_cast<std::size_t>(perm[i])]);
    for (Index j = 0; j < s.size(); ++j) {
      out.matrix(i, j) = s.matrix(perm[i], perm[j]);
    }
  }
  return out;
}

const Complex kI{0, 1};

}  // namespace

TEST_CASE("sample_space stores raw evaluations") {
  const Complex pts1[] = {kI, 2.0 * kI};
  const FiniteSpace s1 = sample_space(i_max_mod(), pts1);
  CHECK(s1.matrix(0, 0) == Complex{0, 1});
  CHECK(s1.matrix(0, 1) == Complex{0, 2});
  CHECK(s1.matrix(1, 0) == Complex{0, 2});
  CHECK(s1.matrix(1, 1) == Complex{0, 2});

  const Complex pts2[] = {Complex{0, 0}};
  const FiniteSpace s2 = sample_space(max_real(), pts2);
  CHECK(s2.size() == 1);
  CHECK(s2.matrix(0, 0) == Complex{0, 0});

  const Complex pts3[] = {Complex{1, 0}, kI};
  const FiniteSpace s3 = sample_space(one_plus_i_sum(), pts3);
  for (Index i = 0; i < 2; ++i)
    for (Index j = 0; j < 2; ++j) CHECK(s3.matrix(i, j) == Complex{2, 2});
}

TEST_CASE("sample_space rejects values outside the cone") {
  const Complex pts[] = {Complex{-1, 0}, Complex{2, 0}};
  CHECK_THROWS_AS(sample_space(max_real(), pts), RangeViolation);
}

TEST_CASE("catalog parameter validation") {
  CHECK_THROWS_AS(exp_itheta_sum(-0.1), InvalidInput);
  CHECK_THROWS_AS(exp_itheta_sum(std::numbers::pi), InvalidInput);
  CHECK_THROWS_AS(scaled_euclidean(Complex{1, 0}), InvalidInput);
  CHECK_NOTHROW(exp_itheta_sum(std::numbers::pi / 2));
  CHECK_NOTHROW(scaled_euclidean(Complex{1, 1}));
}

TEST_CASE("max_shift(5) on {0,1,2}: metric-like but not partial metric") {
  const Complex pts[] = {Complex{0, 0}, Complex{1, 0}, Complex{2, 0}};
  const FiniteSpace s = sample_space(max_shift(5.0), pts);

  const AxiomReport like = check_axioms(s, AxiomClass::MetricLike);
  CHECK(like.passed);

  const AxiomReport partial = check_axioms(s, AxiomClass::PartialMetric);
  REQUIRE_FALSE(partial.passed);
  // The self-distance of 0 exceeds the distance of the pair (1, 2):
  // D(0,0) = 5 while D(1,2) = 4, in both pair orientations.
  REQUIRE(partial.violations.size() == 2);
  const Violation& v = partial.violations[0];
  CHECK(v.axiom == "(ii)");
  CHECK(v.witness == std::vector<Index>{0, 1, 2});
  CHECK(v.values[0] == Complex{5, 0});
  CHECK(v.values[1] == Complex{4, 0});
  CHECK_FALSE(v.marginal);
  CHECK(partial.violations[1].witness == std::vector<Index>{0, 2, 1});
}

TEST_CASE("max_real sample: self-distances act as global lower bounds") {
  const Complex pts[] = {Complex{0, 0}, Complex{1, 0}, Complex{2.5, 0},
                         Complex{7, 0}};
  const FiniteSpace s = sample_space(max_real(), pts);

  CHECK(check_axioms(s, AxiomClass::MetricLike).passed);
  CHECK(check_axioms(s, AxiomClass::Cvml).passed);
  CHECK(check_axioms(s, AxiomClass::CvPartialMetric).passed);

  // max{x, y} satisfies the pairwise self bound everywhere, but the global
  // form fails as soon as one point's self-distance tops another pair.
  const AxiomReport partial = check_axioms(s, AxiomClass::PartialMetric);
  REQUIRE_FALSE(partial.passed);
  REQUIRE(partial.violations.size() == 8);
  const Violation& v = partial.violations[0];
  CHECK(v.axiom == "(ii)");
  CHECK(v.witness == std::vector<Index>{2, 0, 1});
  CHECK(v.values[0] == Complex{2.5, 0});
  CHECK(v.values[1] == Complex{1, 0});
}

TEST_CASE("exp_itheta_sum samples satisfy the CVML axioms") {
  std::mt19937_64 rng(0x5eedcafe);
  std::uniform_real_distribution<double> u(-5.0, 5.0);
  std::vector<Complex> pts;
  for (int k = 0; k < 8; ++k) pts.emplace_back(u(rng), u(rng));

  for (const double theta : {0.0, std::numbers::pi / 4, std::numbers::pi / 2}) {
    const FiniteSpace s = sample_space(exp_itheta_sum(theta), pts);
    CHECK(check_axioms(s, AxiomClass::Cvml).passed);
  }
}

TEST_CASE("classify i_max_mod sample") {
  const Complex pts[] = {kI, 2.0 * kI, 0.5 * kI};
  const auto classes = classify(sample_space(i_max_mod(), pts));
  CHECK(classes.contains(AxiomClass::Cvml));
  CHECK(classes.contains(AxiomClass::CvPartialMetric));
  CHECK_FALSE(classes.contains(AxiomClass::CvMetric));
  CHECK_FALSE(classes.contains(AxiomClass::Metric));
  CHECK_FALSE(classes.contains(AxiomClass::PartialMetric));
  CHECK_FALSE(classes.contains(AxiomClass::MetricLike));
}

TEST_CASE("classify max_real sample") {
  const Complex pts[] = {Complex{0, 0}, Complex{1, 0}, Complex{2, 0}};
  const auto classes = classify(sample_space(max_real(), pts));
  CHECK(classes.contains(AxiomClass::MetricLike));
  CHECK(classes.contains(AxiomClass::Cvml));
  CHECK(classes.contains(AxiomClass::CvPartialMetric));
  CHECK_FALSE(classes.contains(AxiomClass::Metric));  // p(1,1) = 1
  // Global self-bound reading: p(2,2) = 2 tops the pair (0,1).
  CHECK_FALSE(classes.contains(AxiomClass::PartialMetric));
}

TEST_CASE("classify scaled_euclidean sample") {
  const Complex pts[] = {Complex{0, 0}, Complex{1, 0}, Complex{1, 1}};
  const auto classes = classify(sample_space(scaled_euclidean({1, 1}), pts));
  CHECK(classes.contains(AxiomClass::Cvml));
  CHECK(classes.contains(AxiomClass::CvMetric));
  CHECK(classes.contains(AxiomClass::CvPartialMetric));
  CHECK_FALSE(classes.contains(AxiomClass::Metric));
  CHECK_FALSE(classes.contains(AxiomClass::MetricLike));
}

TEST_CASE("checker verdicts match the brute-force oracle") {
  SpaceGen gen(0x0a11ce);
  const Tolerance tol;
  for (int trial = 0; trial < 2000; ++trial) {
    const FiniteSpace s = gen.any_space(gen.uniform_int(1, 6));
    for (const AxiomClass cls : kAllAxiomClasses) {
      const AxiomReport report = check_axioms(s, cls, tol);
      CHECK(report.passed == oracle::passes(s, cls, tol.eps));
      CHECK(report.passed == report.violations.empty());
    }
  }
}

TEST_CASE("hierarchy implications hold on random spaces") {
  SpaceGen gen(0xbeefbeef);
  for (int trial = 0; trial < 2000; ++trial) {
    const FiniteSpace s = gen.any_space(gen.uniform_int(1, 6));
    const auto classes = classify(s);
    if (classes.contains(AxiomClass::Metric)) {
      CHECK(classes.contains(AxiomClass::PartialMetric));
      CHECK(classes.contains(AxiomClass::MetricLike));
    }
    if (classes.contains(AxiomClass::PartialMetric)) {
      CHECK(classes.contains(AxiomClass::MetricLike));
      CHECK(classes.contains(AxiomClass::CvPartialMetric));
    }
    if (classes.contains(AxiomClass::MetricLike)) {
      CHECK(classes.contains(AxiomClass::Cvml));
    }
    if (classes.contains(AxiomClass::CvMetric)) {
      CHECK(classes.contains(AxiomClass::Cvml));
    }
    if (classes.contains(AxiomClass::CvPartialMetric)) {
      CHECK(classes.contains(AxiomClass::Cvml));
    }
  }
}

TEST_CASE("verdicts are invariant under label permutation") {
  SpaceGen gen(0x9e3779b9);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = gen.uniform_int(2, 6);
    const FiniteSpace s = gen.any_space(n);
    std::vector<Index> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), gen.rng);
    const FiniteSpace p = permuted(s, perm);
    for (const AxiomClass cls : kAllAxiomClasses) {
      const AxiomReport a = check_axioms(s, cls);
      const AxiomReport b = check_axioms(p, cls);
      CHECK(a.passed == b.passed);
      CHECK(a.violations.size() == b.violations.size());
    }
  }
}

TEST_CASE("catalog samples always satisfy the cone invariant") {
  std::mt19937_64 rng(0xc0ffee);
  std::uniform_real_distribution<double> u(-4.0, 4.0);
  const DistanceFn fns[] = {exp_itheta_sum(0.7), i_max_mod(), max_shift(2.0),
                            one_plus_i_sum(), scaled_euclidean({2, 1})};
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<Complex> pts;
    const int n = 1 + static_cast<int>(rng() % 6);
    for (int k = 0; k < n; ++k) pts.emplace_back(u(rng), u(rng));
    for (const DistanceFn& fn : fns) {
      const FiniteSpace s = sample_space(fn, pts);
      CHECK_NOTHROW(validate_space(s));
    }
  }
}

TEST_CASE("marginal violations are flagged") {
  FiniteSpace s;
  s.labels = {"a", "b"};
  s.matrix.resize(2, 2);
  s.matrix << Complex{0, 0}, Complex{1.0, 0}, Complex{1.0 + 1.5e-9, 0},
      Complex{0, 0};
  const AxiomReport r = check_axioms(s, AxiomClass::Metric);
  REQUIRE_FALSE(r.passed);
  REQUIRE(r.violations.size() == 1);
  CHECK(r.violations[0].axiom == "(ii)");
  CHECK(r.violations[0].marginal);

  s.matrix(1, 0) = Complex{3.0, 0};
  const AxiomReport gross = check_axioms(s, AxiomClass::Metric);
  REQUIRE_FALSE(gross.passed);
  CHECK_FALSE(gross.violations[0].marginal);
}

TEST_CASE("validate_space rejects malformed input") {
  FiniteSpace s;
  CHECK_THROWS_AS(validate_space(s), InvalidInput);

  s.labels = {"a", "b"};
  s.matrix.resize(2, 2);
  s.matrix.setConstant(Complex{1, 1});
  CHECK_NOTHROW(validate_space(s));

  s.matrix(0, 1) = Complex{-1, 0};
  CHECK_THROWS_AS(validate_space(s), RangeViolation);

  s.labels = {"a"};
  CHECK_THROWS_AS(validate_space(s), InvalidInput);
}

TEST_CASE("user_matrix evaluates by site lookup") {
  FiniteSpace s;
  s.labels = {"a", "b"};
  s.matrix.resize(2, 2);
  s.matrix << Complex{1, 0}, Complex{2, 1}, Complex{2, 1}, Complex{0, 3};
  const DistanceFn fn = user_matrix(s, {Complex{0, 0}, Complex{1, 1}});
  CHECK(fn(Complex{0, 0}, Complex{1, 1}) == Complex{2, 1});
  CHECK(fn(Complex{1, 1}, Complex{1, 1}) == Complex{0, 3});
  CHECK_THROWS_AS(fn(Complex{5, 5}, Complex{0, 0}), InvalidInput);
  CHECK_THROWS_AS(user_matrix(s, {Complex{0, 0}}), InvalidInput);
}

TEST_CASE("class names round-trip") {
  for (const AxiomClass cls : kAllAxiomClasses) {
    CHECK(class_from_name(class_name(cls)) == cls);
  }
  CHECK_THROWS_AS(class_from_name("NOT_A_CLASS"), InvalidInput);
}
