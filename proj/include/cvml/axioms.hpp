#pragma once

#include <set>
#include <string>
#include <vector>

#include "cvml/space.hpp"

namespace cvml {

enum class AxiomClass {
  Metric,
  PartialMetric,
  MetricLike,
  CvMetric,
  CvPartialMetric,
  Cvml,
};

inline constexpr AxiomClass kAllAxiomClasses[] = {
    AxiomClass::Metric,        AxiomClass::PartialMetric,
    AxiomClass::MetricLike,    AxiomClass::CvMetric,
    AxiomClass::CvPartialMetric, AxiomClass::Cvml,
};

const char* class_name(AxiomClass cls);
AxiomClass class_from_name(const std::string& name);  // throws InvalidInput

/// One failed axiom instance: the axiom id, the witness points (indices into
/// the space), and the offending values. `marginal` marks violations that sit
/// within a couple of eps of the comparison boundary, where floating point
/// rather than the space itself may be to blame.
struct Violation {
  std::string axiom;
  std::vector<Index> witness;
  std::vector<Complex> values;
  bool marginal = false;
};

struct AxiomReport {
  AxiomClass cls = AxiomClass::Cvml;
  bool passed = true;
  std::vector<Violation> violations;  // sorted by (axiom, witness indices)
};

/// Exhaustively checks every axiom of the requested class over all point
/// pairs/triples. Violations are data, not errors: the report collects all of
/// them. Real-valued classes additionally require every entry to have zero
/// imaginary part within eps.
AxiomReport check_axioms(const FiniteSpace& space, AxiomClass cls,
                         Tolerance tol = {});

/// The classes whose check_axioms report passes.
std::set<AxiomClass> classify(const FiniteSpace& space, Tolerance tol = {});

}  // namespace cvml
