#include "cvml/axioms.hpp"

#include <algorithm>
#include <cmath>

#include "cvml/errors.hpp"

namespace cvml {
namespace {

bool approx_zero(Complex v, double eps) {
  return std::abs(v.real()) <= eps && std::abs(v.imag()) <= eps;
}

// How far a <= b + eps is from holding, componentwise; <= 0 means it holds.
double leq_excess(Complex a, Complex b, double eps) {
  return std::max(a.real() - b.real(), a.imag() - b.imag()) - eps;
}

double eq_excess(Complex a, Complex b, double eps) {
  return std::max(std::abs(a.real() - b.real()), std::abs(a.imag() - b.imag())) - eps;
}

class Checker {
 public:
  Checker(const FiniteSpace& space, AxiomClass cls, Tolerance tol)
      : m_(space.matrix), n_(space.matrix.rows()), eps_(tol.eps) {
    report_.cls = cls;
  }

  AxiomReport take() {
    std::sort(report_.violations.begin(), report_.violations.end(),
              [](const Violation& a, const Violation& b) {
                if (a.axiom != b.axiom) return a.axiom < b.axiom;
                return a.witness < b.witness;
              });
    report_.passed = report_.violations.empty();
    return std::move(report_);
  }

  void range() {
    for (Index i = 0; i < n_; ++i) {
      for (Index j = 0; j < n_; ++j) {
        const Complex v = m_(i, j);
        const double excess =
            std::max(-eps_ - v.real(), -eps_ - v.imag());
        if (!is_finite(v) || excess > 0.0) {
          add("range", {i, j}, {v}, excess <= 2.0 * eps_);
        }
      }
    }
  }

  void real_valued() {
    for (Index i = 0; i < n_; ++i) {
      for (Index j = 0; j < n_; ++j) {
        const double im = std::abs(m_(i, j).imag());
        if (im > eps_) add("real", {i, j}, {m_(i, j)}, im - eps_ <= 2.0 * eps_);
      }
    }
  }

  // d(x, x) = 0 for every x.
  void self_zero(const char* id) {
    for (Index i = 0; i < n_; ++i) {
      if (!approx_zero(m_(i, i), eps_)) {
        add(id, {i}, {m_(i, i)}, eq_excess(m_(i, i), {0, 0}, eps_) <= 2.0 * eps_);
      }
    }
  }

  // d(x, y) = 0 implies x = y: no vanishing off-diagonal entry.
  void separation(const char* id) {
    for (Index i = 0; i < n_; ++i) {
      for (Index j = 0; j < n_; ++j) {
        if (i != j && approx_zero(m_(i, j), eps_)) {
          add(id, {i, j}, {m_(i, j)}, true);
        }
      }
    }
  }

  void symmetry(const char* id) {
    for (Index i = 0; i < n_; ++i) {
      for (Index j = i + 1; j < n_; ++j) {
        const double excess = eq_excess(m_(i, j), m_(j, i), eps_);
        if (excess > 0.0) {
          add(id, {i, j}, {m_(i, j), m_(j, i)}, excess <= 2.0 * eps_);
        }
      }
    }
  }

  // For distinct x, y the three values p(x,x), p(y,y), p(x,y) must not all
  // coincide (the "only if" half of the identity axiom).
  void identity_only_if(const char* id) {
    for (Index i = 0; i < n_; ++i) {
      for (Index j = i + 1; j < n_; ++j) {
        const Complex a = m_(i, i), b = m_(j, j), c = m_(i, j);
        const double spread = std::max(
            {eq_excess(a, b, 0.0), eq_excess(a, c, 0.0), eq_excess(b, c, 0.0)});
        if (spread <= eps_) {
          add(id, {i, j}, {a, b, c}, spread > eps_ / 2.0);
        }
      }
    }
  }

  // d(x, y) <= d(x, z) + d(z, y). Witness order (x, y, z).
  void triangle(const char* id) {
    for (Index i = 0; i < n_; ++i) {
      for (Index j = 0; j < n_; ++j) {
        for (Index k = 0; k < n_; ++k) {
          const Complex rhs = m_(i, k) + m_(k, j);
          const double excess = leq_excess(m_(i, j), rhs, eps_);
          if (excess > 0.0) {
            add(id, {i, j, k}, {m_(i, j), m_(i, k), m_(k, j)},
                excess <= 2.0 * eps_);
          }
        }
      }
    }
  }

  // p(x, z) <= p(x, y) + p(y, z) - p(y, y). Witness order (x, z, y).
  void partial_triangle(const char* id) {
    for (Index i = 0; i < n_; ++i) {
      for (Index k = 0; k < n_; ++k) {
        for (Index j = 0; j < n_; ++j) {
          const Complex rhs = m_(i, j) + m_(j, k) - m_(j, j);
          const double excess = leq_excess(m_(i, k), rhs, eps_);
          if (excess > 0.0) {
            add(id, {i, k, j}, {m_(i, k), m_(i, j), m_(j, k), m_(j, j)},
                excess <= 2.0 * eps_);
          }
        }
      }
    }
  }

  // Self-distances bound every distance between distinct points from below:
  // p(w, w) <= p(x, y) for all w and all x != y. This is the reading under
  // which max{|x-5|, |y-5|} on {0,1,2} fails with witness p(0,0)=5, p(1,2)=4.
  // Witness order (w, x, y).
  void self_lower_bound_global(const char* id) {
    for (Index w = 0; w < n_; ++w) {
      for (Index i = 0; i < n_; ++i) {
        for (Index j = 0; j < n_; ++j) {
          if (i == j) continue;
          const double excess = leq_excess(m_(w, w), m_(i, j), eps_);
          if (excess > 0.0) {
            add(id, {w, i, j}, {m_(w, w), m_(i, j)}, excess <= 2.0 * eps_);
          }
        }
      }
    }
  }

  // max{p(x,x), p(y,y)} precedes p(x,y), checked as the two comparisons it
  // joins to. Witness order (w, x, y) with w the self point.
  void self_lower_bound_pairwise(const char* id) {
    for (Index i = 0; i < n_; ++i) {
      for (Index j = 0; j < n_; ++j) {
        if (i == j) continue;
        for (const Index w : {i, j}) {
          const double excess = leq_excess(m_(w, w), m_(i, j), eps_);
          if (excess > 0.0) {
            add(id, {w, i, j}, {m_(w, w), m_(i, j)}, excess <= 2.0 * eps_);
          }
        }
      }
    }
  }

 private:
  void add(const char* axiom, std::vector<Index> witness,
           std::vector<Complex> values, bool marginal) {
    report_.violations.push_back(
        {axiom, std::move(witness), std::move(values), marginal});
  }

  const DistanceMatrix& m_;
  Index n_;
  double eps_;
  AxiomReport report_;
};

}  // namespace

const char* class_name(AxiomClass cls) {
  switch (cls) {
    case AxiomClass::Metric: return "METRIC";
    case AxiomClass::PartialMetric: return "PARTIAL_METRIC";
    case AxiomClass::MetricLike: return "METRIC_LIKE";
    case AxiomClass::CvMetric: return "CV_METRIC";
    case AxiomClass::CvPartialMetric: return "CV_PARTIAL_METRIC";
    case AxiomClass::Cvml: return "CVML";
  }
  return "unknown";
}

AxiomClass class_from_name(const std::string& name) {
  for (const AxiomClass cls : kAllAxiomClasses) {
    if (name == class_name(cls)) return cls;
  }
  throw InvalidInput("unknown axiom class: " + name);
}

AxiomReport check_axioms(const FiniteSpace& space, AxiomClass cls,
                         Tolerance tol) {
  if (space.matrix.rows() < 1 || space.matrix.rows() != space.matrix.cols() ||
      static_cast<Index>(space.labels.size()) != space.matrix.rows()) {
    throw InvalidInput("check_axioms: malformed space");
  }
  Checker c(space, cls, tol);
  switch (cls) {
    case AxiomClass::Metric:
      c.range();
      c.real_valued();
      c.self_zero("(i)");
      c.separation("(i)");
      c.symmetry("(ii)");
      c.triangle("(iii)");
      break;
    case AxiomClass::PartialMetric:
      c.range();
      c.real_valued();
      c.identity_only_if("(i)");
      c.self_lower_bound_global("(ii)");
      c.symmetry("(iii)");
      c.partial_triangle("(iv)");
      break;
    case AxiomClass::MetricLike:
      c.range();
      c.real_valued();
      c.separation("(i)");
      c.symmetry("(ii)");
      c.triangle("(iii)");
      break;
    case AxiomClass::CvMetric:
      c.range();  // axiom (i): values precede nothing below the cone
      c.self_zero("(ii)");
      c.separation("(ii)");
      c.symmetry("(iii)");
      c.triangle("(iv)");
      break;
    case AxiomClass::CvPartialMetric:
      c.range();
      c.identity_only_if("(i)");
      c.self_lower_bound_pairwise("(ii)");
      c.symmetry("(iii)");
      c.partial_triangle("(iv)");
      break;
    case AxiomClass::Cvml:
      c.range();
      c.separation("(D1)");
      c.symmetry("(D2)");
      c.triangle("(D3)");
      break;
  }
  return c.take();
}

std::set<AxiomClass> classify(const FiniteSpace& space, Tolerance tol) {
  std::set<AxiomClass> passing;
  for (const AxiomClass cls : kAllAxiomClasses) {
    if (check_axioms(space, cls, tol).passed) passing.insert(cls);
  }
  return passing;
}

}  // namespace cvml
