#include "cvml/space.hpp"

#include <cmath>
#include <sstream>

#include "cvml/errors.hpp"

namespace cvml {

Index FiniteSpace::index_of(const std::string& label) const {
  for (Index i = 0; i < static_cast<Index>(labels.size()); ++i) {
    if (labels[static_cast<std::size_t>(i)] == label) return i;
  }
  throw UnknownLabel("unknown label: " + label);
}

void validate_space(const FiniteSpace& space, Tolerance tol) {
  const Index n = space.matrix.rows();
  if (n < 1) throw InvalidInput("space must contain at least one point");
  if (space.matrix.cols() != n) throw InvalidInput("distance matrix must be square");
  if (static_cast<Index>(space.labels.size()) != n) {
    throw InvalidInput("label count must match the matrix dimension");
  }
  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j < n; ++j) {
      const Complex v = space.matrix(i, j);
      if (!is_finite(v)) {
        throw InvalidInput("entry (" + space.labels[static_cast<std::size_t>(i)] +
                           ", " + space.labels[static_cast<std::size_t>(j)] +
                           ") is not finite");
      }
      if (!leq(Complex{0.0, 0.0}, v, tol)) {
        throw RangeViolation("entry (" + space.labels[static_cast<std::size_t>(i)] +
                             ", " + space.labels[static_cast<std::size_t>(j)] +
                             ") = " + format_complex(v) +
                             " lies outside the cone");
      }
    }
  }
}

std::string format_complex(Complex z) {
  std::ostringstream out;
  // -0.0 prints as 0 so equal values share one rendering.
  const double re = z.real() == 0.0 ? 0.0 : z.real();
  const double im = z.imag() == 0.0 ? 0.0 : z.imag();
  out << re;
  out << (std::signbit(im) ? '-' : '+');
  out << std::abs(im) << 'i';
  return out.str();
}

}  // namespace cvml
