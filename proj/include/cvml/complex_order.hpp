#pragma once

#include <cmath>
#include <complex>

#include "cvml/errors.hpp"

namespace cvml {

using Complex = std::complex<double>;

/// Absolute per-component slack applied to every comparison. eps = 0 selects
/// exact comparison.
struct Tolerance {
  double eps = 1e-9;
};

inline bool is_finite(Complex z) {
  return std::isfinite(z.real()) && std::isfinite(z.imag());
}

inline void require_finite(Complex z, const char* what) {
  if (!is_finite(z)) {
    throw InvalidInput(std::string(what) + ": component is not finite");
  }
}

/// Componentwise partial order: z1 comes before z2 when both the real and the
/// imaginary part do.
inline bool leq(Complex z1, Complex z2, Tolerance tol = {}) {
  require_finite(z1, "leq");
  require_finite(z2, "leq");
  return z1.real() <= z2.real() + tol.eps && z1.imag() <= z2.imag() + tol.eps;
}

/// Strict variant: both components strictly increase. Subtracts eps so that a
/// strict verdict survives rounding.
inline bool lt_strict(Complex z1, Complex z2, Tolerance tol = {}) {
  require_finite(z1, "lt_strict");
  require_finite(z2, "lt_strict");
  return z1.real() < z2.real() - tol.eps && z1.imag() < z2.imag() - tol.eps;
}

/// Componentwise equality within eps.
inline bool approx_eq(Complex z1, Complex z2, Tolerance tol = {}) {
  require_finite(z1, "approx_eq");
  require_finite(z2, "approx_eq");
  return std::abs(z1.real() - z2.real()) <= tol.eps &&
         std::abs(z1.imag() - z2.imag()) <= tol.eps;
}

/// Non-strict order with the two values distinct.
inline bool precneq(Complex z1, Complex z2, Tolerance tol = {}) {
  return leq(z1, z2, tol) && !approx_eq(z1, z2, tol);
}

/// Complex absolute value |Re z| + i|Im z|. Always lands in the cone.
inline Complex abs_c(Complex z) {
  require_finite(z, "abs_c");
  return {std::abs(z.real()), std::abs(z.imag())};
}

/// Euclidean modulus. Written out instead of std::abs to keep the pair loops
/// in the samplers cheap; desk-scale magnitudes cannot overflow the squares.
inline double modulus(Complex z) {
  return std::sqrt(z.real() * z.real() + z.imag() * z.imag());
}

/// Componentwise maximum: the least upper bound in the product order.
inline Complex join(Complex z1, Complex z2) {
  require_finite(z1, "join");
  require_finite(z2, "join");
  return {std::max(z1.real(), z2.real()), std::max(z1.imag(), z2.imag())};
}

}  // namespace cvml
