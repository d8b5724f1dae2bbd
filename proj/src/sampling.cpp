#include "cvml/sampling.hpp"

#include <cmath>
#include <random>

#include "cvml/errors.hpp"

namespace cvml {

namespace {

bool inside(const Region& region, Complex p) {
  switch (region.kind) {
    case Region::Kind::Annulus: {
      const double r = std::abs(p - region.center);
      return r > region.inner && r < region.outer;
    }
    case Region::Kind::Rect:
      return p.real() >= region.lo.real() && p.real() <= region.hi.real() &&
             p.imag() >= region.lo.imag() && p.imag() <= region.hi.imag();
  }
  return false;
}

void bounding_box(const Region& region, double& x0, double& x1, double& y0,
                  double& y1) {
  switch (region.kind) {
    case Region::Kind::Annulus:
      x0 = region.center.real() - region.outer;
      x1 = region.center.real() + region.outer;
      y0 = region.center.imag() - region.outer;
      y1 = region.center.imag() + region.outer;
      break;
    case Region::Kind::Rect:
      x0 = region.lo.real();
      x1 = region.hi.real();
      y0 = region.lo.imag();
      y1 = region.hi.imag();
      break;
  }
}

}  // namespace

std::vector<Complex> sample_region(const Region& region,
                                   const SamplingSpec& sampling) {
  if (region.kind == Region::Kind::Annulus &&
      !(region.inner >= 0.0 && region.outer > region.inner)) {
    throw InvalidInput("annulus requires 0 <= inner < outer");
  }
  if (region.kind == Region::Kind::Rect &&
      !(region.lo.real() <= region.hi.real() &&
        region.lo.imag() <= region.hi.imag())) {
    throw InvalidInput("rect requires lo <= hi per component");
  }

  double x0, x1, y0, y1;
  bounding_box(region, x0, x1, y0, y1);

  std::vector<Complex> points;
  if (sampling.mode == SamplingSpec::Mode::Grid) {
    if (!(sampling.step > 0.0)) throw InvalidInput("grid step must be positive");
    const double h = sampling.step;
    // March the grid from integer multiples of the step so the sample does
    // not depend on the bounding box arithmetic.
    const long long jx0 = static_cast<long long>(std::ceil(x0 / h));
    const long long jx1 = static_cast<long long>(std::floor(x1 / h));
    const long long jy0 = static_cast<long long>(std::ceil(y0 / h));
    const long long jy1 = static_cast<long long>(std::floor(y1 / h));
    for (long long jx = jx0; jx <= jx1; ++jx) {
      for (long long jy = jy0; jy <= jy1; ++jy) {
        const Complex p{static_cast<double>(jx) * h,
                        static_cast<double>(jy) * h};
        if (inside(region, p)) points.push_back(p);
      }
    }
  } else {
    if (sampling.count < 1) throw InvalidInput("sample count must be positive");
    std::mt19937_64 rng(sampling.seed);
    std::uniform_real_distribution<double> ux(x0, x1);
    std::uniform_real_distribution<double> uy(y0, y1);
    while (static_cast<int>(points.size()) < sampling.count) {
      const Complex p{ux(rng), uy(rng)};
      if (inside(region, p)) points.push_back(p);
    }
  }
  if (points.empty()) throw InvalidInput("sampling produced no points in the region");
  return points;
}

}  // namespace cvml
