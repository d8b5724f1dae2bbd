#pragma once

#include <cstdint>
#include <vector>

#include "cvml/complex_order.hpp"

namespace cvml {

/// Planar regions that can be discretized into point sets for diameter
/// estimation. Annulus bounds are strict (open region).
struct Region {
  enum class Kind { Annulus, Rect };
  Kind kind = Kind::Annulus;
  Complex center = {0.0, 0.0};  // Annulus
  double inner = 0.0;
  double outer = 1.0;
  Complex lo = {0.0, 0.0};  // Rect corners, inclusive
  Complex hi = {1.0, 1.0};
};

struct SamplingSpec {
  enum class Mode { Grid, MonteCarlo };
  Mode mode = Mode::Grid;
  double step = 0.05;       // Grid
  int count = 10000;        // MonteCarlo
  std::uint64_t seed = 1;   // MonteCarlo
};

/// Deterministic point sample of the region. Grid mode walks the bounding box
/// at the given step and keeps points inside the region; Monte Carlo draws
/// from the seeded generator.
std::vector<Complex> sample_region(const Region& region,
                                   const SamplingSpec& sampling);

}  // namespace cvml
