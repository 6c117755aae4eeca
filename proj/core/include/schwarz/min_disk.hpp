#pragma once

#include <cstdint>
#include <vector>

#include "schwarz/scalar.hpp"

namespace schwarz {

struct Disk {
  Cx center{0.0, 0.0};
  double radius = 0.0;

  /// Membership with a small relative slack so boundary points of an
  /// exactly-fitted disk do not fall out under rounding.
  bool contains(Cx p) const noexcept;
};

/// Smallest disk enclosing all points. Randomized incremental construction
/// (Welzl, move-to-front), expected linear time; the shuffle is driven by
/// the seed so results are reproducible. Throws InvalidInput on empty input.
Disk minimal_enclosing_disk(std::vector<Cx> points, std::uint64_t seed = 1);

}  // namespace schwarz
