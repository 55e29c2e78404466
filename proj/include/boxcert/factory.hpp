#pragma once

#include <cstdint>
#include <utility>

#include "boxcert/closure.hpp"
#include "boxcert/geometry.hpp"

namespace boxcert {

/// Square of side x+y cut into [0,x]x[0,s] and [x,s]x[0,s].
Partition strip_partition(const Rat& x, const Rat& y);

/// Square of side s = x+y-z cut into four rectangles around a z-by-z centre:
///   R1 = [0, y-z] x [0, x]      R2 = [0, y] x [x, s]
///   R3 = [y, s]   x [x-z, s]    R4 = [y-z, s] x [0, x-z]
///   R5 = [y-z, y] x [x-z, x]
/// Requires x > z > 0 and y > z > 0.
Partition pinwheel_partition(const Rat& x, const Rat& y, const Rat& z);

/// Multiplies every box (and the outer box) of a valid 2D partition by
/// [0, L]^(n-2).
Partition lift_product(const Partition& p2d, const Rat& extra_length, std::size_t n);

struct GuillotineOptions {
  std::size_t dim = 2;
  std::size_t max_depth = 4;
  std::int64_t max_denominator = 6;
};

/// Recursive axis-orthogonal cuts at rational coordinates with bounded
/// denominators, inside [0, s]^n for a random rational s in [1, 4].
/// Deterministic per seed.
Partition random_guillotine(const GuillotineOptions& options, std::uint64_t seed);

/// Picks one side length per box (random axis per seed) and returns the
/// partition with the generator set of picked lengths.
std::pair<Partition, GeneratorSet> hypothesis_instance(const Partition& p, std::uint64_t seed);

}  // namespace boxcert
