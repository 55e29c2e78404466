#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "boxcert/rat.hpp"

namespace boxcert {

// Axes and box indices are 1-based throughout the public API: axis j is in
// [1, dim], box k is in [1, K].
using Axis = std::size_t;
using BoxIndex = std::size_t;

struct Point {
  std::vector<Rat> coords;

  std::size_t dim() const { return coords.size(); }
  /// 1-based coordinate access.
  const Rat& operator[](Axis j) const { return coords[j - 1]; }
  Rat& operator[](Axis j) { return coords[j - 1]; }

  friend bool operator==(const Point&, const Point&) = default;
  friend auto operator<=>(const Point&, const Point&) = default;
};

std::string to_string(const Point& p);

/// Axis-aligned box [lo, hi]. Construction does not validate; raw input is
/// checked by validate_partition so defects can be reported as data.
struct Box {
  Point lo;
  Point hi;

  std::size_t dim() const { return lo.dim(); }
  bool is_nondegenerate() const;

  friend bool operator==(const Box&, const Box&) = default;
};

std::string to_string(const Box& b);

struct Partition {
  std::size_t dim = 0;
  Box outer;
  std::vector<Box> boxes;

  std::size_t size() const { return boxes.size(); }
  /// 1-based box access mirroring P_k.
  const Box& box(BoxIndex k) const { return boxes.at(k - 1); }

  friend bool operator==(const Partition&, const Partition&) = default;
};

Rat box_extent(const Box& b, Axis j);
Rat box_volume(const Box& b);
bool contains(const Box& outer, const Box& inner);
bool contains(const Box& b, const Point& p);
bool interiors_disjoint(const Box& a, const Box& b);

/// True iff every coordinate of p equals the matching lo or hi of b.
bool is_corner(const Box& b, const Point& p);
/// All 2^n corners of b, in mask order (bit j-1 set selects hi on axis j).
std::vector<Point> corners(const Box& b);

enum class DefectKind {
  Empty,
  DimensionMismatch,
  Degenerate,
  NotContained,
  InteriorOverlap,
  VolumeMismatch,
};

struct Defect {
  DefectKind kind;
  BoxIndex first = 0;   // 0 when the defect is not tied to a box
  BoxIndex second = 0;  // overlap partner
  std::string message;
};

struct ValidationReport {
  std::vector<Defect> defects;
  std::size_t box_count = 0;
  Rat outer_volume;
  Rat boxes_volume;

  bool ok() const { return defects.empty(); }
  std::string summary() const;
};

/// Checks containment, pairwise interior disjointness, nondegeneracy and
/// the exact volume sum. Never throws for geometric defects.
ValidationReport validate_partition(const Partition& p);

}  // namespace boxcert
