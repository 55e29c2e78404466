#include "boxcert/geometry.hpp"

#include <sstream>

#include "boxcert/errors.hpp"

namespace boxcert {

std::string to_string(const Point& p) {
  std::string s = "(";
  for (std::size_t i = 0; i < p.coords.size(); ++i) {
    if (i) s += ",";
    s += p.coords[i].str();
  }
  return s + ")";
}

std::string to_string(const Box& b) {
  std::string s;
  for (Axis j = 1; j <= b.dim(); ++j) {
    if (j > 1) s += "x";
    s += "[" + b.lo[j].str() + "," + b.hi[j].str() + "]";
  }
  return s;
}

bool Box::is_nondegenerate() const {
  if (lo.dim() != hi.dim() || lo.dim() == 0) return false;
  for (Axis j = 1; j <= dim(); ++j) {
    if (!(lo[j] < hi[j])) return false;
  }
  return true;
}

Rat box_extent(const Box& b, Axis j) {
  if (j < 1 || j > b.dim()) {
    throw InvalidArgument("box_extent", "axis " + std::to_string(j) +
                                            " out of range for dimension " +
                                            std::to_string(b.dim()));
  }
  return b.hi[j] - b.lo[j];
}

Rat box_volume(const Box& b) {
  Rat v(1);
  for (Axis j = 1; j <= b.dim(); ++j) v *= box_extent(b, j);
  return v;
}

bool contains(const Box& outer, const Box& inner) {
  if (outer.dim() != inner.dim()) return false;
  for (Axis j = 1; j <= outer.dim(); ++j) {
    if (inner.lo[j] < outer.lo[j] || outer.hi[j] < inner.hi[j]) return false;
  }
  return true;
}

bool contains(const Box& b, const Point& p) {
  if (b.dim() != p.dim()) return false;
  for (Axis j = 1; j <= b.dim(); ++j) {
    if (p[j] < b.lo[j] || b.hi[j] < p[j]) return false;
  }
  return true;
}

bool interiors_disjoint(const Box& a, const Box& b) {
  if (a.dim() != b.dim()) {
    throw InvalidArgument("interiors_disjoint", "dimension mismatch");
  }
  for (Axis j = 1; j <= a.dim(); ++j) {
    if (a.hi[j] <= b.lo[j] || b.hi[j] <= a.lo[j]) return true;
  }
  return false;
}

bool is_corner(const Box& b, const Point& p) {
  if (b.dim() != p.dim()) return false;
  for (Axis j = 1; j <= b.dim(); ++j) {
    if (p[j] != b.lo[j] && p[j] != b.hi[j]) return false;
  }
  return true;
}

std::vector<Point> corners(const Box& b) {
  const std::size_t n = b.dim();
  std::vector<Point> out;
  out.reserve(std::size_t{1} << n);
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    Point p;
    p.coords.reserve(n);
    for (Axis j = 1; j <= n; ++j) {
      p.coords.push_back((mask >> (j - 1)) & 1U ? b.hi[j] : b.lo[j]);
    }
    out.push_back(std::move(p));
  }
  return out;
}

std::string ValidationReport::summary() const {
  std::ostringstream os;
  if (ok()) {
    os << "OK: " << box_count << " boxes, volume " << outer_volume;
    return os.str();
  }
  os << "INVALID: " << defects.size() << " defect(s)";
  for (const auto& d : defects) os << "\n  " << d.message;
  return os.str();
}

ValidationReport validate_partition(const Partition& p) {
  ValidationReport report;
  report.box_count = p.boxes.size();
  auto add = [&](DefectKind kind, BoxIndex a, BoxIndex b, std::string msg) {
    report.defects.push_back(Defect{kind, a, b, std::move(msg)});
  };

  if (p.dim < 2) add(DefectKind::DimensionMismatch, 0, 0, "dimension must be at least 2");
  if (p.outer.lo.dim() != p.dim || p.outer.hi.dim() != p.dim) {
    add(DefectKind::DimensionMismatch, 0, 0, "outer box does not have dimension " +
                                                 std::to_string(p.dim));
    return report;
  }
  if (!p.outer.is_nondegenerate()) {
    add(DefectKind::Degenerate, 0, 0, "outer box is degenerate: " + to_string(p.outer));
    return report;
  }
  report.outer_volume = box_volume(p.outer);
  if (p.boxes.empty()) {
    add(DefectKind::Empty, 0, 0, "partition has no boxes");
    return report;
  }

  // Boxes with a shape defect are excluded from the pairwise checks.
  std::vector<bool> usable(p.boxes.size(), true);
  for (BoxIndex k = 1; k <= p.boxes.size(); ++k) {
    const Box& b = p.box(k);
    const std::string tag = "box k=" + std::to_string(k);
    if (b.lo.dim() != p.dim || b.hi.dim() != p.dim) {
      add(DefectKind::DimensionMismatch, k, 0, tag + " has wrong dimension");
      usable[k - 1] = false;
      continue;
    }
    if (!b.is_nondegenerate()) {
      add(DefectKind::Degenerate, k, 0, tag + " is degenerate: " + to_string(b));
      usable[k - 1] = false;
      continue;
    }
    report.boxes_volume += box_volume(b);
    if (!contains(p.outer, b)) {
      add(DefectKind::NotContained, k, 0,
          tag + " " + to_string(b) + " is not inside outer " + to_string(p.outer));
    }
  }

  for (BoxIndex a = 1; a <= p.boxes.size(); ++a) {
    if (!usable[a - 1]) continue;
    for (BoxIndex b = a + 1; b <= p.boxes.size(); ++b) {
      if (!usable[b - 1]) continue;
      const Box& ba = p.box(a);
      const Box& bb = p.box(b);
      if (interiors_disjoint(ba, bb)) continue;
      Box witness{ba.lo, ba.hi};
      for (Axis j = 1; j <= p.dim; ++j) {
        witness.lo[j] = max(ba.lo[j], bb.lo[j]);
        witness.hi[j] = min(ba.hi[j], bb.hi[j]);
      }
      add(DefectKind::InteriorOverlap, a, b,
          "interior overlap (k=" + std::to_string(a) + ",k=" + std::to_string(b) +
              ") on " + to_string(witness));
    }
  }

  if (report.defects.empty() && report.boxes_volume != report.outer_volume) {
    add(DefectKind::VolumeMismatch, 0, 0,
        "volume mismatch: boxes sum to " + report.boxes_volume.str() + ", outer is " +
            report.outer_volume.str());
  }
  return report;
}

}  // namespace boxcert
