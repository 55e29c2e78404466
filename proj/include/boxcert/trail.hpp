#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "boxcert/geometry.hpp"

namespace boxcert {

/// c(k): for each box, the axis along which its extent lies in X.
class AxisAssignment {
 public:
  AxisAssignment() = default;
  explicit AxisAssignment(std::vector<Axis> axes) : axes_(std::move(axes)) {}

  Axis operator()(BoxIndex k) const { return axes_.at(k - 1); }
  std::size_t size() const { return axes_.size(); }
  const std::vector<Axis>& axes() const { return axes_; }

  friend bool operator==(const AxisAssignment&, const AxisAssignment&) = default;

 private:
  std::vector<Axis> axes_;
};

using MemberTest = std::function<bool(const Rat&)>;

/// c(k) = smallest axis whose extent passes `member`. Throws
/// HypothesisViolated naming the first box with no qualifying side.
AxisAssignment assign_axes(const Partition& p, const MemberTest& member);

/// One segment of box k parallel to c(k). `edge_id` in [0, 2^(n-1)) encodes
/// which lo/hi choice is made on the remaining axes, lowest axis in bit 0.
struct TrailEdge {
  BoxIndex box = 0;
  std::size_t edge_id = 0;
  std::size_t u = 0;  // vertex id of the lo end along c(k)
  std::size_t v = 0;  // vertex id of the hi end
  Rat length;

  std::size_t other(std::size_t w) const { return w == u ? v : u; }
};

/// Endpoints (lo end, hi end) of edge `edge_id` of box `b` parallel to `axis`.
std::pair<Point, Point> edge_endpoints(const Box& b, Axis axis, std::size_t edge_id);

/// Multigraph over all constituent-box vertices. Vertex ids follow
/// lexicographic point order, so sorting adjacency by far-endpoint id is the
/// lexicographic tie-break.
class TrailGraph {
 public:
  const std::vector<Point>& vertices() const { return vertices_; }
  const std::vector<TrailEdge>& edges() const { return edges_; }
  /// Incident edge indices, sorted by (far endpoint, box, edge_id).
  const std::vector<std::size_t>& incident(std::size_t vertex) const { return adjacency_[vertex]; }
  std::size_t degree(std::size_t vertex) const { return adjacency_[vertex].size(); }
  std::optional<std::size_t> find(const Point& p) const;

  /// Copy with one edge removed; used to exercise the parity audit.
  TrailGraph without_edge(std::size_t edge_index) const;

 private:
  friend TrailGraph build_graph(const Partition&, const AxisAssignment&);
  void rebuild_adjacency();

  std::vector<Point> vertices_;
  std::map<Point, std::size_t> index_;
  std::vector<TrailEdge> edges_;
  std::vector<std::vector<std::size_t>> adjacency_;
};

TrailGraph build_graph(const Partition& p, const AxisAssignment& a);

struct VertexDegree {
  Point point;
  std::size_t degree = 0;
  bool outer_corner = false;
};

struct ParityReport {
  std::vector<VertexDegree> vertices;  // lexicographic order
  std::vector<Point> violations;       // vertices failing the parity rule
  std::size_t outer_corners_seen = 0;

  bool ok() const { return violations.empty(); }
  /// Fixed-width table, one row per vertex.
  std::string table() const;
};

/// Outer corners must have degree exactly 1; every other vertex even degree.
/// Missing outer corners count as degree 0 and are reported.
ParityReport parity_audit(const TrailGraph& g, const Partition& p);
/// Throws ParityViolation listing offending vertices if the report is not ok.
void require_parity(const ParityReport& report);

struct TrailStep {
  BoxIndex box = 0;
  std::size_t edge_id = 0;
  Point from;
  Point to;

  friend bool operator==(const TrailStep&, const TrailStep&) = default;
};

struct Trail {
  Point start;
  std::vector<TrailStep> steps;
  Point end;

  /// start followed by every step's destination.
  std::vector<Point> vertices() const;

  friend bool operator==(const Trail&, const Trail&) = default;
};

/// Greedy edge-simple walk from an outer corner. At every vertex the unused
/// edge with the smallest (far endpoint, box, edge_id) is taken. Throws
/// InvalidArgument if `start` is not an outer corner and StuckAtEvenVertex if
/// the walk halts anywhere but another outer corner.
Trail extract_trail(const TrailGraph& g, const Partition& p, const Point& start);

struct YSequence {
  Axis axis = 1;
  Rat length;
  std::vector<Rat> points;

  friend bool operator==(const YSequence&, const YSequence&) = default;
};

/// Smallest axis on which the trail's two end corners differ.
Axis projection_axis(const Trail& t);

/// Projects the trail onto the side of P along projection_axis(t), measured
/// from the start corner, dropping zero-length steps.
YSequence project_to_axis(const Trail& t, const Partition& p, const AxisAssignment& a);

}  // namespace boxcert
