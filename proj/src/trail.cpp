#include "boxcert/trail.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

#include "boxcert/errors.hpp"

namespace boxcert {

AxisAssignment assign_axes(const Partition& p, const MemberTest& member) {
  std::vector<Axis> axes;
  axes.reserve(p.size());
  for (BoxIndex k = 1; k <= p.size(); ++k) {
    const Box& b = p.box(k);
    Axis chosen = 0;
    for (Axis j = 1; j <= p.dim; ++j) {
      if (member(box_extent(b, j))) {
        chosen = j;
        break;
      }
    }
    if (chosen == 0) {
      throw HypothesisViolated(k, "HypothesisViolated: box k=" + std::to_string(k) + " " +
                                      to_string(b) + " has no side with length in X");
    }
    axes.push_back(chosen);
  }
  return AxisAssignment(std::move(axes));
}

std::pair<Point, Point> edge_endpoints(const Box& b, Axis axis, std::size_t edge_id) {
  Point lo_end;
  lo_end.coords.reserve(b.dim());
  std::size_t bit = 0;
  for (Axis j = 1; j <= b.dim(); ++j) {
    if (j == axis) {
      lo_end.coords.push_back(b.lo[j]);
      continue;
    }
    lo_end.coords.push_back((edge_id >> bit) & 1U ? b.hi[j] : b.lo[j]);
    ++bit;
  }
  Point hi_end = lo_end;
  hi_end[axis] = b.hi[axis];
  return {std::move(lo_end), std::move(hi_end)};
}

std::optional<std::size_t> TrailGraph::find(const Point& p) const {
  auto it = index_.find(p);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

void TrailGraph::rebuild_adjacency() {
  adjacency_.assign(vertices_.size(), {});
  for (std::size_t e = 0; e < edges_.size(); ++e) {
    adjacency_[edges_[e].u].push_back(e);
    adjacency_[edges_[e].v].push_back(e);
  }
  for (std::size_t w = 0; w < adjacency_.size(); ++w) {
    auto key = [&](std::size_t e) {
      const TrailEdge& edge = edges_[e];
      return std::tuple(edge.other(w), edge.box, edge.edge_id);
    };
    std::sort(adjacency_[w].begin(), adjacency_[w].end(),
              [&](std::size_t a, std::size_t b) { return key(a) < key(b); });
  }
}

TrailGraph TrailGraph::without_edge(std::size_t edge_index) const {
  TrailGraph g = *this;
  g.edges_.erase(g.edges_.begin() + static_cast<std::ptrdiff_t>(edge_index));
  g.rebuild_adjacency();
  return g;
}

TrailGraph build_graph(const Partition& p, const AxisAssignment& a) {
  if (a.size() != p.size()) {
    throw InvalidArgument("build_graph", "assignment does not cover every box");
  }
  TrailGraph g;
  for (const Box& b : p.boxes) {
    for (Point& c : corners(b)) g.index_.emplace(std::move(c), 0);
  }
  g.vertices_.reserve(g.index_.size());
  for (auto& [point, id] : g.index_) {
    id = g.vertices_.size();
    g.vertices_.push_back(point);
  }

  const std::size_t per_box = std::size_t{1} << (p.dim - 1);
  g.edges_.reserve(p.size() * per_box);
  for (BoxIndex k = 1; k <= p.size(); ++k) {
    const Box& b = p.box(k);
    const Axis axis = a(k);
    const Rat length = box_extent(b, axis);
    for (std::size_t e = 0; e < per_box; ++e) {
      auto [lo_end, hi_end] = edge_endpoints(b, axis, e);
      g.edges_.push_back(TrailEdge{k, e, g.index_.at(lo_end), g.index_.at(hi_end), length});
    }
  }
  g.rebuild_adjacency();
  return g;
}

std::string ParityReport::table() const {
  std::ostringstream os;
  os << std::left << std::setw(32) << "vertex" << std::setw(8) << "degree"
     << "role\n";
  for (const auto& v : vertices) {
    const bool bad = std::find(violations.begin(), violations.end(), v.point) != violations.end();
    os << std::left << std::setw(32) << to_string(v.point) << std::setw(8) << v.degree
       << (v.outer_corner ? "corner" : "inner") << (bad ? "  VIOLATION" : "") << '\n';
  }
  return os.str();
}

ParityReport parity_audit(const TrailGraph& g, const Partition& p) {
  ParityReport report;
  for (std::size_t w = 0; w < g.vertices().size(); ++w) {
    VertexDegree vd{g.vertices()[w], g.degree(w), is_corner(p.outer, g.vertices()[w])};
    if (vd.outer_corner) {
      ++report.outer_corners_seen;
      if (vd.degree != 1) report.violations.push_back(vd.point);
    } else if (vd.degree % 2 != 0) {
      report.violations.push_back(vd.point);
    }
    report.vertices.push_back(std::move(vd));
  }
  for (const Point& c : corners(p.outer)) {
    if (!g.find(c)) {
      report.violations.push_back(c);
      report.vertices.push_back(VertexDegree{c, 0, true});
    }
  }
  return report;
}

void require_parity(const ParityReport& report) {
  if (report.ok()) return;
  std::string msg = "ParityViolation at";
  for (const auto& v : report.violations) msg += " " + to_string(v);
  throw ParityViolation(msg);
}

std::vector<Point> Trail::vertices() const {
  std::vector<Point> out{start};
  for (const auto& s : steps) out.push_back(s.to);
  return out;
}

Trail extract_trail(const TrailGraph& g, const Partition& p, const Point& start) {
  if (!is_corner(p.outer, start)) {
    throw InvalidArgument("extract_trail", "start " + to_string(start) +
                                               " is not a corner of the outer box");
  }
  const auto start_id = g.find(start);
  if (!start_id) {
    throw StuckAtEvenVertex("start corner " + to_string(start) + " is not a graph vertex");
  }

  Trail t;
  t.start = start;
  std::vector<bool> used(g.edges().size(), false);
  std::size_t cur = *start_id;
  for (;;) {
    const auto& inc = g.incident(cur);
    auto next = std::find_if(inc.begin(), inc.end(), [&](std::size_t e) { return !used[e]; });
    if (next == inc.end()) break;
    used[*next] = true;
    const TrailEdge& edge = g.edges()[*next];
    const std::size_t to = edge.other(cur);
    t.steps.push_back(TrailStep{edge.box, edge.edge_id, g.vertices()[cur], g.vertices()[to]});
    cur = to;
  }
  t.end = g.vertices()[cur];
  if (cur == *start_id || !is_corner(p.outer, t.end)) {
    throw StuckAtEvenVertex("StuckAtEvenVertex: walk from " + to_string(start) +
                            " halted at " + to_string(t.end) + " after " +
                            std::to_string(t.steps.size()) + " steps");
  }
  return t;
}

Axis projection_axis(const Trail& t) {
  for (Axis j = 1; j <= t.start.dim(); ++j) {
    if (t.start[j] != t.end[j]) return j;
  }
  throw InvalidArgument("project_to_axis", "trail starts and ends at the same point");
}

YSequence project_to_axis(const Trail& t, const Partition& p, const AxisAssignment& a) {
  YSequence y;
  y.axis = projection_axis(t);
  const Axis j = y.axis;
  y.length = box_extent(p.outer, j);
  const bool from_lo = t.start[j] == p.outer.lo[j];
  auto position = [&](const Point& q) { return from_lo ? q[j] - p.outer.lo[j] : p.outer.hi[j] - q[j]; };

  y.points.push_back(position(t.start));
  for (const TrailStep& s : t.steps) {
    Rat pos = position(s.to);
    if (pos == y.points.back()) continue;
    if (a(s.box) != j || abs(pos - y.points.back()) != box_extent(p.box(s.box), j)) {
      throw InvariantFailure("project_to_axis", "step along box k=" + std::to_string(s.box) +
                                                    " moves along axis " + std::to_string(j) +
                                                    " but c(k)=" + std::to_string(a(s.box)));
    }
    y.points.push_back(std::move(pos));
  }
  return y;
}

}  // namespace boxcert
