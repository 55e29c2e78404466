#include "boxcert/pipeline.hpp"

#include <map>
#include <set>
#include <tuple>

#include "boxcert/digest.hpp"
#include "boxcert/errors.hpp"
#include "boxcert/json_io.hpp"

namespace boxcert {

Rat default_bound(const Partition& p) {
  Rat b = box_extent(p.outer, 1);
  for (Axis j = 2; j <= p.dim; ++j) b = max(b, box_extent(p.outer, j));
  return b;
}

Certificate certify(const Partition& p, const GeneratorSet& gens, const CertifyOptions& options) {
  const ValidationReport report = validate_partition(p);
  if (!report.ok()) throw InvalidPartition(report.summary());
  if (gens.empty()) throw HypothesisViolated(1, "HypothesisViolated: empty generator set");

  Certificate cert;
  cert.partition_sha256 = sha256_hex(canonical_json(p));
  cert.gens = gens;
  cert.bound = options.bound.value_or(default_bound(p));
  if (!cert.bound.is_positive()) throw InvalidArgument("closure", "bound must be positive");

  const BoundedClosure closure = bounded_closure(gens, cert.bound);
  cert.assignment = assign_axes(p, [&](const Rat& v) { return closure.contains(v); });

  const TrailGraph graph = build_graph(p, cert.assignment);
  require_parity(parity_audit(graph, p));

  cert.trail = extract_trail(graph, p, options.start.value_or(p.outer.lo));
  cert.y = project_to_axis(cert.trail, p, cert.assignment);
  cert.reduction = reduce(cert.y, [&](const Rat& len) {
    auto d = closure.derive(len);
    if (!d) {
      throw InvariantFailure("reduce", "step length " + len.str() + " is not in the closure");
    }
    return *std::move(d);
  });
  cert.claimed = ClaimedSide{cert.y.axis, cert.reduction.result};
  return cert;
}

namespace {

struct Checker {
  const Certificate& cert;
  const Partition& p;
  const GeneratorSet& gens;
  CheckResult result;

  bool fail(const std::string& stage, const std::string& reason) {
    result.reasons.push_back(stage + ": " + reason);
    return false;
  }

  bool partition() {
    const ValidationReport report = validate_partition(p);
    if (!report.ok()) return fail("partition", report.summary());
    if (sha256_hex(canonical_json(p)) != cert.partition_sha256) {
      return fail("digest", "partition digest does not match");
    }
    return true;
  }

  bool generators(std::optional<BoundedClosure>& closure) {
    if (!(cert.gens == gens)) return fail("gens", "certificate generators " + cert.gens.str() +
                                                      " differ from " + gens.str());
    if (gens.empty()) return fail("gens", "empty generator set");
    if (!cert.bound.is_positive()) return fail("bound", "bound is not positive");
    closure = bounded_closure(gens, cert.bound);
    return true;
  }

  bool assignment(const BoundedClosure& closure) {
    if (cert.assignment.size() != p.size()) return fail("assignment", "wrong number of entries");
    bool ok = true;
    for (BoxIndex k = 1; k <= p.size(); ++k) {
      const Axis c = cert.assignment(k);
      if (c < 1 || c > p.dim) {
        ok = fail("assignment", "box " + std::to_string(k) + " has axis out of range");
        continue;
      }
      if (!closure.contains(box_extent(p.box(k), c))) {
        ok = fail("assignment", "box " + std::to_string(k) + " extent along axis " +
                                    std::to_string(c) + " is not in the closure");
      }
      for (Axis j = 1; j < c; ++j) {
        if (closure.contains(box_extent(p.box(k), j))) {
          ok = fail("assignment", "box " + std::to_string(k) + " has a smaller qualifying axis");
          break;
        }
      }
    }
    return ok;
  }

  bool trail() {
    const Trail& t = cert.trail;
    if (t.start.dim() != p.dim || t.end.dim() != p.dim) return fail("trail", "wrong dimension");
    if (!is_corner(p.outer, t.start)) return fail("trail", "start is not an outer corner");
    if (!is_corner(p.outer, t.end) || t.end == t.start) {
      return fail("trail", "end is not a distinct outer corner");
    }

    // Incidence rebuilt from the partition: point -> (far end, box, edge id).
    using Incident = std::tuple<Point, BoxIndex, std::size_t>;
    std::map<Point, std::vector<Incident>> incidence;
    const std::size_t per_box = std::size_t{1} << (p.dim - 1);
    for (BoxIndex k = 1; k <= p.size(); ++k) {
      for (std::size_t e = 0; e < per_box; ++e) {
        auto [a, b] = edge_endpoints(p.box(k), cert.assignment(k), e);
        incidence[a].emplace_back(b, k, e);
        incidence[b].emplace_back(a, k, e);
      }
    }

    std::set<std::pair<BoxIndex, std::size_t>> used;
    Point cur = t.start;
    auto best_unused = [&](const Point& at) -> std::optional<Incident> {
      std::optional<Incident> best;
      for (const Incident& inc : incidence[at]) {
        if (used.count({std::get<1>(inc), std::get<2>(inc)})) continue;
        if (!best || inc < *best) best = inc;
      }
      return best;
    };

    for (std::size_t s = 0; s < t.steps.size(); ++s) {
      const TrailStep& step = t.steps[s];
      const std::string tag = "step " + std::to_string(s + 1);
      if (step.box < 1 || step.box > p.size() || step.edge_id >= per_box) {
        return fail("trail", tag + " names a nonexistent edge");
      }
      if (step.from != cur) return fail("trail", tag + " does not continue from the previous vertex");
      auto [a, b] = edge_endpoints(p.box(step.box), cert.assignment(step.box), step.edge_id);
      if (!((step.from == a && step.to == b) || (step.from == b && step.to == a))) {
        return fail("trail", tag + " endpoints do not match its edge");
      }
      if (used.count({step.box, step.edge_id})) return fail("trail", tag + " repeats an edge");
      const auto expected = best_unused(cur);
      if (!expected || std::get<1>(*expected) != step.box || std::get<2>(*expected) != step.edge_id) {
        return fail("trail", tag + " is not the canonical choice");
      }
      used.insert({step.box, step.edge_id});
      cur = step.to;
    }
    if (cur != t.end) return fail("trail", "last step does not reach the recorded end");
    if (best_unused(cur)) return fail("trail", "walk stops while unused edges remain");
    return true;
  }

  bool projection() {
    const Trail& t = cert.trail;
    Axis j = 0;
    for (Axis a = 1; a <= p.dim; ++a) {
      if (t.start[a] != t.end[a]) {
        j = a;
        break;
      }
    }
    if (cert.y.axis != j) return fail("projection", "axis is not the first differing axis");
    if (cert.y.length != p.outer.hi[j] - p.outer.lo[j]) return fail("projection", "length is not the outer extent");
    const bool from_lo = t.start[j] == p.outer.lo[j];
    std::vector<Rat> expected;
    for (const Point& v : t.vertices()) {
      Rat pos = from_lo ? v[j] - p.outer.lo[j] : p.outer.hi[j] - v[j];
      if (expected.empty() || expected.back() != pos) expected.push_back(std::move(pos));
    }
    if (expected != cert.y.points) return fail("projection", "points differ from the trail projection");
    return true;
  }

  bool reduction() {
    const ReductionCertificate& r = cert.reduction;
    if (!(r.input == cert.y)) return fail("reduction", "input differs from the projected sequence");
    try {
      const Rat v = replay(r, gens);
      if (v != cert.y.length) return fail("reduction", "replay value differs from the side length");
    } catch (const Error& e) {
      return fail("reduction", e.what());
    }
    if (cert.bound < r.result) return fail("bound", "result exceeds the closure bound");
    return true;
  }

  bool claimed() {
    if (cert.claimed.axis != cert.y.axis) return fail("claimed_side", "axis differs from the projection axis");
    if (cert.claimed.length != cert.reduction.result) return fail("claimed_side", "length differs from the result");
    const Axis j = cert.claimed.axis;
    if (j < 1 || j > p.dim || cert.claimed.length != box_extent(p.outer, j)) {
      return fail("claimed_side", "length is not a side of the outer box");
    }
    return true;
  }

  void run() {
    std::optional<BoundedClosure> closure;
    result.ok = partition() && generators(closure) && assignment(*closure) && trail() &&
                projection() && reduction() && claimed();
  }
};

}  // namespace

CheckResult check_certificate(const Certificate& cert, const Partition& p, const GeneratorSet& gens) {
  Checker checker{cert, p, gens, {}};
  try {
    checker.run();
  } catch (const std::exception& e) {
    checker.result.ok = false;
    checker.result.reasons.push_back(std::string("internal: ") + e.what());
  }
  return std::move(checker.result);
}

}  // namespace boxcert
