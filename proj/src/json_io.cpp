#include "boxcert/json_io.hpp"

#include "boxcert/errors.hpp"

namespace boxcert {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object()) throw ParseError(std::string("expected an object holding \"") + key + "\"");
  auto it = j.find(key);
  if (it == j.end()) throw ParseError(std::string("missing field \"") + key + "\"");
  return *it;
}

const Json& array_field(const Json& j, const char* key) {
  const Json& a = field(j, key);
  if (!a.is_array()) throw ParseError(std::string("field \"") + key + "\" must be an array");
  return a;
}

std::size_t index_field(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<std::int64_t>() >= 0)) {
    throw ParseError(std::string("field \"") + key + "\" must be a non-negative integer");
  }
  return v.get<std::size_t>();
}

std::string string_field(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_string()) throw ParseError(std::string("field \"") + key + "\" must be a string");
  return v.get<std::string>();
}

Json rats_to_json(const std::vector<Rat>& values) {
  Json a = Json::array();
  for (const auto& v : values) a.push_back(to_json(v));
  return a;
}

std::vector<Rat> rats_from_json(const Json& a) {
  if (!a.is_array()) throw ParseError("expected an array of rationals");
  std::vector<Rat> out;
  out.reserve(a.size());
  for (const auto& v : a) out.push_back(rat_from_json(v));
  return out;
}

Json box_to_json(const Box& b) { return Json{{"lo", to_json(b.lo)}, {"hi", to_json(b.hi)}}; }

Box box_from_json(const Json& j, std::size_t dim) {
  return Box{point_from_json(field(j, "lo"), dim), point_from_json(field(j, "hi"), dim)};
}

Json step_to_json(const RewriteStep& s) {
  Json j;
  j["kind"] = to_string(s.kind);
  j["i"] = s.i;
  if (s.kind == RewriteStep::Kind::Loop) j["j"] = s.j;
  j["lengths"] = rats_to_json(s.lengths);
  if (s.kind != RewriteStep::Kind::Loop) j["merged"] = to_json(s.merged);
  return j;
}

RewriteStep step_from_json(const Json& j) {
  RewriteStep s;
  const std::string kind = string_field(j, "kind");
  if (kind == "loop") {
    s.kind = RewriteStep::Kind::Loop;
    s.j = index_field(j, "j");
  } else if (kind == "sum" || kind == "triple") {
    s.kind = kind == "sum" ? RewriteStep::Kind::Sum : RewriteStep::Kind::Triple;
    s.merged = rat_from_json(field(j, "merged"));
  } else {
    throw ParseError("unknown rewrite kind \"" + kind + "\"");
  }
  s.i = index_field(j, "i");
  s.lengths = rats_from_json(field(j, "lengths"));
  return s;
}

}  // namespace

Rat rat_from_json(const Json& j) {
  if (j.is_number_integer()) {
    if (j.is_number_unsigned()) {
      return Rat(mpq_class(mpz_class(std::to_string(j.get<std::uint64_t>()), 10)));
    }
    return Rat(j.get<std::int64_t>());
  }
  if (j.is_string()) return Rat::parse(j.get<std::string>());
  throw ParseError("expected an integer or a \"p/q\" string, got " + j.dump());
}

Json to_json(const Rat& r) { return r.str(); }

Json to_json(const Point& p) { return rats_to_json(p.coords); }

Point point_from_json(const Json& j, std::size_t dim) {
  Point p{rats_from_json(j)};
  if (p.dim() != dim) {
    throw ParseError("point " + j.dump() + " does not have dimension " + std::to_string(dim));
  }
  return p;
}

Json to_json(const Partition& p) {
  Json boxes = Json::array();
  for (const Box& b : p.boxes) boxes.push_back(box_to_json(b));
  return Json{{"dim", p.dim}, {"outer", box_to_json(p.outer)}, {"boxes", std::move(boxes)}};
}

Partition partition_from_json(const Json& j) {
  Partition p;
  p.dim = index_field(j, "dim");
  if (p.dim < 2) throw ParseError("dimension must be at least 2");
  p.outer = box_from_json(field(j, "outer"), p.dim);
  for (const Json& b : array_field(j, "boxes")) p.boxes.push_back(box_from_json(b, p.dim));
  return p;
}

Json to_json(const GeneratorSpec& g) {
  Json j{{"gens", rats_to_json(g.gens.values())}};
  if (g.bound) j["bound"] = to_json(*g.bound);
  return j;
}

GeneratorSpec generator_spec_from_json(const Json& j) {
  GeneratorSpec g;
  try {
    g.gens = GeneratorSet(rats_from_json(field(j, "gens")));
  } catch (const InvalidArgument& e) {
    throw ParseError(e.what());
  }
  if (j.contains("bound")) g.bound = rat_from_json(j.at("bound"));
  return g;
}

Json to_json(const Derivation& d) {
  Json args = Json::array();
  for (const auto& a : d.args) args.push_back(to_json(a));
  return Json{{"op", to_string(d.op)}, {"value", to_json(d.value)}, {"args", std::move(args)}};
}

Derivation derivation_from_json(const Json& j) {
  Derivation d;
  const std::string op = string_field(j, "op");
  if (op == "leaf") {
    d.op = Derivation::Op::Leaf;
  } else if (op == "sum") {
    d.op = Derivation::Op::Sum;
  } else if (op == "triple") {
    d.op = Derivation::Op::Triple;
  } else {
    throw ParseError("unknown derivation op \"" + op + "\"");
  }
  d.value = rat_from_json(field(j, "value"));
  if (j.contains("args")) {
    for (const Json& a : array_field(j, "args")) d.args.push_back(derivation_from_json(a));
  }
  return d;
}

Json to_json(const ReductionCertificate& r) {
  Json steps = Json::array();
  for (const auto& s : r.steps) steps.push_back(step_to_json(s));
  return Json{{"y", rats_to_json(r.input.points)},
              {"steps", std::move(steps)},
              {"result", to_json(r.result)},
              {"derivation", to_json(r.derivation)}};
}

ReductionCertificate reduction_from_json(const Json& j, const YSequence& header) {
  ReductionCertificate r;
  r.input.axis = header.axis;
  r.input.length = header.length;
  r.input.points = rats_from_json(field(j, "y"));
  for (const Json& s : array_field(j, "steps")) r.steps.push_back(step_from_json(s));
  r.result = rat_from_json(field(j, "result"));
  r.derivation = derivation_from_json(field(j, "derivation"));
  return r;
}

Json to_json(const Certificate& c) {
  Json steps = Json::array();
  for (const auto& s : c.trail.steps) {
    steps.push_back(Json{{"box", s.box}, {"edge", s.edge_id}, {"from", to_json(s.from)}, {"to", to_json(s.to)}});
  }
  Json assignment = Json::array();
  for (Axis a : c.assignment.axes()) assignment.push_back(a);
  return Json{
      {"partition_sha256", c.partition_sha256},
      {"gens", rats_to_json(c.gens.values())},
      {"bound", to_json(c.bound)},
      {"assignment", std::move(assignment)},
      {"trail", Json{{"start", to_json(c.trail.start)}, {"steps", std::move(steps)}, {"end", to_json(c.trail.end)}}},
      {"y", Json{{"axis", c.y.axis}, {"length", to_json(c.y.length)}, {"points", rats_to_json(c.y.points)}}},
      {"reduction", to_json(c.reduction)},
      {"claimed_side", Json{{"axis", c.claimed.axis}, {"length", to_json(c.claimed.length)}}},
  };
}

Certificate certificate_from_json(const Json& j) {
  Certificate c;
  c.partition_sha256 = string_field(j, "partition_sha256");
  try {
    c.gens = GeneratorSet(rats_from_json(field(j, "gens")));
  } catch (const InvalidArgument& e) {
    throw ParseError(e.what());
  }
  c.bound = rat_from_json(field(j, "bound"));

  std::vector<Axis> axes;
  for (const Json& a : array_field(j, "assignment")) {
    if (!a.is_number_unsigned()) throw ParseError("assignment entries must be axis numbers");
    axes.push_back(a.get<Axis>());
  }
  c.assignment = AxisAssignment(std::move(axes));

  const Json& trail = field(j, "trail");
  const Json& start = field(trail, "start");
  const std::size_t dim = start.is_array() ? start.size() : 0;
  c.trail.start = point_from_json(start, dim);
  c.trail.end = point_from_json(field(trail, "end"), dim);
  for (const Json& s : array_field(trail, "steps")) {
    c.trail.steps.push_back(TrailStep{index_field(s, "box"), index_field(s, "edge"),
                                      point_from_json(field(s, "from"), dim),
                                      point_from_json(field(s, "to"), dim)});
  }

  const Json& y = field(j, "y");
  c.y.axis = index_field(y, "axis");
  c.y.length = rat_from_json(field(y, "length"));
  c.y.points = rats_from_json(field(y, "points"));

  c.reduction = reduction_from_json(field(j, "reduction"), c.y);

  const Json& claimed = field(j, "claimed_side");
  c.claimed.axis = index_field(claimed, "axis");
  c.claimed.length = rat_from_json(field(claimed, "length"));
  return c;
}

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
}

Partition parse_partition(std::string_view text) {
  try {
    return partition_from_json(parse_json(text));
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(e.what());
  }
}

Certificate parse_certificate(std::string_view text) {
  try {
    return certificate_from_json(parse_json(text));
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(e.what());
  }
}

std::string canonical_json(const Partition& p) { return to_json(p).dump(); }

std::string pretty_json(const Json& j) { return j.dump(2) + "\n"; }

std::vector<Rat> parse_rat_list(std::string_view text) {
  std::vector<Rat> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t comma = text.find(',', pos);
    std::string_view item = text.substr(pos, comma == std::string_view::npos ? text.npos : comma - pos);
    while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
    while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
    if (item.empty()) throw ParseError("empty entry in list \"" + std::string(text) + "\"");
    out.push_back(Rat::parse(item));
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return out;
}

}  // namespace boxcert
