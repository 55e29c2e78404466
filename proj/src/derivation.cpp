#include <algorithm>

#include "boxcert/closure.hpp"
#include "boxcert/errors.hpp"

namespace boxcert {

GeneratorSet::GeneratorSet(std::vector<Rat> values) : values_(std::move(values)) {
  for (const auto& v : values_) {
    if (!v.is_positive()) {
      throw InvalidArgument("generators", "generator " + v.str() + " is not positive");
    }
  }
  std::sort(values_.begin(), values_.end());
  values_.erase(std::unique(values_.begin(), values_.end()), values_.end());
}

bool GeneratorSet::contains(const Rat& v) const {
  return std::binary_search(values_.begin(), values_.end(), v);
}

std::string GeneratorSet::str() const {
  std::string s = "{";
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (i) s += ",";
    s += values_[i].str();
  }
  return s + "}";
}

Rat op_sum(const Rat& x, const Rat& y) {
  if (!x.is_positive() || !y.is_positive()) {
    throw InvalidArgument("op_sum", "operands must be positive");
  }
  return x + y;
}

Rat op_triple(const Rat& x, const Rat& y, const Rat& z) {
  if (!x.is_positive() || !y.is_positive() || !z.is_positive()) {
    throw InvalidArgument("op_triple", "operands must be positive");
  }
  const Rat& m = min(min(x, y), z);
  return x + y + z - m - m;
}

Derivation Derivation::leaf(Rat g) { return Derivation{Op::Leaf, std::move(g), {}}; }

Derivation Derivation::sum(Derivation a, Derivation b) {
  Rat v = op_sum(a.value, b.value);
  return Derivation{Op::Sum, std::move(v), {std::move(a), std::move(b)}};
}

Derivation Derivation::triple(Derivation a, Derivation b, Derivation c) {
  Rat v = op_triple(a.value, b.value, c.value);
  return Derivation{Op::Triple, std::move(v), {std::move(a), std::move(b), std::move(c)}};
}

std::size_t Derivation::node_count() const {
  std::size_t n = 1;
  for (const auto& a : args) n += a.node_count();
  return n;
}

std::vector<Rat> Derivation::leaves() const {
  if (op == Op::Leaf) return {value};
  std::vector<Rat> out;
  for (const auto& a : args) {
    auto sub = a.leaves();
    out.insert(out.end(), sub.begin(), sub.end());
  }
  return out;
}

const char* to_string(Derivation::Op op) {
  switch (op) {
    case Derivation::Op::Leaf: return "leaf";
    case Derivation::Op::Sum: return "sum";
    case Derivation::Op::Triple: return "triple";
  }
  return "?";
}

std::string to_string(const Derivation& d) {
  if (d.op == Derivation::Op::Leaf) return d.value.str();
  std::string s = std::string(to_string(d.op)) + "(";
  for (std::size_t i = 0; i < d.args.size(); ++i) {
    if (i) s += ",";
    s += to_string(d.args[i]);
  }
  return s + ")";
}

Rat verify_derivation(const Derivation& d, const GeneratorSet& gens) {
  Rat computed;
  switch (d.op) {
    case Derivation::Op::Leaf:
      if (!d.args.empty()) throw DerivationInvalid("leaf node with children");
      if (!gens.contains(d.value)) {
        throw LeafNotGenerator("LeafNotGenerator(" + d.value.str() + ")");
      }
      return d.value;
    case Derivation::Op::Sum: {
      if (d.args.size() != 2) throw DerivationInvalid("sum node needs 2 children");
      const Rat a = verify_derivation(d.args[0], gens);
      const Rat b = verify_derivation(d.args[1], gens);
      computed = op_sum(a, b);
      break;
    }
    case Derivation::Op::Triple: {
      if (d.args.size() != 3) throw DerivationInvalid("triple node needs 3 children");
      const Rat a = verify_derivation(d.args[0], gens);
      const Rat b = verify_derivation(d.args[1], gens);
      const Rat c = verify_derivation(d.args[2], gens);
      computed = op_triple(a, b, c);
      break;
    }
  }
  if (computed != d.value) {
    throw DerivationInvalid(std::string(to_string(d.op)) + " node claims " + d.value.str() +
                            " but children give " + computed.str());
  }
  return computed;
}

}  // namespace boxcert
