#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "boxcert/rat.hpp"

namespace boxcert {

/// Finite set of strictly positive rationals presenting X.
class GeneratorSet {
 public:
  GeneratorSet() = default;
  /// Throws InvalidArgument if any value is not strictly positive.
  /// Duplicates are merged; values are kept sorted ascending.
  explicit GeneratorSet(std::vector<Rat> values);

  const std::vector<Rat>& values() const { return values_; }
  bool empty() const { return values_.empty(); }
  std::size_t size() const { return values_.size(); }
  bool contains(const Rat& v) const;
  const Rat& min() const { return values_.front(); }
  const Rat& max() const { return values_.back(); }
  std::string str() const;  // "{17,10,7}" style, ascending

  friend bool operator==(const GeneratorSet&, const GeneratorSet&) = default;

 private:
  std::vector<Rat> values_;
};

/// Membership witness: a tree whose leaves are generators and whose inner
/// nodes apply x+y or x+y+z-2min(x,y,z) to the child values.
struct Derivation {
  enum class Op { Leaf, Sum, Triple };

  Op op = Op::Leaf;
  Rat value;
  std::vector<Derivation> args;

  static Derivation leaf(Rat g);
  static Derivation sum(Derivation a, Derivation b);
  static Derivation triple(Derivation a, Derivation b, Derivation c);

  std::size_t node_count() const;
  /// Leaf values in left-to-right order.
  std::vector<Rat> leaves() const;

  friend bool operator==(const Derivation&, const Derivation&) = default;
};

const char* to_string(Derivation::Op op);
/// Compact human form, e.g. "triple(sum(1,1),3,7)".
std::string to_string(const Derivation& d);

Rat op_sum(const Rat& x, const Rat& y);
Rat op_triple(const Rat& x, const Rat& y, const Rat& z);

/// Recomputes the tree bottom-up. Throws LeafNotGenerator for a leaf outside
/// `gens` and DerivationInvalid when a stored node value or arity is wrong.
Rat verify_derivation(const Derivation& d, const GeneratorSet& gens);

/// The least subset of (0, bound] containing the generators and closed under
/// both operations whenever the result stays within the bound.
///
/// All elements are integer multiples of the gcd of the generators, so
/// saturation runs on a bit grid over those multiples.
class BoundedClosure {
 public:
  const GeneratorSet& gens() const { return gens_; }
  const Rat& bound() const { return bound_; }
  /// Ascending.
  const std::vector<Rat>& elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }
  bool contains(const Rat& v) const;
  /// Derivation recovered from provenance; generators come back as leaves.
  std::optional<Derivation> derive(const Rat& v) const;
  /// Non-empty when the request was degenerate (e.g. bound below min(gens)).
  const std::string& warning() const { return warning_; }

 private:
  friend BoundedClosure bounded_closure(const GeneratorSet&, const Rat&, std::size_t);

  struct Rule {
    Derivation::Op op;
    std::int64_t operands[3];
  };

  std::optional<std::int64_t> scaled(const Rat& v) const;
  Derivation build(std::int64_t v, std::unordered_map<std::int64_t, Derivation>& memo) const;

  GeneratorSet gens_;
  Rat bound_;
  mpq_class unit_{1};  // gcd of the generators
  std::vector<Rat> elements_;
  std::unordered_map<std::int64_t, Rule> provenance_;
  std::string warning_;
};

inline constexpr std::size_t kDefaultMaxClosureElements = 200000;

/// Throws ClosureTooLarge if saturation exceeds `max_elements` or the bound
/// spans more grid steps than the bitsets allow.
BoundedClosure bounded_closure(const GeneratorSet& gens, const Rat& bound,
                               std::size_t max_elements = kDefaultMaxClosureElements);

std::optional<Derivation> membership(const GeneratorSet& gens, const Rat& bound, const Rat& v);

}  // namespace boxcert
