#include <algorithm>
#include <unordered_set>

#include "boxcert/closure.hpp"
#include "boxcert/errors.hpp"

namespace boxcert {

namespace {

// Grid points are kept as bits; 2^26 of them is 8 MiB per bitset.
constexpr std::int64_t kMaxGrid = std::int64_t{1} << 26;

std::optional<std::int64_t> to_int64(const mpz_class& z) {
  if (!z.fits_slong_p()) return std::nullopt;
  return static_cast<std::int64_t>(z.get_si());
}

class Bits {
 public:
  explicit Bits(std::int64_t size) : w_(static_cast<std::size_t>(size / 64 + 1), 0) {}

  bool test(std::int64_t i) const { return (w_[static_cast<std::size_t>(i >> 6)] >> (i & 63)) & 1; }
  void set(std::int64_t i) { w_[static_cast<std::size_t>(i >> 6)] |= std::uint64_t{1} << (i & 63); }
  std::size_t words() const { return w_.size(); }
  std::uint64_t word(std::size_t k) const { return w_[k]; }

  // 64 bits starting at bit `pos`; zero outside the array.
  std::uint64_t window(std::int64_t pos) const {
    const std::int64_t wi = pos >= 0 ? pos / 64 : -((-pos + 63) / 64);
    const int b = static_cast<int>(pos - wi * 64);
    const std::uint64_t lo = at(wi), hi = at(wi + 1);
    return b == 0 ? lo : (lo >> b) | (hi << (64 - b));
  }

 private:
  std::uint64_t at(std::int64_t k) const {
    return k < 0 || k >= static_cast<std::int64_t>(w_.size()) ? 0 : w_[static_cast<std::size_t>(k)];
  }

  std::vector<std::uint64_t> w_;
};

// Calls on_new(i) for each i in [lo, limit] with src[i + offset] set and
// skip[i] clear, in ascending order.
template <class F>
void scan_shifted(const Bits& src, std::int64_t offset, const Bits& skip, std::int64_t lo,
                  std::int64_t limit, F&& on_new) {
  for (std::size_t k = static_cast<std::size_t>(lo / 64); k < skip.words(); ++k) {
    std::uint64_t m = src.window(static_cast<std::int64_t>(k) * 64 + offset) & ~skip.word(k);
    while (m) {
      const std::int64_t i = static_cast<std::int64_t>(k) * 64 + __builtin_ctzll(m);
      m &= m - 1;
      if (i > limit) return;
      if (i >= lo) on_new(i);
    }
  }
}

}  // namespace

std::optional<std::int64_t> BoundedClosure::scaled(const Rat& v) const {
  mpq_class s = v.raw() / unit_;
  s.canonicalize();
  if (s.get_den() != 1) return std::nullopt;
  return to_int64(s.get_num());
}

bool BoundedClosure::contains(const Rat& v) const {
  return std::binary_search(elements_.begin(), elements_.end(), v);
}

Derivation BoundedClosure::build(std::int64_t v,
                                 std::unordered_map<std::int64_t, Derivation>& memo) const {
  if (auto it = memo.find(v); it != memo.end()) return it->second;
  const Rule& rule = provenance_.at(v);
  Derivation d;
  switch (rule.op) {
    case Derivation::Op::Leaf:
      d = Derivation::leaf(Rat(mpq_class(mpz_class(static_cast<long>(v)) * unit_)));
      break;
    case Derivation::Op::Sum:
      d = Derivation::sum(build(rule.operands[0], memo), build(rule.operands[1], memo));
      break;
    case Derivation::Op::Triple:
      d = Derivation::triple(build(rule.operands[0], memo), build(rule.operands[1], memo),
                             build(rule.operands[2], memo));
      break;
  }
  memo.emplace(v, d);
  return d;
}

std::optional<Derivation> BoundedClosure::derive(const Rat& v) const {
  if (!contains(v)) return std::nullopt;
  const auto s = scaled(v);
  if (!s) return std::nullopt;
  std::unordered_map<std::int64_t, Derivation> memo;
  return build(*s, memo);
}

BoundedClosure bounded_closure(const GeneratorSet& gens, const Rat& bound,
                               std::size_t max_elements) {
  BoundedClosure out;
  out.gens_ = gens;
  out.bound_ = bound;
  if (gens.empty()) {
    out.warning_ = "empty generator set";
    return out;
  }
  if (bound < gens.min()) {
    out.warning_ = "bound " + bound.str() + " is below the smallest generator " +
                   gens.min().str();
    return out;
  }

  // Work in units of gcd(gens): every element is an integer number of them.
  mpz_class num_gcd = 0, den_lcm = 1;
  for (const auto& g : gens.values()) {
    mpz_class n = g.numerator(), d = g.denominator();
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), n.get_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), d.get_mpz_t());
  }
  out.unit_ = mpq_class(num_gcd, den_lcm);
  out.unit_.canonicalize();
  mpz_class limit_z;
  {
    mpq_class b = bound.raw() / out.unit_;
    mpz_fdiv_q(limit_z.get_mpz_t(), b.get_num_mpz_t(), b.get_den_mpz_t());
  }
  const auto limit_opt = to_int64(limit_z);
  if (!limit_opt || *limit_opt > kMaxGrid) {
    throw ClosureTooLarge("bound " + bound.str() + " spans " + limit_z.get_str() +
                          " grid steps of " + Rat(out.unit_).str() + ", more than " +
                          std::to_string(kMaxGrid));
  }
  const std::int64_t limit = *limit_opt;
  using Rule = BoundedClosure::Rule;

  Bits have(limit), reversed(limit);
  std::vector<std::int64_t> all;
  auto admit = [&](std::int64_t v) {
    have.set(v);
    reversed.set(limit - v);
  };
  for (const auto& g : gens.values()) {
    const std::int64_t s = *out.scaled(g);
    if (s > limit) continue;
    admit(s);
    all.push_back(s);
    out.provenance_.emplace(s, Rule{Derivation::Op::Leaf, {s, 0, 0}});
  }

  // Breadth-first rounds: each round applies both operations to everything
  // known so far, so an element's first rule has minimal depth.
  for (;;) {
    Bits fresh(limit);
    std::vector<std::int64_t> found;
    auto record = [&](std::int64_t v, Rule rule) {
      fresh.set(v);
      found.push_back(v);
      out.provenance_.emplace(v, rule);
      if (all.size() + found.size() > max_elements) {
        throw ClosureTooLarge("closure exceeds " + std::to_string(max_elements) + " elements");
      }
    };
    Bits known = have;
    auto skip_known = [&](std::int64_t v) { return known.test(v) || fresh.test(v); };

    // x + a for a <= x
    for (const std::int64_t a : all) {
      if (2 * a > limit) break;
      scan_shifted(have, -a, have, 2 * a, limit, [&](std::int64_t v) {
        if (!skip_known(v)) record(v, Rule{Derivation::Op::Sum, {v - a, a, 0}});
      });
    }

    // q + (p - u) for u <= p <= q. Sweep q upward, widening the set of
    // differences available from pairs at or below q.
    Bits diffs(limit);
    std::unordered_map<std::int64_t, std::pair<std::int64_t, std::int64_t>> origin;
    diffs.set(0);
    for (const std::int64_t q : all) {
      std::vector<std::int64_t> added;
      scan_shifted(reversed, limit - q, diffs, 1, limit - q, [&](std::int64_t d) {
        added.push_back(d);
        origin.emplace(d, std::make_pair(q, q - d));
      });
      for (const std::int64_t d : added) diffs.set(d);
      scan_shifted(diffs, -q, have, q + 1, limit, [&](std::int64_t v) {
        if (skip_known(v)) return;
        const auto [p, u] = origin.at(v - q);
        record(v, Rule{Derivation::Op::Triple, {p, u, q}});
      });
    }

    if (found.empty()) break;
    for (const std::int64_t v : found) admit(v);
    std::sort(found.begin(), found.end());
    std::vector<std::int64_t> merged;
    merged.reserve(all.size() + found.size());
    std::merge(all.begin(), all.end(), found.begin(), found.end(), std::back_inserter(merged));
    all = std::move(merged);
  }

  out.elements_.reserve(all.size());
  for (const std::int64_t v : all) {
    out.elements_.emplace_back(mpq_class(mpz_class(static_cast<long>(v)) * out.unit_));
  }
  return out;
}

std::optional<Derivation> membership(const GeneratorSet& gens, const Rat& bound, const Rat& v) {
  if (!v.is_positive() || bound < v) return std::nullopt;
  return bounded_closure(gens, bound).derive(v);
}

}  // namespace boxcert
