#include "boxcert/factory.hpp"

#include <algorithm>
#include <functional>

#include "boxcert/errors.hpp"
#include "boxcert/random.hpp"

namespace boxcert {

namespace {

Box rect(const Rat& x0, const Rat& x1, const Rat& y0, const Rat& y1) {
  return Box{Point{{x0, y0}}, Point{{x1, y1}}};
}

}  // namespace

Partition strip_partition(const Rat& x, const Rat& y) {
  if (!x.is_positive() || !y.is_positive()) {
    throw InvalidArgument("strip_partition", "x and y must be positive");
  }
  const Rat s = x + y;
  return Partition{2, rect(0, s, 0, s), {rect(0, x, 0, s), rect(x, s, 0, s)}};
}

Partition pinwheel_partition(const Rat& x, const Rat& y, const Rat& z) {
  if (!z.is_positive() || !(z < x) || !(z < y)) {
    throw InvalidArgument("pinwheel_partition", "need x > z > 0 and y > z > 0");
  }
  const Rat s = x + y - z;
  return Partition{2,
                   rect(0, s, 0, s),
                   {
                       rect(0, y - z, 0, x),
                       rect(0, y, x, s),
                       rect(y, s, x - z, s),
                       rect(y - z, s, 0, x - z),
                       rect(y - z, y, x - z, x),
                   }};
}

Partition lift_product(const Partition& p2d, const Rat& extra_length, std::size_t n) {
  if (p2d.dim != 2) throw InvalidArgument("lift_product", "source partition must be 2D");
  if (n < 3) throw InvalidArgument("lift_product", "target dimension must be at least 3");
  if (!extra_length.is_positive()) {
    throw InvalidArgument("lift_product", "extra length must be positive");
  }
  auto lift = [&](const Box& b) {
    Box out = b;
    for (std::size_t j = 3; j <= n; ++j) {
      out.lo.coords.emplace_back(0);
      out.hi.coords.push_back(extra_length);
    }
    return out;
  };
  Partition p{n, lift(p2d.outer), {}};
  p.boxes.reserve(p2d.size());
  for (const Box& b : p2d.boxes) p.boxes.push_back(lift(b));
  return p;
}

Partition random_guillotine(const GuillotineOptions& options, std::uint64_t seed) {
  if (options.dim < 2 || options.max_denominator < 1) {
    throw InvalidArgument("random_guillotine", "need dim >= 2 and a positive denominator bound");
  }
  SeededRng rng(seed);
  const Rat side = rng.rational(1, 4, options.max_denominator);
  Box outer;
  for (std::size_t j = 0; j < options.dim; ++j) {
    outer.lo.coords.emplace_back(0);
    outer.hi.coords.push_back(side);
  }

  Partition p{options.dim, outer, {}};
  std::function<void(const Box&, std::size_t)> split = [&](const Box& b, std::size_t depth) {
    if (depth >= options.max_depth || !rng.chance(3, 4)) {
      p.boxes.push_back(b);
      return;
    }
    // Try axes starting from a random one; a cut needs some p/q strictly
    // inside (lo, hi) with q <= max_denominator.
    const auto first_axis = static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(options.dim) - 1));
    for (std::size_t t = 0; t < options.dim; ++t) {
      const Axis j = (first_axis + t) % options.dim + 1;
      std::vector<Rat> cuts;
      for (std::int64_t q = 1; q <= options.max_denominator; ++q) {
        mpq_class lo = b.lo[j].raw() * q;
        mpq_class hi = b.hi[j].raw() * q;
        mpz_class pmin, pmax;
        mpz_fdiv_q(pmin.get_mpz_t(), lo.get_num_mpz_t(), lo.get_den_mpz_t());
        mpz_cdiv_q(pmax.get_mpz_t(), hi.get_num_mpz_t(), hi.get_den_mpz_t());
        for (long num = pmin.get_si() + 1; num < pmax.get_si(); ++num) {
          Rat c(num, q);
          if (b.lo[j] < c && c < b.hi[j]) cuts.push_back(c);
        }
      }
      std::sort(cuts.begin(), cuts.end());
      cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
      if (cuts.empty()) continue;
      const Rat& cut = cuts[static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(cuts.size()) - 1))];
      Box left = b;
      Box right = b;
      left.hi[j] = cut;
      right.lo[j] = cut;
      split(left, depth + 1);
      split(right, depth + 1);
      return;
    }
    p.boxes.push_back(b);
  };
  split(outer, 0);
  return p;
}

std::pair<Partition, GeneratorSet> hypothesis_instance(const Partition& p, std::uint64_t seed) {
  SeededRng rng(seed);
  std::vector<Rat> picked;
  picked.reserve(p.size());
  for (const Box& b : p.boxes) {
    const auto j = static_cast<Axis>(rng.uniform(1, static_cast<std::int64_t>(p.dim)));
    picked.push_back(box_extent(b, j));
  }
  return {p, GeneratorSet(std::move(picked))};
}

}  // namespace boxcert
