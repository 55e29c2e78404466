#pragma once

#include <cstdint>
#include <random>

#include "boxcert/rat.hpp"

namespace boxcert {

/// Seeded generator whose draws are identical on every platform:
/// std::mt19937_64's output sequence is fixed by the standard, but the
/// standard distributions are not, so bounded draws are done here.
class SeededRng {
 public:
  explicit SeededRng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform integer in [lo, hi] (inclusive), by rejection sampling.
  std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    if (span == 0) return static_cast<std::int64_t>(next());
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
    std::uint64_t x;
    do {
      x = next();
    } while (x >= limit);
    return lo + static_cast<std::int64_t>(x % span);
  }

  bool chance(std::int64_t num, std::int64_t den) { return uniform(0, den - 1) < num; }

  /// Rational p/q with q uniform in [1, max_den] and p/q uniform-ish in
  /// [lo, hi]; returns lo when no such rational exists for the drawn q.
  Rat rational(const Rat& lo, const Rat& hi, std::int64_t max_den);

 private:
  std::mt19937_64 engine_;
};

inline Rat SeededRng::rational(const Rat& lo, const Rat& hi, std::int64_t max_den) {
  const std::int64_t q = uniform(1, max_den);
  mpq_class a = lo.raw() * q;
  mpq_class b = hi.raw() * q;
  mpz_class pmin, pmax;
  mpz_cdiv_q(pmin.get_mpz_t(), a.get_num_mpz_t(), a.get_den_mpz_t());
  mpz_fdiv_q(pmax.get_mpz_t(), b.get_num_mpz_t(), b.get_den_mpz_t());
  if (pmax < pmin) return lo;
  const std::int64_t p = uniform(pmin.get_si(), pmax.get_si());
  return Rat(p, q);
}

}  // namespace boxcert
