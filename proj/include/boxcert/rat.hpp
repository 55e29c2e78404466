#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace boxcert {

/// Exact rational number, always kept in lowest terms with a positive
/// denominator. Backed by GMP so numerators and denominators never overflow.
class Rat {
 public:
  Rat() = default;
  Rat(std::int64_t n);  // NOLINT(google-explicit-constructor)
  Rat(std::int64_t num, std::int64_t den);
  explicit Rat(mpq_class value);

  /// Parses "p", "-p" or "p/q". Non-reduced input is normalized; a zero
  /// denominator, decimals and exponents are rejected with ParseError.
  static Rat parse(std::string_view text);

  mpz_class numerator() const { return value_.get_num(); }
  mpz_class denominator() const { return value_.get_den(); }
  const mpq_class& raw() const { return value_; }

  bool is_integer() const;
  bool is_positive() const { return sgn(value_) > 0; }
  int sign() const { return sgn(value_); }

  /// Canonical text: "p" for integers, "p/q" otherwise.
  std::string str() const;
  /// Lossy; only used for display.
  double to_double() const { return value_.get_d(); }

  Rat& operator+=(const Rat& o);
  Rat& operator-=(const Rat& o);
  Rat& operator*=(const Rat& o);
  Rat& operator/=(const Rat& o);

  friend Rat operator+(Rat a, const Rat& b) { return a += b; }
  friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
  friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
  friend Rat operator/(Rat a, const Rat& b) { return a /= b; }
  Rat operator-() const { return Rat(mpq_class(-value_)); }

  friend bool operator==(const Rat& a, const Rat& b) { return cmp(a.value_, b.value_) == 0; }
  friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  mpq_class value_{0};
};

Rat abs(const Rat& r);
const Rat& min(const Rat& a, const Rat& b);
const Rat& max(const Rat& a, const Rat& b);

std::ostream& operator<<(std::ostream& os, const Rat& r);

}  // namespace boxcert

template <>
struct std::hash<boxcert::Rat> {
  std::size_t operator()(const boxcert::Rat& r) const noexcept;
};
