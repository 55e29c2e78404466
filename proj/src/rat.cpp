#include "boxcert/rat.hpp"

#include <ostream>

#include "boxcert/errors.hpp"

namespace boxcert {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

}  // namespace

Rat::Rat(std::int64_t n) : value_(static_cast<long>(n)) {}

Rat::Rat(std::int64_t num, std::int64_t den) {
  if (den == 0) throw InvalidArgument("rational", "zero denominator");
  value_ = mpq_class(static_cast<long>(num), static_cast<long>(den));
  value_.canonicalize();
}

Rat::Rat(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

Rat Rat::parse(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && body.front() == '-') {
    negative = true;
    body.remove_prefix(1);
  }
  const auto slash = body.find('/');
  const std::string_view num = body.substr(0, slash);
  const std::string_view den =
      slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den)) {
    throw ParseError("not an exact rational: \"" + std::string(text) + "\"");
  }
  mpz_class n(std::string(num), 10);
  mpz_class d(std::string(den), 10);
  if (d == 0) throw ParseError("zero denominator in \"" + std::string(text) + "\"");
  if (negative) n = -n;
  return Rat(mpq_class(n, d));
}

bool Rat::is_integer() const { return value_.get_den() == 1; }

std::string Rat::str() const {
  if (is_integer()) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rat& Rat::operator+=(const Rat& o) {
  value_ += o.value_;
  return *this;
}
Rat& Rat::operator-=(const Rat& o) {
  value_ -= o.value_;
  return *this;
}
Rat& Rat::operator*=(const Rat& o) {
  value_ *= o.value_;
  return *this;
}
Rat& Rat::operator/=(const Rat& o) {
  if (sgn(o.value_) == 0) throw InvalidArgument("rational", "division by zero");
  value_ /= o.value_;
  return *this;
}

Rat abs(const Rat& r) { return r.sign() < 0 ? -r : r; }
const Rat& min(const Rat& a, const Rat& b) { return b < a ? b : a; }
const Rat& max(const Rat& a, const Rat& b) { return a < b ? b : a; }

std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }

}  // namespace boxcert

std::size_t std::hash<boxcert::Rat>::operator()(const boxcert::Rat& r) const noexcept {
  const auto& q = r.raw();
  std::size_t h = mpz_get_ui(q.get_num_mpz_t()) * 0x9e3779b97f4a7c15ULL;
  h ^= mpz_get_ui(q.get_den_mpz_t()) + (h << 6) + (h >> 2);
  if (sgn(q) < 0) h = ~h;
  return h;
}
