#include "boxcert/reducer.hpp"

#include <optional>
#include <sstream>

#include "boxcert/errors.hpp"

namespace boxcert {

namespace {

bool between(const Rat& a, const Rat& x, const Rat& b) {
  return (a <= x && x <= b) || (b <= x && x <= a);
}

// Index helpers below take 1-based positions into a 0-based vector.
const Rat& at(const std::vector<Rat>& y, std::size_t i) { return y[i - 1]; }

Rat step_length(const std::vector<Rat>& y, std::size_t t) { return abs(at(y, t + 1) - at(y, t)); }

std::optional<std::pair<std::size_t, std::size_t>> find_loop(const std::vector<Rat>& y) {
  for (std::size_t i = 1; i <= y.size(); ++i) {
    for (std::size_t j = y.size(); j > i; --j) {
      if (at(y, i) == at(y, j)) return std::pair{i, j};
    }
  }
  return std::nullopt;
}

std::optional<std::size_t> find_between(const std::vector<Rat>& y) {
  for (std::size_t i = 2; i + 1 <= y.size(); ++i) {
    if (between(at(y, i - 1), at(y, i), at(y, i + 1))) return i;
  }
  return std::nullopt;
}

std::optional<std::size_t> find_zigzag(const std::vector<Rat>& y) {
  for (std::size_t i = 3; i + 1 <= y.size(); ++i) {
    if (step_length(y, i) > step_length(y, i - 1)) return i;
  }
  return std::nullopt;
}

std::string dump(const std::vector<Rat>& y) {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < y.size(); ++i) os << (i ? ", " : "") << y[i];
  os << "]";
  return os.str();
}

}  // namespace

const char* to_string(RewriteStep::Kind kind) {
  switch (kind) {
    case RewriteStep::Kind::Loop: return "loop";
    case RewriteStep::Kind::Sum: return "sum";
    case RewriteStep::Kind::Triple: return "triple";
  }
  return "?";
}

void check_y_sequence(const YSequence& y) {
  const auto& pts = y.points;
  if (pts.size() < 2) throw InvalidArgument("reduce", "Y-sequence needs at least two points");
  if (pts.front() != Rat(0)) throw InvalidArgument("reduce", "Y-sequence must start at 0");
  if (pts.back() != y.length) throw InvalidArgument("reduce", "Y-sequence must end at its length");
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (pts[i].sign() < 0 || y.length < pts[i]) {
      throw InvalidArgument("reduce", "point " + pts[i].str() + " outside [0, length]");
    }
    if (i > 0 && pts[i] == pts[i - 1]) {
      throw InvalidArgument("reduce", "consecutive points coincide at " + pts[i].str());
    }
  }
}

ReductionCertificate reduce(const YSequence& y, const LeafDerivation& leaf) {
  check_y_sequence(y);
  ReductionCertificate cert;
  cert.input = y;

  std::vector<Rat> pts = y.points;
  // derivs[t-1] witnesses the length of step t (between Y_t and Y_{t+1}).
  std::vector<Derivation> derivs;
  derivs.reserve(pts.size() - 1);
  for (std::size_t t = 1; t < pts.size(); ++t) derivs.push_back(leaf(step_length(pts, t)));

  auto erase_steps = [&](std::size_t first, std::size_t last) {
    derivs.erase(derivs.begin() + static_cast<std::ptrdiff_t>(first - 1),
                 derivs.begin() + static_cast<std::ptrdiff_t>(last));
  };

  while (pts.size() > 2) {
    RewriteStep step;
    if (auto loop = find_loop(pts)) {
      const auto [i, j] = *loop;
      step.kind = RewriteStep::Kind::Loop;
      step.i = i;
      step.j = j;
      for (std::size_t t = i; t < j; ++t) step.lengths.push_back(step_length(pts, t));
      pts.erase(pts.begin() + static_cast<std::ptrdiff_t>(i),
                pts.begin() + static_cast<std::ptrdiff_t>(j));
      erase_steps(i, j - 1);
    } else if (auto mid = find_between(pts)) {
      const std::size_t i = *mid;
      step.kind = RewriteStep::Kind::Sum;
      step.i = i;
      step.lengths = {step_length(pts, i - 1), step_length(pts, i)};
      step.merged = op_sum(step.lengths[0], step.lengths[1]);
      if (step.merged != abs(at(pts, i + 1) - at(pts, i - 1))) {
        throw InvariantFailure("reduce", "merged sum does not match the direct distance in " +
                                             dump(pts));
      }
      Derivation d = Derivation::sum(std::move(derivs[i - 2]), std::move(derivs[i - 1]));
      erase_steps(i - 1, i);
      derivs.insert(derivs.begin() + static_cast<std::ptrdiff_t>(i - 2), std::move(d));
      pts.erase(pts.begin() + static_cast<std::ptrdiff_t>(i - 1));
    } else {
      const auto zig = find_zigzag(pts);
      if (!zig) {
        throw ZigzagIndexMissing("ZigzagIndexMissing: no i>2 with a growing step in " + dump(pts));
      }
      const std::size_t i = *zig;
      step.kind = RewriteStep::Kind::Triple;
      step.i = i;
      step.lengths = {step_length(pts, i - 2), step_length(pts, i - 1), step_length(pts, i)};
      const Rat& a = step.lengths[0];
      const Rat& b = step.lengths[1];
      const Rat& c = step.lengths[2];
      if (!(b < a && b < c)) {
        throw ZigzagIndexMissing("middle step " + b.str() + " is not the strict minimum in " +
                                 dump(pts));
      }
      step.merged = op_triple(a, b, c);
      if (step.merged != abs(at(pts, i + 1) - at(pts, i - 2))) {
        throw ZigzagIndexMissing("op_triple disagrees with the direct distance in " + dump(pts));
      }
      Derivation d = Derivation::triple(std::move(derivs[i - 3]), std::move(derivs[i - 2]),
                                        std::move(derivs[i - 1]));
      erase_steps(i - 2, i);
      derivs.insert(derivs.begin() + static_cast<std::ptrdiff_t>(i - 3), std::move(d));
      pts.erase(pts.begin() + static_cast<std::ptrdiff_t>(i - 2),
                pts.begin() + static_cast<std::ptrdiff_t>(i));
    }
    cert.steps.push_back(std::move(step));
  }

  if (pts.front() != Rat(0) || pts.back() != y.length || derivs.size() != 1) {
    throw InvariantFailure("reduce", "rewrites did not preserve the endpoints");
  }
  cert.result = y.length;
  cert.derivation = std::move(derivs.front());
  return cert;
}

Rat replay(const ReductionCertificate& cert, const GeneratorSet& gens) {
  try {
    check_y_sequence(cert.input);
  } catch (const InvalidArgument& e) {
    throw ReplayMismatch(0, std::string("input: ") + e.what());
  }

  std::vector<Rat> y = cert.input.points;
  std::size_t index = 0;
  for (const RewriteStep& s : cert.steps) {
    ++index;
    auto fail = [&](const std::string& reason) { throw ReplayMismatch(index, reason); };
    const std::size_t m = y.size();
    if (m <= 2) fail("sequence already reduced");

    auto has_duplicate = [&] {
      for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = a + 1; b < m; ++b)
          if (y[a] == y[b]) return true;
      return false;
    };

    switch (s.kind) {
      case RewriteStep::Kind::Loop: {
        if (!(1 <= s.i && s.i < s.j && s.j <= m)) fail("loop indices out of range");
        if (y[s.i - 1] != y[s.j - 1]) fail("loop endpoints differ");
        for (std::size_t a = 0; a + 1 < s.i; ++a)
          for (std::size_t b = a + 1; b < m; ++b)
            if (y[a] == y[b]) fail("an earlier loop exists");
        for (std::size_t b = s.j; b < m; ++b)
          if (y[b] == y[s.i - 1]) fail("loop does not extend to the last repeat");
        if (s.lengths.size() != s.j - s.i) fail("loop length count mismatch");
        for (std::size_t t = s.i; t < s.j; ++t) {
          if (s.lengths[t - s.i] != abs(y[t] - y[t - 1])) fail("loop lengths do not match");
        }
        if (s.merged != Rat(0)) fail("loop carries a merged length");
        y.erase(y.begin() + static_cast<std::ptrdiff_t>(s.i),
                y.begin() + static_cast<std::ptrdiff_t>(s.j));
        break;
      }
      case RewriteStep::Kind::Sum: {
        if (has_duplicate()) fail("sum applied while a loop remains");
        if (!(2 <= s.i && s.i + 1 <= m)) fail("sum index out of range");
        for (std::size_t i = 2; i < s.i; ++i) {
          if (between(y[i - 2], y[i - 1], y[i])) fail("sum index is not the smallest");
        }
        const Rat& prev = y[s.i - 2];
        const Rat& cur = y[s.i - 1];
        const Rat& next = y[s.i];
        if (!between(prev, cur, next)) fail("point is not between its neighbours");
        if (s.lengths.size() != 2 || s.lengths[0] != abs(cur - prev) ||
            s.lengths[1] != abs(next - cur)) {
          fail("sum lengths do not match");
        }
        if (s.merged != s.lengths[0] + s.lengths[1] || s.merged != abs(next - prev)) {
          fail("sum merged length is wrong");
        }
        y.erase(y.begin() + static_cast<std::ptrdiff_t>(s.i - 1));
        break;
      }
      case RewriteStep::Kind::Triple: {
        if (has_duplicate()) fail("triple applied while a loop remains");
        for (std::size_t i = 2; i + 1 <= m; ++i) {
          if (between(y[i - 2], y[i - 1], y[i])) fail("triple applied while a sum is possible");
        }
        if (!(3 <= s.i && s.i + 1 <= m)) fail("triple index out of range");
        auto len = [&](std::size_t t) { return abs(y[t] - y[t - 1]); };
        for (std::size_t i = 3; i < s.i; ++i) {
          if (len(i) > len(i - 1)) fail("triple index is not the smallest");
        }
        if (!(len(s.i) > len(s.i - 1))) fail("outgoing step does not grow");
        if (s.lengths.size() != 3 || s.lengths[0] != len(s.i - 2) ||
            s.lengths[1] != len(s.i - 1) || s.lengths[2] != len(s.i)) {
          fail("triple lengths do not match");
        }
        if (!(s.lengths[1] < s.lengths[0] && s.lengths[1] < s.lengths[2])) {
          fail("middle length is not the strict minimum");
        }
        if (s.merged != op_triple(s.lengths[0], s.lengths[1], s.lengths[2]) ||
            s.merged != abs(y[s.i] - y[s.i - 3])) {
          fail("triple merged length is wrong");
        }
        y.erase(y.begin() + static_cast<std::ptrdiff_t>(s.i - 2),
                y.begin() + static_cast<std::ptrdiff_t>(s.i));
        break;
      }
    }
  }

  const std::size_t tail = cert.steps.size() + 1;
  if (y.size() != 2) throw ReplayMismatch(tail, "steps leave " + std::to_string(y.size()) + " points");
  if (cert.result != cert.input.length) throw ReplayMismatch(tail, "result differs from segment length");
  Rat derived;
  try {
    derived = verify_derivation(cert.derivation, gens);
  } catch (const DerivationInvalid& e) {
    throw ReplayMismatch(tail, std::string("derivation: ") + e.what());
  } catch (const InvalidArgument& e) {
    throw ReplayMismatch(tail, std::string("derivation: ") + e.what());
  }
  if (derived != cert.result) throw ReplayMismatch(tail, "derivation value differs from result");
  return derived;
}

}  // namespace boxcert
