#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>

#include "boxcert/errors.hpp"
#include "boxcert/random.hpp"
#include "boxcert/reducer.hpp"
#include "support/oracles.hpp"

using namespace boxcert;
using Kind = RewriteStep::Kind;

namespace {

Derivation as_leaf(const Rat& v) { return Derivation::leaf(v); }

YSequence seq(std::vector<Rat> pts) {
  const Rat len = pts.back();
  return YSequence{1, len, std::move(pts)};
}

// Applies the recorded steps by hand and checks the geometric facts each
// one claims. Returns the final point list.
std::vector<Rat> apply_by_hand(const ReductionCertificate& c) {
  std::vector<Rat> y = c.input.points;
  for (const RewriteStep& s : c.steps) {
    const std::size_t m = y.size();
    REQUIRE(m > 2);
    switch (s.kind) {
      case Kind::Loop:
        REQUIRE(s.i < s.j);
        REQUIRE(s.j <= m);
        CHECK(y[s.i - 1] == y[s.j - 1]);
        y.erase(y.begin() + static_cast<std::ptrdiff_t>(s.i), y.begin() + static_cast<std::ptrdiff_t>(s.j));
        break;
      case Kind::Sum: {
        REQUIRE(s.i >= 2);
        REQUIRE(s.i < m);
        const Rat a = y[s.i - 2], b = y[s.i - 1], d = y[s.i];
        CHECK(min(a, d) <= b);
        CHECK(b <= max(a, d));
        CHECK(s.merged == abs(d - a));
        CHECK(s.merged == s.lengths[0] + s.lengths[1]);
        y.erase(y.begin() + static_cast<std::ptrdiff_t>(s.i - 1));
        break;
      }
      case Kind::Triple: {
        REQUIRE(s.i > 2);
        REQUIRE(s.i < m);
        REQUIRE(s.lengths.size() == 3);
        // middle length is the strict minimum
        CHECK(s.lengths[1] < s.lengths[0]);
        CHECK(s.lengths[1] < s.lengths[2]);
        const Rat direct = abs(y[s.i] - y[s.i - 3]);
        CHECK(s.merged == direct);
        CHECK(s.merged == op_triple(s.lengths[0], s.lengths[1], s.lengths[2]));
        y.erase(y.begin() + static_cast<std::ptrdiff_t>(s.i - 2), y.begin() + static_cast<std::ptrdiff_t>(s.i));
        break;
      }
    }
    CHECK(y.front() == Rat(0));
    CHECK(y.back() == c.input.length);
  }
  return y;
}

}  // namespace

TEST_CASE("reduce: two points need no steps") {
  const auto c = reduce(seq({0, 7}), as_leaf);
  CHECK(c.steps.empty());
  CHECK(c.result == Rat(7));
  CHECK(c.derivation == Derivation::leaf(7));
}

TEST_CASE("reduce: strip sequence merges by sum") {
  const auto c = reduce(seq({0, 15, 20}), as_leaf);
  REQUIRE(c.steps.size() == 1);
  CHECK(c.steps[0].kind == Kind::Sum);
  CHECK(c.steps[0].i == 2);
  CHECK(c.result == Rat(20));
  CHECK(c.derivation == Derivation::sum(Derivation::leaf(15), Derivation::leaf(5)));
}

TEST_CASE("reduce: zigzag merges by triple") {
  const auto c = reduce(seq({0, 5, 2, 9}), as_leaf);
  REQUIRE(c.steps.size() == 1);
  CHECK(c.steps[0].kind == Kind::Triple);
  CHECK(c.steps[0].i == 3);
  CHECK(c.steps[0].lengths == std::vector<Rat>{5, 3, 7});
  CHECK(c.result == Rat(9));
  CHECK(c.derivation ==
        Derivation::triple(Derivation::leaf(5), Derivation::leaf(3), Derivation::leaf(7)));
}

TEST_CASE("reduce: loops go first, smallest i with largest j") {
  // 0 -> 2 -> 0 -> 2 -> 3: Y1 = Y3 and Y2 = Y4
  const auto c = reduce(seq({0, 2, 0, 2, 3}), as_leaf);
  REQUIRE(!c.steps.empty());
  CHECK(c.steps[0].kind == Kind::Loop);
  CHECK(c.steps[0].i == 1);
  CHECK(c.steps[0].j == 3);
  CHECK(c.result == Rat(3));
  CHECK(apply_by_hand(c) == std::vector<Rat>{0, 3});
}

TEST_CASE("reduce: collinear runs merge left to right") {
  const auto c = reduce(seq({0, 1, 2, 3}), as_leaf);
  REQUIRE(c.steps.size() == 2);
  CHECK(c.steps[0].i == 2);
  CHECK(c.steps[1].i == 2);
  CHECK(c.derivation == Derivation::sum(Derivation::sum(Derivation::leaf(1), Derivation::leaf(1)),
                                        Derivation::leaf(1)));
}

TEST_CASE("reduce uses the leaf callback for original step lengths") {
  const auto leaf = [](const Rat& v) {
    return v == Rat(4) ? Derivation::sum(Derivation::leaf(2), Derivation::leaf(2)) : Derivation::leaf(v);
  };
  const auto c = reduce(seq({0, 4, 6}), leaf);
  CHECK(c.derivation.node_count() == 5);
  CHECK(verify_derivation(c.derivation, GeneratorSet({2})) == Rat(6));
}

TEST_CASE("check_y_sequence rejects malformed input") {
  CHECK_THROWS_AS(check_y_sequence(seq({0})), InvalidArgument);
  CHECK_THROWS_AS(check_y_sequence(YSequence{1, 5, {0, 4}}), InvalidArgument);
  CHECK_THROWS_AS(check_y_sequence(YSequence{1, 5, {1, 5}}), InvalidArgument);
  CHECK_THROWS_AS(check_y_sequence(seq({0, 7, -1, 3})), InvalidArgument);
  CHECK_NOTHROW(check_y_sequence(seq({0, 5, 2, 9})));
}

TEST_CASE("replay examples") {
  const auto strip = reduce(seq({0, 15, 20}), as_leaf);
  CHECK(replay(strip, GeneratorSet({15, 5})) == Rat(20));

  auto tampered = strip;
  tampered.steps[0].lengths[0] = 14;
  CHECK_THROWS_AS(replay(tampered, GeneratorSet({15, 5})), ReplayMismatch);

  try {
    replay(strip, GeneratorSet({15}));
    FAIL("expected ReplayMismatch");
  } catch (const ReplayMismatch& e) {
    CHECK(std::string(e.what()).find("LeafNotGenerator") != std::string::npos);
  }
}

TEST_CASE("replay rejects non-canonical choices") {
  const auto c = reduce(seq({0, 1, 2, 3}), as_leaf);
  auto other = c;
  other.steps[0].i = 3;  // also a legal Sum, but not the smallest i
  CHECK_THROWS_AS(replay(other, GeneratorSet({1})), ReplayMismatch);

  auto wrong_result = c;
  wrong_result.result = 2;
  CHECK_THROWS_AS(replay(wrong_result, GeneratorSet({1})), ReplayMismatch);

  auto dropped = c;
  dropped.steps.pop_back();
  CHECK_THROWS_AS(replay(dropped, GeneratorSet({1})), ReplayMismatch);
}

TEST_CASE("random_y_sequence examples") {
  using testing::random_y_sequence;
  CHECK(random_y_sequence(2, {1}, 0).points == std::vector<Rat>{0, 1, 2});
  bool found = false;
  for (std::uint64_t seed = 0; seed < 200 && !found; ++seed) {
    found = random_y_sequence(9, {5, 3, 7}, seed).points == std::vector<Rat>{0, 5, 2, 9};
  }
  CHECK(found);
  CHECK_THROWS_AS(random_y_sequence(1, {2}, 0), GenerationFailed);
  CHECK(random_y_sequence(9, {5, 3, 7}, 11).points == random_y_sequence(9, {5, 3, 7}, 11).points);
}

TEST_CASE("property: random sequences reduce, replay and respect the triple facts") {
  SeededRng rng(2024);
  std::size_t done = 0, triples = 0;
  for (std::uint64_t seed = 0; done < 500 && seed < 5000; ++seed) {
    const std::int64_t den = rng.uniform(1, 6);
    const std::int64_t na = rng.uniform(2, 12 * den), nc = rng.uniform(2, 12 * den);
    const Rat a(na, den), c(nc, den), b(rng.uniform(1, std::min(na, nc) - 1), den);
    std::vector<Rat> pool{a, b, c};
    const Rat len = rng.chance(1, 2) ? a + c : op_triple(a, b, c);
    YSequence y;
    try {
      y = testing::random_y_sequence(len, pool, seed);
    } catch (const GenerationFailed&) {
      continue;
    }
    const auto cert = reduce(y, as_leaf);
    CHECK(cert.result == len);
    CHECK(cert.steps.size() <= y.points.size() - 2);
    CHECK(apply_by_hand(cert) == std::vector<Rat>{0, len});
    CHECK(replay(cert, GeneratorSet(pool)) == len);
    CHECK(verify_derivation(cert.derivation, GeneratorSet(pool)) == len);
    for (const auto& s : cert.steps) triples += s.kind == Kind::Triple;
    ++done;
  }
  CHECK(done == 500);
  CHECK(triples > 0);
}
