#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "boxcert/errors.hpp"
#include "boxcert/factory.hpp"
#include "boxcert/geometry.hpp"
#include "boxcert/random.hpp"

using namespace boxcert;

namespace {

Box box2(Rat x0, Rat x1, Rat y0, Rat y1) { return Box{Point{{x0, y0}}, Point{{x1, y1}}}; }

Box cube(std::size_t n, Rat side) {
  Box b;
  for (std::size_t j = 0; j < n; ++j) {
    b.lo.coords.emplace_back(0);
    b.hi.coords.push_back(side);
  }
  return b;
}

}  // namespace

TEST_CASE("box_extent") {
  CHECK(box_extent(box2(0, 1, 0, 1), 1) == Rat(1));
  CHECK(box_extent(box2(0, 17, 0, 10), 2) == Rat(10));
  // R5 of the pinwheel with x=17, y=10, z=7 is [3,10]x[10,17].
  const Partition pw = pinwheel_partition(17, 10, 7);
  CHECK(box_extent(pw.box(5), 1) == Rat(7));
  CHECK_THROWS_AS(box_extent(box2(0, 1, 0, 1), 0), InvalidArgument);
  CHECK_THROWS_AS(box_extent(box2(0, 1, 0, 1), 3), InvalidArgument);
}

TEST_CASE("box_volume") {
  CHECK(box_volume(cube(3, 1)) == Rat(1));
  CHECK(box_volume(box2(0, 15, 0, 20)) == Rat(300));
  const Partition pw = pinwheel_partition(17, 10, 7);
  Rat total;
  for (const Box& b : pw.boxes) total += box_volume(b);
  CHECK(total == Rat(400));
}

TEST_CASE("interiors_disjoint") {
  CHECK(interiors_disjoint(box2(0, 1, 0, 1), box2(1, 2, 0, 1)));
  CHECK_FALSE(interiors_disjoint(box2(0, 2, 0, 2), box2(1, 3, 1, 3)));
  const Partition pw = pinwheel_partition(17, 10, 7);
  int pairs = 0;
  for (BoxIndex a = 1; a <= 5; ++a)
    for (BoxIndex b = a + 1; b <= 5; ++b, ++pairs) CHECK(interiors_disjoint(pw.box(a), pw.box(b)));
  CHECK(pairs == 10);
  CHECK_THROWS_AS(interiors_disjoint(box2(0, 1, 0, 1), cube(3, 1)), InvalidArgument);
}

TEST_CASE("property: interiors_disjoint is symmetric") {
  SeededRng rng(11);
  for (int i = 0; i < 300; ++i) {
    auto random_box = [&] {
      const Rat x0 = rng.rational(0, 5, 4), y0 = rng.rational(0, 5, 4);
      return box2(x0, x0 + rng.rational(Rat(1, 4), 3, 4), y0, y0 + rng.rational(Rat(1, 4), 3, 4));
    };
    const Box a = random_box();
    const Box b = random_box();
    CHECK(interiors_disjoint(a, b) == interiors_disjoint(b, a));
  }
}

TEST_CASE("validate_partition: single box equal to outer") {
  const Box b = box2(0, 7, 0, 7);
  const ValidationReport r = validate_partition(Partition{2, b, {b}});
  CHECK(r.ok());
  CHECK(r.summary() == "OK: 1 boxes, volume 49");
}

TEST_CASE("validate_partition: overlapping slab is reported with a witness") {
  const Partition p{2, box2(0, 4, 0, 2), {box2(0, 3, 0, 2), box2(2, 4, 0, 2)}};
  const ValidationReport r = validate_partition(p);
  REQUIRE_FALSE(r.ok());
  REQUIRE(r.defects.size() == 1);
  CHECK(r.defects[0].kind == DefectKind::InteriorOverlap);
  CHECK(r.defects[0].first == 1);
  CHECK(r.defects[0].second == 2);
  CHECK(r.defects[0].message == "interior overlap (k=1,k=2) on [2,3]x[0,2]");
}

TEST_CASE("validate_partition: strip(15,5)") {
  const ValidationReport r = validate_partition(strip_partition(15, 5));
  CHECK(r.ok());
  CHECK(r.box_count == 2);
  CHECK(r.outer_volume == Rat(400));
}

TEST_CASE("validate_partition: other defects") {
  SUBCASE("gap") {
    const ValidationReport r = validate_partition(Partition{2, box2(0, 4, 0, 2), {box2(0, 3, 0, 2)}});
    REQUIRE(r.defects.size() == 1);
    CHECK(r.defects[0].kind == DefectKind::VolumeMismatch);
  }
  SUBCASE("outside") {
    const ValidationReport r =
        validate_partition(Partition{2, box2(0, 2, 0, 2), {box2(0, 2, 0, 2), box2(2, 3, 0, 2)}});
    REQUIRE_FALSE(r.ok());
    CHECK(r.defects[0].kind == DefectKind::NotContained);
  }
  SUBCASE("degenerate") {
    const ValidationReport r =
        validate_partition(Partition{2, box2(0, 2, 0, 2), {box2(0, 2, 0, 2), box2(1, 1, 0, 2)}});
    REQUIRE_FALSE(r.ok());
    CHECK(r.defects[0].kind == DefectKind::Degenerate);
    CHECK(r.defects[0].first == 2);
  }
  SUBCASE("empty") {
    CHECK(validate_partition(Partition{2, box2(0, 1, 0, 1), {}}).defects[0].kind == DefectKind::Empty);
  }
}

TEST_CASE("property: factory outputs validate and their volumes sum exactly") {
  SeededRng rng(5);
  std::vector<Partition> parts = {strip_partition(15, 5), pinwheel_partition(17, 10, 7),
                                  lift_product(pinwheel_partition(2, 2, 1), 3, 4)};
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    parts.push_back(random_guillotine({2 + seed % 2, 5, 6}, seed));
    const Rat z = rng.rational(Rat(1, 10), 5, 9);
    parts.push_back(pinwheel_partition(z + rng.rational(Rat(1, 10), 5, 9), z + rng.rational(Rat(1, 10), 5, 9), z));
  }
  for (const Partition& p : parts) {
    CHECK(validate_partition(p).ok());
    Rat total;
    for (const Box& b : p.boxes) total += box_volume(b);
    CHECK(total == box_volume(p.outer));
  }
}
