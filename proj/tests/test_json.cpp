#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <sstream>

#include "boxcert/errors.hpp"
#include "boxcert/factory.hpp"
#include "boxcert/json_io.hpp"
#include "boxcert/pipeline.hpp"

using namespace boxcert;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  REQUIRE(in);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("rationals: ints and strings in, lowest-terms strings out") {
  CHECK(rat_from_json(Json(5)) == Rat(5));
  CHECK(rat_from_json(Json("6/4")) == Rat(3, 2));
  CHECK(rat_from_json(Json("-2/6")) == Rat(-1, 3));
  CHECK(to_json(Rat(6, 4)) == Json("3/2"));
  CHECK(to_json(Rat(4, 2)) == Json("2"));
  CHECK_THROWS_AS(rat_from_json(Json("3/0")), ParseError);
  CHECK_THROWS_AS(rat_from_json(Json(1.5)), ParseError);
  CHECK_THROWS_AS(rat_from_json(Json("1.5")), ParseError);
  CHECK_THROWS_AS(rat_from_json(Json::array()), ParseError);
}

TEST_CASE("partition JSON normalizes on output") {
  const std::string text = R"({"dim":2,"outer":{"lo":[0,0],"hi":["4/2",2]},"boxes":[{"lo":[0,0],"hi":[2,"2"]}]})";
  const Partition p = parse_partition(text);
  CHECK(canonical_json(p) ==
        R"({"dim":2,"outer":{"lo":["0","0"],"hi":["2","2"]},"boxes":[{"lo":["0","0"],"hi":["2","2"]}]})");
}

TEST_CASE("malformed partition JSON is a ParseError") {
  CHECK_THROWS_AS(parse_partition("{"), ParseError);
  CHECK_THROWS_AS(parse_partition(R"({"dim":2})"), ParseError);
  CHECK_THROWS_AS(parse_partition(R"({"dim":2,"outer":{"lo":[0],"hi":[1,1]},"boxes":[]})"), ParseError);
  CHECK_THROWS_AS(parse_partition(R"({"dim":2,"outer":{"lo":[0,0],"hi":[1,"1/0"]},"boxes":[]})"), ParseError);
  CHECK_THROWS_AS(parse_partition(R"({"dim":"two","outer":{"lo":[0,0],"hi":[1,1]},"boxes":[]})"), ParseError);
}

TEST_CASE("pinwheel golden file round-trips") {
  const std::string text = slurp(BOXCERT_GOLDEN_DIR "/pinwheel_17_10_7.json");
  const Partition p = parse_partition(text);
  CHECK(p.boxes == pinwheel_partition(17, 10, 7).boxes);
  CHECK(pretty_json(to_json(p)) == text);
}

TEST_CASE("property: partitions round-trip through JSON") {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const Partition p = random_guillotine({2 + seed % 3, 4, 6}, seed);
    const std::string once = canonical_json(p);
    const Partition back = parse_partition(once);
    CHECK(back.dim == p.dim);
    CHECK(back.outer == p.outer);
    CHECK(back.boxes == p.boxes);
    CHECK(canonical_json(back) == once);
  }
}

TEST_CASE("property: certificates round-trip through JSON") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const auto [p, g] = hypothesis_instance(random_guillotine({2 + seed % 2, 4, 6}, seed), seed);
    const Certificate c = certify(p, g);
    const std::string text = pretty_json(to_json(c));
    const Certificate back = parse_certificate(text);
    CHECK(back == c);
    CHECK(pretty_json(to_json(back)) == text);
  }
}

TEST_CASE("certificate golden file parses and checks") {
  const Certificate c = parse_certificate(slurp(BOXCERT_GOLDEN_DIR "/pinwheel_17_10_7.cert.json"));
  CHECK(c == certify(pinwheel_partition(17, 10, 7), GeneratorSet({17, 10, 7})));
  const Json j = to_json(c);
  std::vector<std::string> keys;
  for (const auto& [k, v] : j.items()) keys.push_back(k);
  CHECK(keys == std::vector<std::string>{"partition_sha256", "gens", "bound", "assignment", "trail", "y",
                                         "reduction", "claimed_side"});
  CHECK(j["reduction"]["steps"][0]["kind"] == "triple");
}

TEST_CASE("derivation and generator JSON") {
  const Derivation d = Derivation::triple(Derivation::leaf(5), Derivation::leaf(3), Derivation::leaf(7));
  const Json j = to_json(d);
  CHECK(j["op"] == "triple");
  CHECK(j["value"] == "9");
  CHECK(derivation_from_json(j) == d);
  CHECK_THROWS_AS(derivation_from_json(Json::parse(R"({"op":"mul","value":"1","args":[]})")), ParseError);

  const GeneratorSpec spec = generator_spec_from_json(Json::parse(R"({"gens":["6/4",3],"bound":"10"})"));
  CHECK(spec.gens == GeneratorSet({Rat(3, 2), 3}));
  CHECK(spec.bound == Rat(10));
  CHECK(to_json(spec).dump() == R"({"gens":["3/2","3"],"bound":"10"})");
}

TEST_CASE("parse_rat_list") {
  CHECK(parse_rat_list("17,10,7") == std::vector<Rat>{17, 10, 7});
  CHECK(parse_rat_list("5/2, 7/3") == std::vector<Rat>{Rat(5, 2), Rat(7, 3)});
  CHECK_THROWS_AS(parse_rat_list("1,,2"), ParseError);
  CHECK_THROWS_AS(parse_rat_list("1,x"), ParseError);
}
