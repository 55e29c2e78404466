#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "../tools/cli.hpp"

namespace fs = std::filesystem;
using boxcert::cli::run;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result call(std::vector<std::string> args) {
  args.insert(args.begin(), "boxcert");
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

fs::path scratch() {
  static const fs::path dir = [] {
    fs::path d = fs::temp_directory_path() / ("boxcert_cli_" + std::to_string(::getpid()));
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

std::string write(const std::string& name, const std::string& text) {
  const fs::path p = scratch() / name;
  std::ofstream(p) << text;
  return p.string();
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

const std::string kPinwheel = BOXCERT_GOLDEN_DIR "/pinwheel_17_10_7.json";
const std::string kStrip = BOXCERT_GOLDEN_DIR "/strip_15_5.json";

}  // namespace

TEST_CASE("validate") {
  const Result ok = call({"validate", kPinwheel});
  CHECK(ok.code == 0);
  CHECK(ok.out == "OK: 5 boxes, volume 400\n");

  const std::string overlap = write("overlap.json", R"({"dim":2,"outer":{"lo":[0,0],"hi":[3,2]},
    "boxes":[{"lo":[0,0],"hi":[2,2]},{"lo":[1,0],"hi":[3,2]}]})");
  const Result bad = call({"validate", overlap});
  CHECK(bad.code == 2);
  CHECK(bad.out.find("INVALID") == 0);
  CHECK(bad.out.find("interior overlap (k=1,k=2)") != std::string::npos);

  CHECK(call({"validate", write("broken.json", "{\"dim\": 2,")}).code == 1);
  CHECK(call({"validate", (scratch() / "missing.json").string()}).code == 1);
}

TEST_CASE("certify") {
  const std::string cert = (scratch() / "pw.cert.json").string();
  const Result ok = call({"certify", kPinwheel, "--gens", "17,10,7", "--out", cert});
  CHECK(ok.code == 0);
  CHECK(ok.out.find("side of length 20 along axis 1 ∈ closure({7,10,17})") == 0);
  CHECK(slurp(cert) == slurp(BOXCERT_GOLDEN_DIR "/pinwheel_17_10_7.cert.json"));

  const Result strip = call({"certify", kStrip, "--gens", "15,5"});
  CHECK(strip.code == 0);
  CHECK(strip.out.find("side of length 20") == 0);
  CHECK(strip.out.find("sum(15,5)") != std::string::npos);

  const Result hyp = call({"certify", kPinwheel, "--gens", "4"});
  CHECK(hyp.code == 3);
  CHECK(hyp.err.find("[assign_axes]") != std::string::npos);

  CHECK(call({"certify", kPinwheel, "--gens", "17,x"}).code == 1);
  CHECK(call({"certify", kPinwheel}).code == 1);

  const std::string gens = write("gens.json", R"({"gens":[17,10,7],"bound":40})");
  CHECK(call({"certify", kPinwheel, "--gens-file", gens}).code == 0);
  CHECK(call({"certify", kPinwheel, "--gens", "17,10,7", "--start-corner", "20,20"}).code == 0);
}

TEST_CASE("certify batch output is ordered by file name") {
  const std::string a = write("a.json", slurp(kStrip));
  const std::string b = write("b.json", slurp(kStrip));
  const Result r1 = call({"certify", b, a, "--gens", "15,5", "--jobs", "4"});
  const Result r2 = call({"certify", a, b, "--gens", "15,5", "--jobs", "1"});
  CHECK(r1.code == 0);
  CHECK(r1.out == r2.out);
  CHECK(r1.out.find("a.json") < r1.out.find("b.json"));
}

TEST_CASE("check") {
  const std::string cert = (scratch() / "chk.cert.json").string();
  REQUIRE(call({"certify", kPinwheel, "--gens", "17,10,7", "--out", cert}).code == 0);
  const Result ok = call({"check", cert, kPinwheel, "--gens", "17,10,7"});
  CHECK(ok.code == 0);
  CHECK(ok.out.find("ACCEPTED") == 0);
  const Result wrong = call({"check", cert, kStrip, "--gens", "17,10,7"});
  CHECK(wrong.code == 2);
  CHECK(wrong.out.find("REJECTED") == 0);
}

TEST_CASE("closure and member") {
  const Result c = call({"closure", "--gens", "1", "--bound", "5"});
  CHECK(c.code == 0);
  CHECK(c.out == "1 2 3 4 5\n");

  const Result m = call({"member", "--gens", "5,3,7", "--value", "9"});
  CHECK(m.code == 0);
  CHECK(m.out.find("\"op\": \"triple\"") != std::string::npos);

  const Result n = call({"member", "--gens", "2", "--value", "5"});
  CHECK(n.code == 5);
  CHECK(n.out == "not a member\n");

  CHECK(call({"closure", "--gens", "0", "--bound", "5"}).code == 1);
}

TEST_CASE("gen") {
  const Result pw = call({"gen", "pinwheel", "17", "10", "7"});
  CHECK(pw.code == 0);
  CHECK(pw.out == slurp(kPinwheel));

  const Result lifted = call({"gen", "strip", "15", "5", "--lift", "3,20"});
  CHECK(lifted.code == 0);
  CHECK(lifted.out.find("\"dim\": 3") != std::string::npos);

  const Result g1 = call({"gen", "guillotine", "--dim", "2", "--depth", "4", "--seed", "42"});
  const Result g2 = call({"gen", "guillotine", "--dim", "2", "--depth", "4", "--seed", "42"});
  CHECK(g1.code == 0);
  CHECK(g1.out == g2.out);

  CHECK(call({"gen", "pinwheel", "7", "10", "7"}).code == 1);
  CHECK(call({"gen", "strip", "1"}).code == 1);
  CHECK(call({"gen", "spiral"}).code == 1);
}

TEST_CASE("render") {
  const std::string cert = (scratch() / "r.cert.json").string();
  REQUIRE(call({"certify", kPinwheel, "--gens", "17,10,7", "--out", cert}).code == 0);
  const Result r = call({"render", kPinwheel, "--cert", cert});
  CHECK(r.code == 0);
  CHECK(r.out == slurp(BOXCERT_GOLDEN_DIR "/pinwheel_17_10_7.svg"));

  const std::string p3 = write("p3.json", call({"gen", "strip", "15", "5", "--lift", "3,20"}).out);
  CHECK(call({"render", p3}).code == 1);
}

TEST_CASE("selftest") {
  const Result a = call({"selftest"});
  const Result b = call({"selftest"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out.find("all witness partitions certified") != std::string::npos);
}

TEST_CASE("usage errors") {
  CHECK(call({}).code == 1);
  CHECK(call({"frobnicate"}).code == 1);
}
