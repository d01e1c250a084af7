#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include "doctest.h"
#include "helpers.hpp"
#include "rtop/error.hpp"
#include "rtop/io.hpp"
#include "rtop/topology.hpp"

using namespace rtop;

namespace {

ErrorCode parse_failure(const std::string& text) {
  try {
    parse_input(text);
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::kInternal;
}

std::size_t count(const std::string& s, const std::string& needle) {
  std::size_t n = 0;
  for (std::size_t p = s.find(needle); p != std::string::npos; p = s.find(needle, p + 1)) ++n;
  return n;
}

int run_cli(const std::string& args) {
  const std::string cmd = std::string(RTOP_CLI_PATH) + " " + args + " > /dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string fixture(const std::string& name) { return std::string(RTOP_FIXTURE_DIR) + "/" + name; }

}  // namespace

TEST_SUITE("io") {
  TEST_CASE("input parsing") {
    const InputSpec s = parse_input(R"({"x":{"num":[1,0,-1],"den":[1,0,1]},"y":{"num":[0,2],"den":[1,0,1]},
                                       "options":{"digits":20,"isolated":"certified"}})");
    CHECK(s.curve.dimension() == 2);
    CHECK(s.curve.x().num() == IntPoly{1, 0, -1});
    CHECK(s.digits == 20);
    CHECK(s.isolated == "certified");
    const InputSpec big = parse_input(R"({"x":{"num":["123456789012345678901234567890",1]},"y":{"num":[0,0,1]},"z":{"num":[0,0,0,1]}})");
    CHECK(big.curve.dimension() == 3);
    CHECK(big.curve.x().num().coeff(0) == mpz_class("123456789012345678901234567890"));
    CHECK(big.curve.x().den() == IntPoly{1});
  }

  TEST_CASE("input errors") {
    CHECK(parse_failure("not json") == ErrorCode::kParse);
    CHECK(parse_failure(R"({"x":{"num":[1]}})") == ErrorCode::kParse);
    CHECK(parse_failure(R"({"x":{"num":[0,1]},"y":{"num":[0,1],"den":[0]}})") == ErrorCode::kParse);
    CHECK(parse_failure(R"({"x":{"num":[0.5]},"y":{"num":[0,1]}})") == ErrorCode::kParse);
    CHECK(parse_failure(R"({"x":{"num":[0,1]},"y":{"num":["12a"]}})") == ErrorCode::kParse);
    CHECK(parse_failure(R"({"x":{"num":[0,1]},"y":{"num":[0,1]},"options":{"digits":"ten"}})") == ErrorCode::kParse);
    CHECK(parse_failure(R"({"x":{"num":[0,1]},"y":{"num":[0,1]},"options":{"isolated":3}})") == ErrorCode::kParse);
    try {
      parse_input(R"({"x":{"num":[0,1]},"y":{"num":[0,1],"den":[0]}})");
    } catch (const Error& e) {
      CHECK(std::string(e.what()).find("y") != std::string::npos);
    }
  }

  TEST_CASE("curve encoding round trip") {
    const Parametrization c = testing::unit_circle();
    const InputSpec back = parse_input(encode_curve(c));
    CHECK(back.curve.x() == c.x());
    CHECK(back.curve.y() == c.y());
  }

  TEST_CASE("graph JSON round trip is byte stable") {
    AnalyzeOptions opts;
    opts.isolated = IsolatedMode::kCertified;
    for (const auto& c : {testing::unit_circle(), testing::isolated_cubic(),
                          Parametrization({testing::poly({0, 1}), testing::poly({0, 0, 1}), testing::poly({0, 0, 0, 1})})}) {
      const std::string text = emit_json(analyze(c, opts).graph);
      CHECK(serialize(parse_document(text)) == text);
      CHECK(emit_json(analyze(c, opts).graph) == text);
    }
    CHECK_THROWS_AS(parse_document("{\"vertices\": 3}"), Error);
  }

  TEST_CASE("DOT output") {
    const std::string circle = emit_dot(analyze(testing::unit_circle(), AnalyzeOptions{}).graph);
    CHECK(circle.rfind("graph topology {", 0) == 0);
    CHECK(count(circle, " -- ") == 4);
    CHECK(count(circle, "synthetic=true") == 0);
    const std::string parabola = emit_dot(analyze(Parametrization({testing::poly({0, 1}), testing::poly({0, 0, 1})}), AnalyzeOptions{}).graph);
    CHECK(count(parabola, "synthetic=true") == 2);
  }

  TEST_CASE("SVG output") {
    const Parametrization c = testing::unit_circle();
    const TopologyGraph g = analyze(c, AnalyzeOptions{}).graph;
    const std::string svg = render_svg(g, c, 8);
    CHECK(svg.find("<svg") != std::string::npos);
    CHECK(svg.find("</svg>") != std::string::npos);
    CHECK(count(svg, "<path") >= 4);
    CHECK(render_svg(g, c, 8) == svg);
  }

  TEST_CASE("command line exit codes") {
    const std::string out = (std::filesystem::temp_directory_path() / "rtop_cli_test.json").string();
    CHECK(run_cli("analyze " + fixture("circle.json") + " --json " + out) == 0);
    std::ifstream in(out);
    const std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    CHECK(serialize(parse_document(text)) == text);
    CHECK(run_cli("analyze " + fixture("improper.json")) == 2);
    CHECK(run_cli("analyze " + fixture("isolated.json") + " --isolated certified") == 0);
    const std::string bad = (std::filesystem::temp_directory_path() / "rtop_cli_bad.json").string();
    std::ofstream(bad) << R"({"x":{"num":[0,1]},"y":{"num":[0,1],"den":[0]}})";
    CHECK(run_cli("analyze " + bad) == 5);
    CHECK(run_cli("analyze " + fixture("circle.json") + " --digits 10 --max-digits 10") == 0);
    CHECK(run_cli("analyze " + fixture("does_not_exist.json")) == 1);
  }
}
