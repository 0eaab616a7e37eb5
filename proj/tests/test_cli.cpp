#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "gramcal/commands.hpp"
#include "gramcal/errors.hpp"
#include "gramcal/report.hpp"
#include "gramcal/svg_render.hpp"
#include "support/fixtures.hpp"

using namespace gramcal;
namespace fx = gramcal::fixtures;

namespace {

std::string write_fixture(const std::string& name, const std::string& content) {
  const auto path = std::filesystem::temp_directory_path() / ("gramcal_" + name);
  std::ofstream out(path);
  out << content;
  return path.string();
}

const char* kTriangleFile =
    "dim 2\n"
    "facet 1 0 0\n"
    "facet 0 1 0\n"
    "facet -1 -1 1\n";

const char* kTriangleAllQ =
    "dim 2\n"
    "facet 1 0 0 weight=q\n"
    "facet 0 1 0 weight=q\n"
    "facet -1 -1 1 weight=q\n";

const char* kPyramidFile =
    "dim 3\n"
    "facet 0 0 1 0\n"
    "facet -1 0 -1 1\n"
    "facet 1 0 -1 1\n"
    "facet 0 -1 -1 1\n"
    "facet 0 1 -1 1\n";

}  // namespace

TEST_CASE("polytope file parsing") {
  SUBCASE("triangle with default weights") {
    std::istringstream in(kTriangleFile);
    const ParsedPolytope parsed = parse_polytope_text(in, "triangle");
    CHECK(parsed.dim == 2);
    REQUIRE(parsed.forms.size() == 3);
    CHECK_FALSE(parsed.weights[0].has_value());
    const WeightedPolyhedron wp = build_weighted(parsed);
    CHECK(wp.facet_weight(0) == Poly::var("q1"));
    CHECK(wp.facet_weight(2) == Poly::var("q3"));
  }
  SUBCASE("explicit weights, rationals and comments") {
    std::istringstream in(
        "# a weighted interval\n"
        "dim 1\n"
        "facet 1 0 weight=q\n"
        "\n"
        "facet -1 3/2 weight=2/3\n");
    const WeightedPolyhedron wp = build_weighted(parse_polytope_text(in, "interval"));
    CHECK(wp.facet_weight(0) == Poly::var("q"));
    CHECK(wp.facet_weight(1) == Poly(make_rational(2, 3)));
  }
  SUBCASE("print-then-parse is idempotent") {
    std::istringstream in(kTriangleFile);
    const WeightedPolyhedron wp = build_weighted(parse_polytope_text(in, "triangle"));
    const std::string canonical = print_polytope_file(wp);
    std::istringstream round(canonical);
    const WeightedPolyhedron wp2 = build_weighted(parse_polytope_text(round, "round"));
    CHECK(print_polytope_file(wp2) == canonical);
  }
  SUBCASE("redundant facets are dropped but keep the original default names") {
    std::istringstream in(
        "dim 1\n"
        "facet 1 0\n"
        "facet 2 1\n"  // redundant given x >= 0
        "facet -1 1\n");
    const WeightedPolyhedron wp = build_weighted(parse_polytope_text(in, "redundant"));
    REQUIRE(wp.poly.facet_count() == 2);
    CHECK(wp.facet_weight(0) == Poly::var("q1"));
    CHECK(wp.facet_weight(1) == Poly::var("q3"));
  }
  SUBCASE("errors carry line numbers") {
    auto parse = [](const char* text) {
      std::istringstream in(text);
      return parse_polytope_text(in, "bad");
    };
    CHECK_THROWS_WITH_AS(parse("dim 2\nfacet 1 0\n"), doctest::Contains("bad:2"), input_error);
    CHECK_THROWS_WITH_AS(parse("dim 2\nvertex 1 0 0\n"), doctest::Contains("unknown directive"),
                         input_error);
    CHECK_THROWS_AS(parse("facet 1 0 0\n"), input_error);
    CHECK_THROWS_AS(parse("dim 2\ndim 2\n"), input_error);
    CHECK_THROWS_AS(parse("dim 1\nfacet 1 1/0\n"), input_error);
    CHECK_THROWS_AS(parse(""), input_error);
  }
}

TEST_CASE("cmd_decompose on the triangle") {
  const std::string path = write_fixture("triangle.poly", kTriangleFile);

  cli::DecomposeOptions options;
  const cli::CommandOutcome outcome = cli::cmd_decompose(path, options);
  CHECK(outcome.exit_code == 0);
  CHECK(outcome.report["mode"] == "bg");
  CHECK(outcome.report["terms"].size() == 7);
  CHECK(outcome.report["verification"]["verdict"] == "equal");
  CHECK(outcome.report["verification"]["cells"] == 19);

  SUBCASE("the emitted report re-verifies to the same verdict") {
    const Verdict again = cli::reverify_report(outcome.report);
    CHECK(again.is_equal());
    CHECK(again.checked == 19);
  }
  SUBCASE("terms round-trip through JSON exactly") {
    const FormalSum bg = brianchon_gram(build_weighted(parse_polytope_file(path)));
    const FormalSum reread = sum_from_json(outcome.report["terms"], 2);
    REQUIRE(reread.size() == bg.size());
    CHECK(identity_check(reread, bg).is_equal());
  }
}

TEST_CASE("cmd_decompose fault injection exits 1 with a witness") {
  const std::string path = write_fixture("triangle.poly", kTriangleFile);
  for (const char* kind : {"flip-sign", "bump-weight", "shift-offset"}) {
    cli::DecomposeOptions options;
    options.mutate = kind;
    const cli::CommandOutcome outcome = cli::cmd_decompose(path, options);
    CHECK(outcome.exit_code == 1);
    CHECK(outcome.report["verification"]["verdict"] == "unequal");
    CHECK(outcome.report["verification"].contains("witness"));
  }
  cli::DecomposeOptions bad;
  bad.mutate = "explode";
  CHECK_THROWS_AS(cli::cmd_decompose(path, bad), input_error);
}

TEST_CASE("cmd_decompose other modes") {
  SUBCASE("faces") {
    const std::string path = write_fixture("triangle.poly", kTriangleFile);
    cli::DecomposeOptions options;
    options.mode = "faces";
    const cli::CommandOutcome outcome = cli::cmd_decompose(path, options);
    CHECK(outcome.exit_code == 0);
    CHECK(outcome.report["terms"].size() == 7);
    CHECK(outcome.report["verification"]["verdict"] == "equal");
  }
  SUBCASE("brion") {
    const std::string path = write_fixture("triangle.poly", kTriangleFile);
    cli::DecomposeOptions options;
    options.mode = "brion";
    const cli::CommandOutcome outcome = cli::cmd_decompose(path, options);
    CHECK(outcome.exit_code == 0);
    CHECK(outcome.report["line_terms"] == 4);
    CHECK(outcome.report["vertex_terms"] == 3);
  }
  SUBCASE("polar with explicit xi") {
    const std::string path = write_fixture("triangle_q.poly", kTriangleAllQ);
    cli::DecomposeOptions options;
    options.mode = "polar";
    options.xi = Vec{Rational(1), Rational(2)};
    const cli::CommandOutcome outcome = cli::cmd_decompose(path, options);
    CHECK(outcome.exit_code == 0);
    REQUIRE(outcome.report["terms"].size() == 3);
    std::multiset<int> flips;
    for (const auto& term : outcome.report["terms"]) flips.insert(term["flips"].get<int>());
    CHECK(flips == std::multiset<int>{0, 1, 2});
    CHECK(outcome.report["verification"]["verdict"] == "equal");
    CHECK(cli::reverify_report(outcome.report).is_equal());
  }
  SUBCASE("polar auto-samples xi when omitted") {
    const std::string path = write_fixture("triangle_q.poly", kTriangleAllQ);
    cli::DecomposeOptions options;
    options.mode = "polar";
    const cli::CommandOutcome outcome = cli::cmd_decompose(path, options);
    CHECK(outcome.exit_code == 0);
    CHECK(outcome.report["xi"].size() == 2);
  }
  SUBCASE("polar rejects mixed weights and non-polarizing xi") {
    const std::string mixed = write_fixture("triangle.poly", kTriangleFile);
    cli::DecomposeOptions options;
    options.mode = "polar";
    CHECK_THROWS_AS(cli::cmd_decompose(mixed, options), input_error);

    const std::string path = write_fixture("triangle_q.poly", kTriangleAllQ);
    options.xi = Vec{Rational(1), Rational(1)};
    CHECK_THROWS_AS(cli::cmd_decompose(path, options), input_error);
  }
  SUBCASE("faces mode refuses the pyramid") {
    const std::string path = write_fixture("pyramid.poly", kPyramidFile);
    cli::DecomposeOptions options;
    options.mode = "faces";
    CHECK_THROWS_AS(cli::cmd_decompose(path, options), unsupported_error);
  }
}

TEST_CASE("cmd_decompose runs the chopping pipeline on the pyramid") {
  const std::string path = write_fixture("pyramid.poly", kPyramidFile);
  cli::DecomposeOptions options;
  const cli::CommandOutcome outcome = cli::cmd_decompose(path, options);
  CHECK(outcome.exit_code == 0);
  CHECK(outcome.report["genericity"] == "nonsimple-vertices-only");
  CHECK(outcome.report["terms"].size() == 19);
  CHECK(outcome.report["verification"]["verdict"] == "equal");
  REQUIRE(outcome.report["verification"].contains("pipeline"));
  const auto& pipeline = outcome.report["verification"]["pipeline"];
  REQUIRE(pipeline.size() == 5);
  std::set<std::string> names;
  for (const auto& check : pipeline) {
    names.insert(check["name"].get<std::string>());
    CHECK(check["verdict"] == "equal");
  }
  CHECK(names == std::set<std::string>{"choppolytope", "keydifference", "correction",
                                       "truncation-difference", "conclusion"});
  CHECK(cli::reverify_report(outcome.report).is_equal());
}

TEST_CASE("cmd_lattice_sum") {
  SUBCASE("interval [0,3] with endpoint weights q over the box [-1,4]") {
    const std::string path = write_fixture("seg.poly",
                                           "dim 1\n"
                                           "facet 1 0 weight=q\n"
                                           "facet -1 3 weight=q\n");
    const cli::CommandOutcome outcome = cli::cmd_lattice_sum(path, "-1:4");
    CHECK(outcome.exit_code == 0);
    CHECK(outcome.text == "2*q + 2");
    CHECK(outcome.report["points"] == 6);
    CHECK(outcome.report["cross_check"] == "equal");
  }
  SUBCASE("unit square, all weights q: four corners give 4q^2") {
    const std::string path = write_fixture("sq.poly",
                                           "dim 2\n"
                                           "facet 1 0 0 weight=q\n"
                                           "facet 0 1 0 weight=q\n"
                                           "facet -1 0 1 weight=q\n"
                                           "facet 0 -1 1 weight=q\n");
    const cli::CommandOutcome outcome = cli::cmd_lattice_sum(path, "0:1,0:1");
    CHECK(outcome.exit_code == 0);
    CHECK(outcome.text == "4*q^2");
  }
  SUBCASE("triangle, all weights q: three lattice points, all vertices") {
    const std::string path = write_fixture("tq.poly", kTriangleAllQ);
    const cli::CommandOutcome outcome = cli::cmd_lattice_sum(path, "0:1,0:1");
    CHECK(outcome.exit_code == 0);
    CHECK(outcome.text == "3*q^2");
  }
  SUBCASE("bad box specs") {
    const std::string path = write_fixture("tq.poly", kTriangleAllQ);
    CHECK_THROWS_AS(cli::cmd_lattice_sum(path, "0:1"), input_error);
    CHECK_THROWS_AS(cli::cmd_lattice_sum(path, "0:1,0"), input_error);
  }
}

TEST_CASE("cmd_render_svg") {
  namespace fs = std::filesystem;
  const auto out_dir = fs::temp_directory_path();

  auto render = [&](const char* fixture, const std::string& mode, const char* name,
                    std::optional<Vec> xi = std::nullopt) {
    const std::string path = write_fixture(name + std::string(".poly"), fixture);
    const std::string out = (out_dir / (name + std::string(".svg"))).string();
    const cli::CommandOutcome outcome = cli::cmd_render_svg(path, mode, xi, out);
    std::ifstream in(out);
    std::stringstream buffer;
    buffer << in.rdbuf();
    return std::pair<nlohmann::json, std::string>(outcome.report, buffer.str());
  };

  SUBCASE("interval bg: 4 panels") {
    const auto [report, svg] = render("dim 1\nfacet 1 0 weight=q\nfacet -1 1 weight=q\n", "bg",
                                      "interval_render");
    CHECK(report["panels"] == 4);
    CHECK(svg.rfind("<?xml", 0) == 0);
    CHECK(svg.find("version=\"1.1\"") != std::string::npos);
    CHECK(svg.find("</svg>") != std::string::npos);
    CHECK(svg.find(">q<") != std::string::npos);  // endpoint weight labels
  }
  SUBCASE("triangle bg: 8 panels") {
    const auto [report, svg] = render(kTriangleFile, "bg", "triangle_render");
    CHECK(report["panels"] == 8);
    CHECK(svg.find("polygon") != std::string::npos);
  }
  SUBCASE("triangle polar: 4 panels") {
    const auto [report, svg] = render(kTriangleAllQ, "polar", "triangle_polar_render",
                                      Vec{Rational(1), Rational(2)});
    CHECK(report["panels"] == 4);
    CHECK(svg.find("-q + 1") != std::string::npos);  // flipped facet weight label
  }
  SUBCASE("3-D input is refused with a projection hint") {
    const std::string path = write_fixture("pyr_render.poly", kPyramidFile);
    CHECK_THROWS_WITH_AS(cli::cmd_render_svg(path, "bg", std::nullopt, "/tmp/x.svg"),
                         doctest::Contains("project"), input_error);
  }
}

TEST_CASE("cmd_info") {
  const std::string path = write_fixture("pyramid.poly", kPyramidFile);
  const cli::CommandOutcome outcome = cli::cmd_info(path);
  CHECK(outcome.exit_code == 0);
  CHECK(outcome.report["dim"] == 3);
  CHECK(outcome.report["facets"] == 5);
  CHECK(outcome.report["genericity"] == "nonsimple-vertices-only");
  CHECK(outcome.report["face_count"] == 19);
  REQUIRE(outcome.report["nonsimple_vertices"].size() == 1);
  CHECK(outcome.text.find("nonsimple-vertices-only") != std::string::npos);
}

TEST_CASE("reports are stable across runs and re-verify in every mode") {
  const std::string path = write_fixture("triangle.poly", kTriangleFile);
  for (const std::string mode : {"bg", "faces", "brion"}) {
    cli::DecomposeOptions options;
    options.mode = mode;
    const auto first = cli::cmd_decompose(path, options);
    const auto second = cli::cmd_decompose(path, options);
    CHECK(first.report.dump() == second.report.dump());
    CHECK(cli::reverify_report(first.report).is_equal());
  }
}

TEST_CASE("unbounded inputs") {
  const std::string quadrant = write_fixture("quadrant.poly",
                                             "dim 2\n"
                                             "facet 1 0 0\n"
                                             "facet 0 1 0\n");
  const auto info = cli::cmd_info(quadrant);
  CHECK(info.report["bounded"] == false);
  CHECK(info.report["face_count"] == 4);  // apex, two rays, the cone
  CHECK_THROWS_AS(cli::cmd_decompose(quadrant, {}), input_error);
  CHECK_THROWS_AS(cli::cmd_lattice_sum(quadrant, "0:1,0:1"), input_error);
}

TEST_CASE("the shipped fixture files parse and verify") {
  const std::string dir = GRAMCAL_FIXTURES_DIR;
  struct Expectation {
    const char* name;
    int dim;
    const char* genericity;
  };
  for (const auto& e : {Expectation{"triangle.poly", 2, "simple"},
                        Expectation{"triangle_q.poly", 2, "simple"},
                        Expectation{"segment.poly", 1, "simple"},
                        Expectation{"pyramid.poly", 3, "nonsimple-vertices-only"},
                        Expectation{"octahedron.poly", 3, "nonsimple-vertices-only"}}) {
    const auto info = cli::cmd_info(dir + "/" + e.name);
    CHECK(info.report["dim"] == e.dim);
    CHECK(info.report["genericity"] == e.genericity);
    CHECK(info.report["bounded"] == true);
  }
  cli::DecomposeOptions options;
  options.cell_cap = 14;
  CHECK(cli::cmd_decompose(dir + "/octahedron.poly", options).exit_code == 0);
}

TEST_CASE("parse_xi") {
  CHECK(cli::parse_xi("1,2", 2) == Vec{Rational(1), Rational(2)});
  CHECK(cli::parse_xi("1/2,-3", 2) == Vec{make_rational(1, 2), Rational(-3)});
  CHECK_THROWS_AS(cli::parse_xi("1", 2), input_error);
  CHECK_THROWS_AS(cli::parse_xi("1,x", 2), input_error);
}
