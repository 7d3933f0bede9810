#include <doctest.h>

#include <fstream>
#include <sstream>

#include "affcrystal/serialize.hpp"
#include "affcrystal/verify.hpp"

using namespace affcrystal;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream is(path, std::ios::binary);
  std::ostringstream os;
  os << is.rdbuf();
  return os.str();
}

const Geometry& example() {
  static const Geometry g = compute_geometry(example_lambda(), example_word(), 0);
  return g;
}

}  // namespace

TEST_CASE("parse_lambda") {
  CHECK(parse_lambda("2,1,0") == WeightVec{2, 1, 0});
  CHECK(parse_lambda(" 1, 0 ") == WeightVec{1, 0});
  CHECK_THROWS_AS(parse_lambda("1"), std::invalid_argument);
  CHECK_THROWS_AS(parse_lambda("1,-1"), std::invalid_argument);
  CHECK_THROWS_AS(parse_lambda("0,0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_lambda("1,x"), std::invalid_argument);
  CHECK_THROWS_AS(parse_lambda(""), std::invalid_argument);
}

TEST_CASE("path round trips") {
  const auto& g = example();
  for (const auto& p : {g.p1, g.pn, g.pad, ground_path(example_lambda(), PathKind::Ad)}) {
    const Json j = to_json(p);
    CHECK(j["schema"] == "v1");
    CHECK(j["type"] == "path");
    CHECK(path_from_json(j) == p);
    CHECK(path_from_json(Json::parse(dump(j))) == p);
  }
  const Json j = to_json(g.p1);
  CHECK(j["rendered"].size() == g.p1.deviations.size());
}

TEST_CASE("path parse errors") {
  Json j = to_json(example().p1);
  Json bad = j;
  bad["kind"] = "B7";
  CHECK_THROWS_AS(path_from_json(bad), std::invalid_argument);
  bad = j;
  bad["deviations"][0] = Json{{"nu", {1, 1}}};
  CHECK_THROWS_AS(path_from_json(bad), std::invalid_argument);
  bad = j;
  bad["deviations"][0] = Json{{"nu", {3, 0, 1}}};  // wrong level
  CHECK_THROWS_AS(path_from_json(bad), std::invalid_argument);
  bad = j;
  bad.erase("lambda");
  CHECK_THROWS_AS(path_from_json(bad), std::invalid_argument);
  CHECK_THROWS_AS(path_from_json(Json::array()), std::invalid_argument);
  bad = j;
  bad["schema"] = "v0";
  CHECK_THROWS_AS(path_from_json(bad), std::invalid_argument);
}

TEST_CASE("walls, units and tables round trip") {
  const auto& g = example();
  CHECK(walls_from_json(to_json(g.y)) == g.y);
  CHECK(walls_from_json(to_json(g.ybar)) == g.ybar);
  const auto wm = wall_matrix_from_json(to_json(g.x_units));
  CHECK(wm.units == g.x_units.units);
  CHECK(wm.alpha == g.alpha);
  CHECK(wm.degree == 1);
  for (const auto& u : g.xbar_units.units) CHECK(unit_from_json(to_json(u)) == u);
  CHECK(to_json(g.x_units.units[0])["text"] == "E^0_{0,0}");
  const auto kt = kernel_table_from_json(to_json(g.table));
  CHECK(kt == g.table);
  CHECK(kt.seeds == g.table.seeds);

  Json badw = to_json(g.y);
  std::swap(badw["heights"][0], badw["heights"][1]);
  CHECK_THROWS_AS(walls_from_json(badw), std::invalid_argument);
  CHECK_THROWS_AS(root_from_json(Json::array({1, "a"})), std::invalid_argument);
  CHECK_THROWS_AS(weight_from_json(Json::object()), std::invalid_argument);
}

TEST_CASE("output is stable") {
  const auto a = dump(example_json(0));
  const auto b = dump(example_json(0));
  const auto c = dump(example_json(12345));
  CHECK(a == b);
  CHECK(a == c);
  CHECK(a.back() == '\n');
}

TEST_CASE("golden example fixture") {
  const std::string text = slurp(std::string(FIXTURE_DIR) + "/example_golden.json");
  REQUIRE_FALSE(text.empty());
  const Json expected = Json::parse(text);
  const Json actual = example_json(0);
  CHECK(json_diff(expected, actual).empty());
  CHECK(dump(actual) == text);

  const Json corrupted = Json::parse(slurp(std::string(FIXTURE_DIR) + "/example_corrupted.json"));
  const Json d = json_diff(corrupted, actual);
  REQUIRE(d.size() == 1);
  CHECK(d[0]["path"] == "/displays/Ad/1");
}

TEST_CASE("report json") {
  const auto r = pipeline(example_lambda(), example_word(), 0);
  const Json j = to_json(r);
  CHECK(j["paths"]["B1"]["firstMismatch"] == -1);
  CHECK(j["stable"] == true);
  const Json q = quiver_json(r);
  CHECK(q["commutantDim"] == 29);
  CHECK(q["alpha"] == Json::array({4, 7, 6}));
}
