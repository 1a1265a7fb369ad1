#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "equimack/json_io.hpp"

using namespace equimack;

TEST_CASE("matrices round-trip through JSON, including huge entries") {
  IntMatrix m(2, 3);
  m.at(0, 0) = Int("123456789012345678901234567890");
  m.at(1, 2) = Int("-987654321098765432109876543210");
  IntMatrix back = matrix_from_json(matrix_to_json(m));
  CHECK(back == m);
  Json j = matrix_to_json(m);
  CHECK(j["entries"][0][0].get<std::string>() == "123456789012345678901234567890");
}

TEST_CASE("groups round-trip and canonicalize") {
  FiniteAbelianGroup g = make_group({2, 6});
  Json j = group_to_json(g);
  CHECK(j["name"] == "C2xC6");
  CHECK(group_from_json(j) == g);
  CHECK(group_from_json(Json{{"factors", std::vector<long>{3, 4}}}).factors ==
        std::vector<long>{12});
}

TEST_CASE("lattice JSON lists subgroups with containments") {
  auto lat = subgroup_lattice(make_group({4}));
  Json j = lattice_to_json(*lat);
  REQUIRE(j["subgroups"].size() == 3);
  CHECK(j["subgroups"][0]["order"] == 1);
  CHECK(j["subgroups"][0]["contained_in"].size() == 2);
  CHECK(j["subgroups"][2]["contained_in"].empty());
}

TEST_CASE("DOT output has exactly the covering edges") {
  auto lat = subgroup_lattice(make_group({4}));
  std::string dot = lattice_to_dot(*lat);
  CHECK(dot.find("s0 -> s1;") != std::string::npos);
  CHECK(dot.find("s1 -> s2;") != std::string::npos);
  // e < C_4 is not a covering relation
  CHECK(dot.find("s0 -> s2;") == std::string::npos);
  CHECK(dot.find("rankdir=BT") != std::string::npos);
}

TEST_CASE("twists round-trip through JSON") {
  auto lat = subgroup_lattice(make_group({9}));
  Twist a = make_twist(lat, IntVec{Int(-7), Int(2), Int(1)});
  Twist back = twist_from_json(lat, twist_to_json(a));
  CHECK(back.value == a.value);
  CHECK_THROWS_AS(twist_from_json(lat, Json{{"values", {"0", "1", "1"}}}), InvalidInputError);
}

TEST_CASE("Mackey functors round-trip through JSON") {
  auto lat = subgroup_lattice(make_group({2, 2}));
  IntVec v(5, 1);
  for (int h = 0; h < 5; ++h)
    if (lat->subs[h].order == 2) v[h] = 3;
  MackeyFunctor m = twisted_burnside(make_twist(lat, v));
  MackeyFunctor back = functor_from_json(lat, functor_to_json(m));
  for (int h = 0; h < lat->size(); ++h) {
    CHECK(back.rank(h) == m.rank(h));
    CHECK(back.levels[h].basis == m.levels[h].basis);
    for (int k : lat->below[h]) {
      CHECK(back.resMaps[h][k] == m.resMaps[h][k]);
      CHECK(back.trMaps[h][k] == m.trMaps[h][k]);
    }
    for (int g = 0; g < lat->group.numGens(); ++g) CHECK(back.weyl[h][g] == m.weyl[h][g]);
  }
  CHECK(check_axioms(back).ok());
}

TEST_CASE("morphism and report JSON carry the verification data") {
  auto lat = subgroup_lattice(make_group({4}));
  MackeyMorphism id = identity_morphism(burnside_mackey(lat));
  Json j = morphism_to_json(id);
  CHECK(j["components"].size() == 3);
  CHECK(matrix_from_json(j["components"][2]).isIdentity());

  ValidationReport rep;
  CHECK(report_to_json(rep)["ok"] == true);
  rep.violations.push_back("example");
  Json jr = report_to_json(rep);
  CHECK(jr["ok"] == false);
  CHECK(jr["violations"][0] == "example");
}

TEST_CASE("Lewis rendering walks levels top-down with edge matrices") {
  auto lat = subgroup_lattice(make_group({2}));
  std::string text = render_lewis(burnside_mackey(lat));
  CHECK(text.find("level #1 (order 2): rank 2") != std::string::npos);
  CHECK(text.find("level #0 (order 1): rank 1") != std::string::npos);
  CHECK(text.find("res -> #0: [[2,1]]") != std::string::npos);
  CHECK(text.find("tr  <- #0: [[1] [0]]") != std::string::npos);
  // the top level comes first
  CHECK(text.find("level #1") < text.find("level #0"));
}
