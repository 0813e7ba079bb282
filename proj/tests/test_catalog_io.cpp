#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>
#include <json.hpp>

#include "gfg/io.hpp"

using namespace gfg;

TEST_CASE("catalog lookup and limits") {
  CHECK(catalog_lookup("sl2").algebra.dim() == 3);
  CHECK(catalog_lookup("gl2,1,1").grading.k == 2);
  CHECK(catalog_lookup("gl1,1,1,1,1").grading.k == 4);
  CHECK_THROWS_AS(catalog_lookup("gl4,3"), std::invalid_argument);  // cap at 6
  CHECK_THROWS_AS(catalog_lookup("gl2"), std::invalid_argument);    // one block
  CHECK_THROWS_AS(catalog_lookup("so3"), std::invalid_argument);
  CHECK_THROWS_AS(catalog_lookup("gl2,x"), std::invalid_argument);
  for (const auto& name : catalog_names()) CHECK(catalog_lookup(name).name == name);
}

TEST_CASE("JSON round trip is byte exact") {
  for (const std::string& name : {"sl2", "gl2,2", "gl2,1,1"}) {
    CatalogEntry e = catalog_lookup(name);
    std::string s1 = algebra_to_json(e);
    CatalogEntry e2 = algebra_from_json(s1);
    CHECK(algebra_to_json(e2) == s1);
    CHECK(e2.algebra.dim() == e.algebra.dim());
    CHECK(e2.grading.layers == e.grading.layers);
    CHECK(e2.grading.euler == e.grading.euler);
  }
}

TEST_CASE("malformed documents are rejected with messages") {
  CHECK_THROWS_AS(algebra_from_json("not json"), std::invalid_argument);
  CHECK_THROWS_AS(algebra_from_json("{}"), std::invalid_argument);
  CHECK_THROWS_AS(algebra_from_json(R"({"dim": 0, "structure": []})"),
                  std::invalid_argument);
  // bad structure index
  CHECK_THROWS_AS(
      algebra_from_json(
          R"({"dim": 2, "structure": [[0, 5, ["1", "0"]]], "grading": {"k": 0, "layers": [[]]}})"),
      std::invalid_argument);
}

TEST_CASE("axiom violations are caught on load") {
  // break one structure constant of sl2: [e,f] = h + e is not a Lie bracket
  CatalogEntry sl2 = catalog_sl2();
  nlohmann::json doc = nlohmann::json::parse(algebra_to_json(sl2));
  for (auto& triple : doc["structure"])
    if (triple[0] == 0 && triple[1] == 2) triple[2][0] = "1";  // was "0"
  std::string broken = doc.dump();
  CHECK_THROWS_AS(algebra_from_json(broken), std::invalid_argument);
  Report rep;
  algebra_from_json_report(broken, rep);
  CHECK_FALSE(rep.ok());
}

TEST_CASE("vector and word parsing") {
  Matrix v = parse_vector(" [ 1, 0, -1/2 ] ", 3);
  CHECK(v.at(0, 0) == 1);
  CHECK(v.at(2, 0) == Rat(-1, 2));
  CHECK_THROWS_AS(parse_vector("[1,2]", 3), std::invalid_argument);
  CHECK_THROWS_AS(parse_vector("1,2,3", 3), std::invalid_argument);
  auto w = parse_word("+[1,0,0];-[0,0,2]", 3);
  REQUIRE(w.size() == 2);
  CHECK(w[0].first == 1);
  CHECK(w[1].first == -1);
  CHECK(w[1].second.at(2, 0) == 2);
  CHECK_THROWS_AS(parse_word("", 3), std::invalid_argument);
  CHECK_THROWS_AS(parse_word("[1,0,0]", 3), std::invalid_argument);
  CatalogEntry sl2 = catalog_sl2();
  GradedFrame fr(sl2.algebra, sl2.grading);
  GroupElement g = word_to_element(fr, w);
  CHECK(g.word.size() == 2);
  // letters outside the required nilpotent part are rejected
  CHECK_THROWS_AS(word_to_element(fr, parse_word("+[0,1,0]", 3)), std::invalid_argument);
}
