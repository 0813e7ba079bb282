#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>
#include <json.hpp>

#include <string>

#include "gfg.h"

namespace {
struct Str {
  char* s = nullptr;
  ~Str() { gfg_string_free(s); }
  nlohmann::json json() const { return nlohmann::json::parse(std::string(s)); }
};

struct Handle {
  gfg_algebra* a = nullptr;
  ~Handle() { gfg_algebra_free(a); }
};
}  // namespace

TEST_CASE("catalog construction and validation") {
  Handle h;
  Str msg;
  REQUIRE(gfg_algebra_catalog("sl2", &h.a, &msg.s) == GFG_OK);
  Str rep;
  CHECK(gfg_validate(h.a, &rep.s) == GFG_OK);
  CHECK(rep.json()["ok"] == true);
  Handle bad;
  Str err;
  CHECK(gfg_algebra_catalog("nope", &bad.a, &err.s) == GFG_ERR);
  CHECK(bad.a == nullptr);
  CHECK(err.json().contains("error"));
}

TEST_CASE("load, save, reload") {
  Handle h;
  Str msg;
  REQUIRE(gfg_algebra_catalog("gl2,2", &h.a, &msg.s) == GFG_OK);
  Str doc;
  REQUIRE(gfg_algebra_save(h.a, &doc.s) == GFG_OK);
  Handle h2;
  Str msg2;
  REQUIRE(gfg_algebra_load(doc.s, &h2.a, &msg2.s) == GFG_OK);
  Str doc2;
  REQUIRE(gfg_algebra_save(h2.a, &doc2.s) == GFG_OK);
  CHECK(std::string(doc.s) == std::string(doc2.s));
  Handle h3;
  Str msg3;
  CHECK(gfg_algebra_load("{\"dim\": true}", &h3.a, &msg3.s) == GFG_FAIL);
}

TEST_CASE("chart action through the C interface") {
  Handle h;
  Str msg;
  REQUIRE(gfg_algebra_catalog("sl2", &h.a, &msg.s) == GFG_OK);
  Str out;
  CHECK(gfg_act(h.a, "-[0,0,1]", "[1,0,0]", &out.s) == GFG_OK);
  auto j = out.json();
  CHECK(j["defined"] == true);
  CHECK(j["value"][0] == "1/2");
  // Weyl word at the origin leaves the chart
  Str out2;
  CHECK(gfg_act(h.a, "+[1,0,0];-[0,0,-1];+[1,0,0]", "[0,0,0]", &out2.s) == GFG_FAIL);
  CHECK(out2.json()["defined"] == false);
  Str out3;
  CHECK(gfg_act(h.a, "garbage", "[0,0,0]", &out3.s) == GFG_ERR);
  Str out4;
  CHECK(gfg_act(h.a, "-[0,0,1]", "[0,1,0]", &out4.s) == GFG_ERR);  // not in n+_1
}

TEST_CASE("bergman, kernel, torsor, realize") {
  Handle h;
  Str msg;
  REQUIRE(gfg_algebra_catalog("sl2", &h.a, &msg.s) == GFG_OK);
  Str b;
  CHECK(gfg_bergman(h.a, "[1,0,0]", "[0,0,1]", 1, &b.s) == GFG_OK);
  CHECK(b.json()["plus_det"] == "4");
  Str k;
  CHECK(gfg_kernel(h.a, "[1,0,0]", "[0,0,1]", 1, &k.s) == GFG_OK);
  CHECK(k.json()["invertible"] == false);
  Str t;
  CHECK(gfg_torsor(h.a, "+[2,0,0]", &t.s) == GFG_OK);
  CHECK(t.json()["chart_point"][0] == "2");
  Str t2;
  CHECK(gfg_torsor(h.a, "-[0,0,1]", &t2.s) == GFG_OK);  // target stays n-
  Str r;
  CHECK(gfg_realize(h.a, "[0,0,1]", 1, &r.s) == GFG_OK);
  CHECK(r.json()["components"][0] == "-x1^2");
  Str e;
  CHECK(gfg_realize(h.a, "[0,0,1]", 7, &e.s) == GFG_ERR);
}

TEST_CASE("property suites through the C interface") {
  Handle h;
  Str msg;
  REQUIRE(gfg_algebra_catalog("sl2", &h.a, &msg.s) == GFG_OK);
  Str rep;
  CHECK(gfg_properties(h.a, 42, 5, &rep.s) == GFG_OK);
  auto j = rep.json();
  CHECK(j["ok"] == true);
  CHECK(j["suites"].size() == 9);
  Str err;
  CHECK(gfg_properties(h.a, 42, 0, &err.s) == GFG_ERR);
}

TEST_CASE("null arguments yield GFG_ERR") {
  CHECK(gfg_algebra_load(nullptr, nullptr, nullptr) == GFG_ERR);
  CHECK(gfg_validate(nullptr, nullptr) == GFG_ERR);
  CHECK(std::string(gfg_version()).size() > 0);
}
