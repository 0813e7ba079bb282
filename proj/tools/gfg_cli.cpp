// Command-line front end; talks to the library exclusively through the C API.
#include <CLI11.hpp>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>
#include <string>

#include "gfg.h"

namespace {

struct AlgebraHandle {
  gfg_algebra* a = nullptr;
  ~AlgebraHandle() { gfg_algebra_free(a); }
};

struct OwnedString {
  char* s = nullptr;
  ~OwnedString() { gfg_string_free(s); }
  std::string str() const { return s ? std::string(s) : std::string(); }
};

void render(const nlohmann::json& j, const std::string& format, std::ostream& os,
            int indent = 0) {
  if (format == "json") {
    os << j.dump(2) << "\n";
    return;
  }
  std::string pad(size_t(indent), ' ');
  if (j.is_object()) {
    for (const auto& [key, val] : j.items()) {
      if (val.is_object() || (val.is_array() && !val.empty() && val[0].is_structured())) {
        os << pad << key << ":\n";
        render(val, format, os, indent + 2);
      } else {
        os << pad << key << ": " << (val.is_string() ? val.get<std::string>() : val.dump())
           << "\n";
      }
    }
  } else if (j.is_array()) {
    for (const auto& val : j) {
      if (val.is_structured() && !val.is_array()) {
        render(val, format, os, indent);
        os << "\n";
      } else {
        os << pad << "- " << (val.is_string() ? val.get<std::string>() : val.dump())
           << "\n";
      }
    }
  } else {
    os << pad << j.dump() << "\n";
  }
}

int show(gfg_status st, const OwnedString& out, const std::string& format) {
  if (out.s) {
    nlohmann::json j = nlohmann::json::parse(out.str(), nullptr, false);
    if (j.is_discarded())
      std::cout << out.str();
    else
      render(j, format, std::cout);
  }
  return int(st);
}

// --algebra takes a catalog name or a path to a JSON file.
int open_algebra(const std::string& spec, AlgebraHandle& h, const std::string& format) {
  std::ifstream f(spec);
  OwnedString msg;
  gfg_status st;
  if (f.good()) {
    std::ostringstream text;
    text << f.rdbuf();
    st = gfg_algebra_load(text.str().c_str(), &h.a, &msg.s);
  } else {
    st = gfg_algebra_catalog(spec.c_str(), &h.a, &msg.s);
  }
  if (st != GFG_OK) return show(st, msg, format);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations in graded Lie algebras and their flag geometries"};
  app.require_subcommand(1);

  std::string algebra, format = "human";
  std::string word, xs, ws, ys, emit_name;
  int layer = 1, trials = 25;
  unsigned long long seed = 1;

  auto add_common = [&](CLI::App* sub, bool needs_algebra = true) {
    if (needs_algebra)
      sub->add_option("--algebra", algebra, "catalog name or JSON file")->required();
    sub->add_option("--format", format, "human or json")
        ->check(CLI::IsMember({"human", "json"}));
  };

  CLI::App* c_catalog = app.add_subcommand("catalog", "list built-in algebras");
  add_common(c_catalog, false);
  c_catalog->add_option("--emit", emit_name, "print the JSON document of one entry");

  CLI::App* c_validate = app.add_subcommand("validate", "check all algebra/grading axioms");
  add_common(c_validate);

  CLI::App* c_act = app.add_subcommand("act", "birational chart action of a group word");
  add_common(c_act);
  c_act->add_option("--word", word, "group word, e.g. \"+[0,0,1];-[1,0,0]\"")->required();
  c_act->add_option("--x", xs, "chart point, full coordinates")->required();

  CLI::App* c_bergman = app.add_subcommand("bergman", "generalized Bergman operators");
  add_common(c_bergman);
  c_bergman->add_option("--x", xs)->required();
  c_bergman->add_option("--w", ws)->required();
  c_bergman->add_option("--layer", layer, "layer index, 1..k");

  CLI::App* c_torsor = app.add_subcommand("torsor", "unipotent transitivity solver");
  add_common(c_torsor);
  c_torsor->add_option("--word", word, "word whose action moves the base point")->required();

  CLI::App* c_kernel = app.add_subcommand("kernel", "canonical kernel of a point pair");
  add_common(c_kernel);
  c_kernel->add_option("--x", xs, "plus-side chart point")->required();
  c_kernel->add_option("--w", ws, "minus-side chart point")->required();
  c_kernel->add_option("--layer", layer, "layer index, 1..k");

  CLI::App* c_realize = app.add_subcommand("realize", "polynomial realization of an element");
  add_common(c_realize);
  c_realize->add_option("--y", ys, "algebra element, full coordinates")->required();
  c_realize->add_option("--layer", layer, "layer index, 1..k");

  CLI::App* c_props = app.add_subcommand("properties", "randomized property suites");
  add_common(c_props);
  c_props->add_option("--seed", seed);
  c_props->add_option("--trials", trials);

  CLI11_PARSE(app, argc, argv);

  try {
    if (c_catalog->parsed()) {
      OwnedString out;
      if (emit_name.empty()) return show(gfg_catalog_names(&out.s), out, format);
      AlgebraHandle h;
      int rc = open_algebra(emit_name, h, format);
      if (rc) return rc;
      gfg_status st = gfg_algebra_save(h.a, &out.s);
      if (out.s) std::cout << out.s;
      return int(st);
    }

    AlgebraHandle h;
    int rc = open_algebra(algebra, h, format);
    if (rc) return rc;
    OwnedString out;
    if (c_validate->parsed()) return show(gfg_validate(h.a, &out.s), out, format);
    if (c_act->parsed())
      return show(gfg_act(h.a, word.c_str(), xs.c_str(), &out.s), out, format);
    if (c_bergman->parsed())
      return show(gfg_bergman(h.a, xs.c_str(), ws.c_str(), layer, &out.s), out, format);
    if (c_torsor->parsed()) return show(gfg_torsor(h.a, word.c_str(), &out.s), out, format);
    if (c_kernel->parsed())
      return show(gfg_kernel(h.a, xs.c_str(), ws.c_str(), layer, &out.s), out, format);
    if (c_realize->parsed())
      return show(gfg_realize(h.a, ys.c_str(), layer, &out.s), out, format);
    if (c_props->parsed())
      return show(gfg_properties(h.a, seed, trials, &out.s), out, format);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
