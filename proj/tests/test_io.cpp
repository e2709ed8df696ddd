#include <doctest.h>

#include <fstream>

#include "pns/decision.hpp"
#include "pns/errors.hpp"
#include "pns/io.hpp"
#include "pns/products.hpp"
#include "pns/similarity.hpp"
#include "support.hpp"

using namespace pns;
using pns::test::fixture;
using pns::test::load_fixture;

namespace {

std::string error_of(auto&& fn) {
  try {
    fn();
  } catch (const std::exception& e) {
    return e.what();
  }
  return {};
}

bool contains(const std::string& s, std::string_view needle) {
  return s.find(needle) != std::string::npos;
}

std::filesystem::path temp_path(std::string_view name) {
  return std::filesystem::temp_directory_path() / ("pns_test_io_" + std::string(name));
}

}  // namespace

TEST_CASE("every shipped fixture validates") {
  int seen = 0;
  for (const auto& entry : std::filesystem::recursive_directory_iterator(PNS_FIXTURE_DIR)) {
    if (!entry.is_regular_file()) continue;
    CAPTURE(entry.path().string());
    CHECK_NOTHROW(io::load_pns(entry.path()));
    ++seen;
  }
  CHECK(seen >= 13);
}

TEST_CASE("JSON syntax errors carry line and column") {
  const std::string text = "{\"parameters\": [\"e1\"],\n  \"universe\": [\"u1\"] \"cells\": []}";
  const auto msg = error_of([&] { io::parse_pns_json(text, "doc.json"); });
  CHECK(contains(msg, "doc.json:2:"));
}

TEST_CASE("JSON field errors name the cell") {
  const std::string text =
      R"({"parameters":["e1"],"universe":["u1","u2"],"cells":[[{"t":0.1,"i":0.1,"f":0.1,"mu":0.1},{"t":0.1,"i":0.1,"f":0.1,"mu":"x"}]]})";
  const auto msg = error_of([&] { io::parse_pns_json(text, "doc.json"); });
  CHECK(contains(msg, "cells[0][1] (e1, u2).mu"));

  const std::string missing = R"({"parameters":["e1"],"universe":["u1"],"cells":[[{"t":0.1,"i":0.1,"f":0.1}]]})";
  CHECK(contains(error_of([&] { io::parse_pns_json(missing); }), "missing field 'mu'"));

  const std::string labels = R"({"parameters":"e1","universe":["u1"],"cells":[]})";
  CHECK_THROWS_AS(io::parse_pns_json(labels), ParseError);
  CHECK_THROWS_AS(io::parse_pns_json("[1, 2]"), ParseError);
  CHECK_THROWS_AS(io::parse_pns_json(R"({"parameters":["e1"],"universe":["u1"],"cells":[[{"t":NaN}]]})"),
                  ParseError);
}

TEST_CASE("loading an out-of-range file names the cell") {
  const auto path = temp_path("range.json");
  {
    std::ofstream out(path);
    out << R"({"parameters":["e1","e2"],"universe":["u1"],"cells":[[{"t":0.1,"i":0.1,"f":0.1,"mu":0.1}],[{"t":0.1,"i":0.1,"f":0.1,"mu":1.3}]]})";
  }
  CHECK_THROWS_AS(io::load_pns(path), ValidationError);
  const auto msg = error_of([&] { io::load_pns(path); });
  CHECK(contains(msg, path.string()));
  CHECK(contains(msg, "(e2, u1)"));
  CHECK(contains(msg, "mu"));
  std::filesystem::remove(path);
  CHECK_THROWS_AS(io::load_pns(path), ParseError);
}

TEST_CASE("CSV import") {
  const auto csv = load_fixture("example_4_g.csv");
  CHECK(csv == load_fixture("example_4_g.json"));

  const std::string semicolons =
      "parameter;element;t;i;f;mu\n"
      "e1;u1;0,5;0,25;1;\"0,75\"\r\n"
      "\n"
      "e1;u2;0.1;0.2;0.3;0.4\n";
  const auto s = PnsSet::from_data(io::parse_pns_csv(semicolons));
  CHECK(s.at("e1", "u1").triple.t.value() == 0.5);
  CHECK(s.at("e1", "u1").mu.value() == 0.75);
  CHECK(s.at("e1", "u2").triple.f.value() == 0.3);

  const std::string quoted = "parameter,element,t,i,f,mu\n\"a, b\",u1,\"0,5\",0,0,1\n";
  const auto q = PnsSet::from_data(io::parse_pns_csv(quoted));
  CHECK(q.parameters() == std::vector<std::string>{"a, b"});
  CHECK(q.at(0, 0).triple.t.value() == 0.5);
}

TEST_CASE("CSV errors carry line numbers and cells") {
  CHECK(contains(error_of([] { io::parse_pns_csv("param,element,t,i,f,mu\n", "x.csv"); }), "x.csv:1"));
  CHECK(contains(error_of([] { io::parse_pns_csv("parameter,element,t,i,f,mu\ne1,u1,0.1,0.1\n", "x.csv"); }),
                 "x.csv:2"));
  CHECK(contains(error_of([] { io::parse_pns_csv("parameter,element,t,i,f,mu\ne1,u1,abc,0.1,0.1,0.1\n", "x.csv"); }),
                 "x.csv:2 (e1, u1) t"));
  CHECK(contains(error_of([] {
                   io::parse_pns_csv("parameter,element,t,i,f,mu\ne1,u1,0.1,0.1,0.1,0.1\ne1,u1,0.1,0.1,0.1,0.1\n");
                 }),
                 "duplicate"));
  CHECK(contains(error_of([] {
                   io::parse_pns_csv(
                       "parameter,element,t,i,f,mu\ne1,u1,0.1,0.1,0.1,0.1\ne2,u2,0.1,0.1,0.1,0.1\n");
                 }),
                 "missing cells (e1, u2) (e2, u1)"));
  CHECK_THROWS_AS(io::parse_pns_csv("parameter,element,t,i,f,mu\ne1,u1,inf,0.1,0.1,0.1\n"), ParseError);
  CHECK_THROWS_AS(io::parse_pns_csv(""), ParseError);
}

TEST_CASE("save then load is the identity") {
  pns::test::Gen gen(0x5a7e);
  const auto path = temp_path("roundtrip.json");
  for (int k = 0; k < 20; ++k) {
    const auto s = gen.set(1 + gen.index(5), 1 + gen.index(5));
    io::save_pns(s, path);
    CHECK(io::load_pns(path) == s);
  }
  std::filesystem::remove(path);
}

TEST_CASE("fixed-decimal dump") {
  io::Json j{{"a", 0.1}, {"b", -0.0000001}, {"c", {1.0, 2, "x"}}, {"d", io::Json::object()}, {"e", true}};
  const auto text = io::dump_fixed(j);
  CHECK(text ==
        "{\n"
        "  \"a\": 0.100000,\n"
        "  \"b\": 0.000000,\n"
        "  \"c\": [1.000000, 2, \"x\"],\n"
        "  \"d\": {},\n"
        "  \"e\": true\n"
        "}\n");
  CHECK(io::dump_fixed(j, 2).find("\"a\": 0.10") != std::string::npos);
}

TEST_CASE("serialized reports match their schemas") {
  const auto f = load_fixture("example_4_f.json");
  const auto g = load_fixture("example_4_g.json");
  CHECK(test::set_schema_ok(io::to_json(f)));

  const auto product = and_product(f, g);
  const auto pj = io::to_json(product);
  CHECK(test::set_schema_ok(pj));
  CHECK(pj["parameters"][1] == "e1*e2");
  CHECK(io::to_json(product, "&")["parameters"][1] == "e1&e2");

  const auto report = decide(f, g);
  const auto dj = io::to_json(report);
  CHECK(test::decision_schema_ok(dj));
  CHECK(dj["winners"] == io::Json::array({"u3"}));

  const auto sim = similarity(load_fixture("example_3_f.json"), load_fixture("example_3_g.json"));
  CHECK(test::similarity_schema_ok(io::to_json(sim)));

  const auto model = load_fixture("example_6/model.json");
  const std::vector<LabeledSet> list{{"same", model}, {"broken", f}};
  const auto sel = select_by_similarity(model, list);
  const auto sj = io::to_json(sel);
  CHECK(test::selection_schema_ok(sj));
  CHECK(sj["candidates"][1]["report"].is_null());

  // and the fixed-decimal text re-parses to an equivalent document
  CHECK(test::decision_schema_ok(io::Json::parse(io::dump_fixed(dj))));
  CHECK(test::selection_schema_ok(io::Json::parse(io::dump_fixed(sj))));
}

TEST_CASE("fixture helper points into the source tree") {
  CHECK(std::filesystem::exists(fixture("example_3_f.json")));
}
