#include <doctest.h>

#include "pns/errors.hpp"
#include "pns/products.hpp"
#include "support.hpp"

using namespace pns;
using pns::test::load_fixture;
using pns::test::make_set;

namespace {

void check_cell(const PossValue& c, double t, double i, double f, double mu) {
  CHECK(c.triple.t.value() == t);
  CHECK(c.triple.i.value() == i);
  CHECK(c.triple.f.value() == f);
  CHECK(c.mu.value() == mu);
}

}  // namespace

TEST_CASE("AND product rows enumerate parameter pairs first-major") {
  const auto p = and_product(load_fixture("example_4_f.json"), load_fixture("example_4_g.json"));
  REQUIRE(p.row_count() == 9);
  CHECK(p.row_params()[0] == ProductPnsSet::ParamPair{"e1", "e1"});
  CHECK(p.row_params()[1] == ProductPnsSet::ParamPair{"e1", "e2"});
  CHECK(p.row_params()[3] == ProductPnsSet::ParamPair{"e2", "e1"});
  CHECK(p.row_params()[8] == ProductPnsSet::ParamPair{"e3", "e3"});
  CHECK(p.universe() == std::vector<std::string>{"u1", "u2", "u3"});
}

TEST_CASE("AND product cells of the house example") {
  const auto p = and_product(load_fixture("example_4_f.json"), load_fixture("example_4_g.json"));
  check_cell(p.at("e1", "e1", "u1"), 0.3, 0.4, 0.7, 0.2);
  check_cell(p.at("e2", "e2", "u1"), 0.35, 0.6, 0.6, 0.3);
  check_cell(p.at("e1", "e2", "u1"), 0.4, 0.6, 0.7, 0.3);
  check_cell(p.at("e2", "e3", "u2"), 0.7, 0.8, 0.5, 0.4);
  CHECK_THROWS_AS(p.at("e1", "e4", "u1"), LookupError);
}

TEST_CASE("as-printed house input disagrees with the published product") {
  // The published product, weighted falsity matrix and falsity scores all need
  // falsity 0.5 for f(e2)(u3); with 0.4 three product cells change.
  const auto fixed = load_fixture("example_4_f.json");
  auto data = fixed.to_data();
  data.rows[1][2].f = 0.4;
  const auto printed = PnsSet::from_data(data);
  const auto g = load_fixture("example_4_g.json");
  const auto a = and_product(fixed, g);
  const auto b = and_product(printed, g);
  int differing = 0;
  for (std::size_t k = 0; k < a.cells().size(); ++k) differing += a.cells()[k] != b.cells()[k];
  CHECK(differing == 3);
  for (const char* second : {"e1", "e2", "e3"}) {
    CHECK(a.at("e2", second, "u3").triple.f.value() == 0.5);
    CHECK(b.at("e2", second, "u3").triple.f.value() == 0.4);
  }
}

TEST_CASE("OR product") {
  const auto p = or_product(load_fixture("example_4_f.json"), load_fixture("example_4_g.json"));
  check_cell(p.at("e1", "e1", "u1"), 0.5, 0.3, 0.5, 0.6);

  const auto bottom = null_set({"e1", "e2"}, {"u1", "u2"});
  const auto low = or_product(bottom, bottom);
  for (const auto& c : low.cells()) check_cell(c, 0, 1, 1, 0);
  const auto top = universal_set({"e1", "e2"}, {"u1", "u2"});
  const auto high = and_product(top, top);
  for (const auto& c : high.cells()) check_cell(c, 1, 0, 0, 1);
}

TEST_CASE("products accept different parameter sets over the same universe") {
  const auto f = make_set({"a"}, {"x", "y"}, {{0.1, 0.2, 0.3, 0.4}, {0.5, 0.6, 0.7, 0.8}});
  const auto g = make_set({"b", "c"}, {"x", "y"},
                          {{0.9, 0.1, 0.1, 0.5}, {0.2, 0.2, 0.2, 0.2}, {0.4, 0.4, 0.4, 0.4}, {0.3, 0.9, 0.1, 1.0}});
  const auto p = and_product(f, g);
  CHECK(p.row_count() == 2);
  check_cell(p.at("a", "c", "y"), 0.3, 0.9, 0.7, 0.8);

  const auto h = make_set({"a"}, {"x", "z"}, {{0.1, 0.2, 0.3, 0.4}, {0.5, 0.6, 0.7, 0.8}});
  CHECK_THROWS_AS(and_product(f, h), IncompatibleSets);
  CHECK_THROWS_AS(or_product(f, h), IncompatibleSets);
}

TEST_CASE("product flattens to a set with joined labels") {
  const auto p = and_product(load_fixture("example_4_f.json"), load_fixture("example_4_g.json"));
  const auto s = p.to_pns();
  CHECK(s.parameters().front() == "e1*e1");
  CHECK(s.parameters().back() == "e3*e3");
  CHECK(p.to_pns("/").parameters()[1] == "e1/e2");
  CHECK(s.at("e2*e2", "u1") == p.at("e2", "e2", "u1"));
}

TEST_CASE("serial and parallel products agree") {
  const auto f = load_fixture("example_4_f.json");
  const auto g = load_fixture("example_4_g.json");
  CHECK(and_product(f, g, Exec::serial) == and_product(f, g, Exec::parallel));
  CHECK(or_product(f, g, Exec::serial) == or_product(f, g, Exec::parallel));
}
