#include <doctest.h>

#include <array>

#include "pns/decision.hpp"
#include "pns/errors.hpp"
#include "support.hpp"

using namespace pns;
using pns::test::load_fixture;
using pns::test::near;

namespace {

// Weighted matrices of the house example, rows e1*e1 .. e3*e3, columns u1..u3.
// Frozen from an independent recomputation.
constexpr std::array<double, 27> kTruth{
    0.44, 0.68, 0.58, 0.58, 0.36, 0.64, 0.68, 0.68, 0.76,  //
    0.44, 0.85, 0.44, 0.545, 0.60, 0.68, 0.52, 0.82, 0.52,  //
    0.44, 0.58, 0.52, 0.58, 0.44, 0.52, 0.60, 0.58, 0.60};
constexpr std::array<double, 27> kIndeterminacy{
    0.08, 0.06, 0.18, 0.18, 0.10, 0.24, 0.18, 0.08, 0.24,  //
    0.08, 0.40, 0.15, 0.18, 0.40, 0.36, 0.08, 0.32, 0.16,  //
    0.08, 0.15, 0.10, 0.18, 0.15, 0.12, 0.10, 0.15, 0.08};
constexpr std::array<double, 27> kFalsity{
    0.14, 0.10, 0.15, 0.21, 0.10, 0.20, 0.42, 0.10, 0.20,  //
    0.12, 0.20, 0.15, 0.18, 0.15, 0.30, 0.24, 0.20, 0.20,  //
    0.10, 0.12, 0.12, 0.15, 0.09, 0.12, 0.30, 0.15, 0.12};

DecisionReport house() { return decide(load_fixture("example_4_f.json"), load_fixture("example_4_g.json")); }

WeightedMatrix single_row(std::vector<double> entries) {
  WeightedMatrix w;
  w.rows = {{"a", "b"}};
  for (std::size_t k = 0; k < entries.size(); ++k) w.columns.push_back("u" + std::to_string(k + 1));
  w.entries = std::move(entries);
  return w;
}

}  // namespace

TEST_CASE("weighted matrices of the house example") {
  const auto r = house();
  for (std::size_t k = 0; k < 27; ++k) {
    CAPTURE(k);
    CHECK(near(r.weighted.truth.entries[k], kTruth[k], 1e-12));
    CHECK(near(r.weighted.indeterminacy.entries[k], kIndeterminacy[k], 1e-12));
    CHECK(near(r.weighted.falsity.entries[k], kFalsity[k], 1e-12));
  }
  CHECK(r.weighted.truth.at(0, 0) == doctest::Approx(0.3 + 0.2 - 0.06));
  CHECK(r.weighted.indeterminacy.at(3, 1) == doctest::Approx(0.40));
  CHECK(r.weighted.falsity.at(2, 0) == doctest::Approx(0.42));
}

TEST_CASE("scores, decision scores and winner of the house example") {
  const auto r = house();
  const std::array<double, 3> s_t{1.18, 2.93, 2.68}, s_i{0.18, 1.42, 0.66}, s_f{1.32, 0.32, 0.57};
  for (std::size_t u = 0; u < 3; ++u) {
    CHECK(r.s_t[u] == doctest::Approx(s_t[u]).epsilon(1e-9));
    CHECK(r.s_i[u] == doctest::Approx(s_i[u]).epsilon(1e-9));
    CHECK(r.s_f[u] == doctest::Approx(s_f[u]).epsilon(1e-9));
    CHECK(r.ds[u] == doctest::Approx(s_t[u] - s_i[u] - s_f[u]).epsilon(1e-9));
  }
  CHECK(r.ds[0] == doctest::Approx(-0.32).epsilon(1e-9));
  CHECK(r.ds[2] == doctest::Approx(1.45).epsilon(1e-9));
  CHECK(r.winners == std::vector<std::string>{"u3"});
  CHECK(r.ranking == std::vector<std::string>{"u3", "u2", "u1"});
}

TEST_CASE("row maxima score, ties all score") {
  CHECK(row_scores(single_row({0.5, 0.5, 0.2})) == std::vector<double>{0.5, 0.5, 0.0});
  CHECK(row_scores(single_row({0.1, 0.7, 0.2})) == std::vector<double>{0.0, 0.7, 0.0});
  CHECK(row_scores(single_row({0.0, 0.0})) == std::vector<double>{0.0, 0.0});

  WeightedMatrix two = single_row({0.3, 0.9, 0.4, 0.4, 0.1, 0.2, 0.4, 0.4});
  two.rows.push_back({"c", "d"});
  two.columns.resize(4);
  CHECK(row_scores(two) == std::vector<double>{0.0, 0.9, 0.4, 0.4});
}

TEST_CASE("decision scores") {
  const std::vector<double> t{1.18, 2.89, 2.68}, i{0.18, 1.42, 0.66}, f{1.32, 0.32, 0.57};
  const auto ds = decision_scores(t, i, f);
  CHECK(ds[0] == doctest::Approx(-0.32).epsilon(1e-12));
  CHECK(ds[1] == doctest::Approx(1.15).epsilon(1e-12));
  CHECK(ds[2] == doctest::Approx(1.45).epsilon(1e-12));

  const std::vector<double> zeros(3, 0.0);
  CHECK(decision_scores(zeros, zeros, zeros) == zeros);
  const std::vector<double> v{0.25, 1.5, 3.0};
  CHECK(decision_scores(v, v, v) == std::vector<double>{-0.25, -1.5, -3.0});

  const std::vector<double> shorter{1.0, 2.0};
  CHECK_THROWS_AS(decision_scores(t, shorter, f), IncompatibleVectors);
}

TEST_CASE("decide on a single observation runs cleanly") {
  const auto f = load_fixture("example_4_f.json");
  const auto r = decide(f, f);
  CHECK(r.ranking.size() == 3);
  CHECK_FALSE(r.winners.empty());
  CHECK(r.product.row_count() == 9);
}

TEST_CASE("ds ties report every tied element in universe order") {
  const auto s = pns::test::make_set({"e1"}, {"a", "b", "c"},
                                     {{0.5, 0.1, 0.1, 0.5}, {0.2, 0.1, 0.1, 0.5}, {0.5, 0.1, 0.1, 0.5}});
  const auto r = decide(s, s);
  CHECK(r.winners == std::vector<std::string>{"a", "c"});
  CHECK(r.ranking == std::vector<std::string>{"a", "c", "b"});
}

TEST_CASE("permuting the universe permutes ds") {
  const auto f = load_fixture("example_4_f.json");
  const auto g = load_fixture("example_4_g.json");
  const std::vector<std::string> order{"u3", "u1", "u2"};
  const auto r = decide(f, g);
  const auto p = decide(reorder(f, f.parameters(), order), reorder(g, g.parameters(), order));
  CHECK(p.ds[0] == r.ds[2]);
  CHECK(p.ds[1] == r.ds[0]);
  CHECK(p.ds[2] == r.ds[1]);
  CHECK(p.winners == r.winners);
}

TEST_CASE("serial and parallel pipelines agree") {
  const auto f = load_fixture("example_4_f.json");
  const auto g = load_fixture("example_4_g.json");
  const auto a = decide(f, g, Exec::serial);
  const auto b = decide(f, g, Exec::parallel);
  CHECK(a.ds == b.ds);
  CHECK(a.weighted.truth.entries == b.weighted.truth.entries);
}
