#pragma once

#include <cmath>
#include <cstdint>
#include <filesystem>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "pns/io.hpp"
#include "pns/pns_set.hpp"

namespace pns::test {

inline std::filesystem::path fixture(std::string_view name) {
  return std::filesystem::path(PNS_FIXTURE_DIR) / name;
}

inline PnsSet load_fixture(std::string_view name) { return io::load_pns(fixture(name)); }

inline std::vector<std::string> labels(std::string_view prefix, std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t k = 1; k <= n; ++k) out.push_back(std::string(prefix) + std::to_string(k));
  return out;
}

struct Cell {
  double t, i, f, mu;
};

/// Builds a set from row-major cells given as plain numbers.
inline PnsSet make_set(std::vector<std::string> params, std::vector<std::string> universe,
                       const std::vector<Cell>& cells) {
  std::vector<PossValue> out;
  for (const auto& c : cells) out.push_back({NeutrosophicTriple(c.t, c.i, c.f), UnitScalar(c.mu)});
  return PnsSet(std::move(params), std::move(universe), std::move(out));
}

/// Seeded random source. Half of the draws come from a coarse decimal grid so
/// that ties and boundary values (0, 1) show up often.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  double unit() {
    if (coin()) return static_cast<double>(std::uniform_int_distribution<int>(0, 10)(rng_)) / 10.0;
    return std::uniform_real_distribution<double>(0.0, 1.0)(rng_);
  }
  double continuous() { return std::uniform_real_distribution<double>(0.0, 1.0)(rng_); }
  bool coin() { return std::uniform_int_distribution<int>(0, 1)(rng_) == 1; }
  std::size_t index(std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng_); }

  NeutrosophicTriple triple() { return {UnitScalar(unit()), UnitScalar(unit()), UnitScalar(unit())}; }
  PossValue cell() { return {triple(), UnitScalar(unit())}; }

  PnsSet set(std::size_t params, std::size_t elements) {
    std::vector<PossValue> cells;
    cells.reserve(params * elements);
    for (std::size_t k = 0; k < params * elements; ++k) cells.push_back(cell());
    return PnsSet(labels("e", params), labels("u", elements), std::move(cells));
  }
  /// Same labels as `like`, fresh random cells.
  PnsSet set_like(const PnsSet& like) {
    std::vector<PossValue> cells;
    for (std::size_t k = 0; k < like.cells().size(); ++k) cells.push_back(cell());
    return PnsSet(like.parameters(), like.universe(), std::move(cells));
  }
  PnsSet small_set() { return set(1 + index(4), 1 + index(4)); }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

inline bool near(double a, double b, double tol) { return std::abs(a - b) <= tol; }

inline bool cells_near(const PnsSet& a, const PnsSet& b, double tol) {
  return approx_equals(a, b, tol);
}

// ---- JSON schema checks shared by the io tests and the acceptance suite ----

inline bool is_string_array(const io::Json& j) {
  if (!j.is_array()) return false;
  for (const auto& x : j)
    if (!x.is_string()) return false;
  return true;
}

inline bool is_number_array(const io::Json& j, std::size_t size) {
  if (!j.is_array() || j.size() != size) return false;
  for (const auto& x : j)
    if (!x.is_number()) return false;
  return true;
}

/// Set-shaped documents must re-parse and validate as a PNS-set.
inline bool set_schema_ok(const io::Json& j) {
  try {
    return validate(io::parse_pns_json(j.dump())).empty();
  } catch (const Error&) {
    return false;
  }
}

inline bool weighted_schema_ok(const io::Json& j) {
  if (!j.is_object() || !is_string_array(j.value("rows", io::Json())) ||
      !is_string_array(j.value("columns", io::Json())) || !j.contains("entries"))
    return false;
  const auto& entries = j["entries"];
  if (!entries.is_array() || entries.size() != j["rows"].size()) return false;
  for (const auto& row : entries)
    if (!is_number_array(row, j["columns"].size())) return false;
  return true;
}

inline bool decision_schema_ok(const io::Json& j) {
  if (!j.is_object() || !is_string_array(j.value("universe", io::Json()))) return false;
  const auto n = j["universe"].size();
  if (!j.contains("product") || !set_schema_ok(j["product"])) return false;
  if (!j.contains("weighted") || !j.contains("scores")) return false;
  for (const char* part : {"truth", "indeterminacy", "falsity"}) {
    if (!j["weighted"].contains(part) || !weighted_schema_ok(j["weighted"][part])) return false;
    if (!j["scores"].contains(part) || !is_number_array(j["scores"][part], n)) return false;
  }
  return is_number_array(j.value("decision_scores", io::Json()), n) &&
         is_string_array(j.value("ranking", io::Json())) && j["ranking"].size() == n &&
         is_string_array(j.value("winners", io::Json())) && !j["winners"].empty();
}

inline bool similarity_schema_ok(const io::Json& j) {
  if (!j.is_object() || !is_string_array(j.value("parameters", io::Json()))) return false;
  const auto n = j["parameters"].size();
  for (const char* part : {"value_similarity", "possibility_similarity"}) {
    if (!j.contains(part) || !j[part].is_object()) return false;
    if (!is_number_array(j[part].value("per_parameter", io::Json()), n)) return false;
    if (!j[part].contains("mean") || !j[part]["mean"].is_number()) return false;
  }
  return j.contains("p") && j["p"].is_number_integer() && j.contains("threshold") &&
         j["threshold"].is_number() && j.contains("similarity") && j["similarity"].is_number() &&
         j.contains("significant") && j["significant"].is_boolean();
}

inline bool selection_schema_ok(const io::Json& j) {
  if (!j.is_object() || !j.contains("model") || !j["model"].is_string()) return false;
  if (!j.contains("candidates") || !j["candidates"].is_array()) return false;
  for (const auto& c : j["candidates"]) {
    if (!c.contains("label") || !c["label"].is_string() || !c.contains("report") ||
        !c.contains("error"))
      return false;
    if (!c["report"].is_null() && !similarity_schema_ok(c["report"])) return false;
  }
  return is_string_array(j.value("ranking", io::Json())) &&
         j["ranking"].size() == j["candidates"].size() &&
         is_string_array(j.value("selected", io::Json())) &&
         is_string_array(j.value("significant", io::Json()));
}

inline bool validation_schema_ok(const io::Json& j) {
  if (!j.is_object() || !j.contains("file") || !j.contains("valid") || !j["valid"].is_boolean())
    return false;
  if (!j.contains("violations") || !j["violations"].is_array()) return false;
  for (const auto& v : j["violations"])
    if (!v.contains("kind") || !v.contains("parameter") || !v.contains("element") ||
        !v.contains("message"))
      return false;
  return true;
}

}  // namespace pns::test
