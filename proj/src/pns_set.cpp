#include "pns/pns_set.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <unordered_set>

#include "pns/kernels.hpp"

namespace pns {

namespace {

void check_labels(const std::vector<std::string>& labels, std::string_view what,
                  std::vector<Violation>& out) {
  if (labels.empty()) {
    out.push_back({Violation::Kind::label, {}, {}, std::string(what) + " list is empty"});
    return;
  }
  std::unordered_set<std::string_view> seen;
  for (const auto& label : labels) {
    if (label.empty()) {
      out.push_back({Violation::Kind::label, {}, {}, std::string(what) + " label is empty"});
    } else if (!seen.insert(label).second) {
      out.push_back({Violation::Kind::label, {}, {},
                     std::string(what) + " label '" + label + "' is duplicated"});
    }
  }
}

std::string describe(double v) {
  std::ostringstream s;
  s << v;
  return s.str();
}

std::vector<Violation> label_violations(const std::vector<std::string>& parameters,
                                        const std::vector<std::string>& universe) {
  std::vector<Violation> out;
  check_labels(parameters, "parameter", out);
  check_labels(universe, "universe", out);
  return out;
}

std::size_t index_of(const std::vector<std::string>& labels, std::string_view label,
                     std::string_view what) {
  const auto it = std::find(labels.begin(), labels.end(), label);
  if (it == labels.end()) {
    throw LookupError("unknown " + std::string(what) + " label '" + std::string(label) + "'");
  }
  return static_cast<std::size_t>(it - labels.begin());
}

/// Kernel output with a user-supplied profile may leave [0,1]; built-in families never do.
void require_in_range(const PnsSet& s, std::string_view operation) {
  if (const auto bad = kernels::first_out_of_range(s.cells())) {
    const std::size_t cols = s.element_count();
    throw RangeError(std::string(operation) + " produced a value outside [0,1] at (" +
                     s.parameters()[*bad / cols] + ", " + s.universe()[*bad % cols] + ")");
  }
}

}  // namespace

std::vector<Violation> validate(const PnsData& data) {
  auto out = label_violations(data.parameters, data.universe);

  if (data.rows.size() != data.parameters.size()) {
    out.push_back({Violation::Kind::shape, {}, {},
                   "matrix has " + std::to_string(data.rows.size()) + " rows but there are " +
                       std::to_string(data.parameters.size()) + " parameters"});
  }
  for (std::size_t r = 0; r < data.rows.size(); ++r) {
    const auto& row = data.rows[r];
    std::optional<std::string> param;
    if (r < data.parameters.size()) param = data.parameters[r];
    if (row.size() != data.universe.size()) {
      out.push_back({Violation::Kind::shape, param, {},
                     "row " + std::to_string(r) + " has " + std::to_string(row.size()) +
                         " cells but the universe has " + std::to_string(data.universe.size()) +
                         " elements"});
    }
    for (std::size_t c = 0; c < row.size(); ++c) {
      std::optional<std::string> elem;
      if (c < data.universe.size()) elem = data.universe[c];
      const RawCell& cell = row[c];
      const std::pair<const char*, double> fields[] = {
          {"t", cell.t}, {"i", cell.i}, {"f", cell.f}, {"mu", cell.mu}};
      for (const auto& [name, value] : fields) {
        if (!in_unit_range(value)) {
          out.push_back({Violation::Kind::range, param.value_or("row " + std::to_string(r)),
                         elem.value_or("column " + std::to_string(c)),
                         std::string(name) + " = " + describe(value) + " is outside [0,1]"});
        }
      }
    }
  }
  return out;
}

PnsSet::PnsSet(std::vector<std::string> parameters, std::vector<std::string> universe,
               std::vector<PossValue> cells)
    : parameters_(std::move(parameters)), universe_(std::move(universe)), cells_(std::move(cells)) {
  auto violations = label_violations(parameters_, universe_);
  if (cells_.size() != parameters_.size() * universe_.size()) {
    violations.push_back({Violation::Kind::shape, {}, {},
                          std::to_string(cells_.size()) + " cells for a " +
                              std::to_string(parameters_.size()) + "x" +
                              std::to_string(universe_.size()) + " matrix"});
  }
  if (!violations.empty()) throw ValidationError(std::move(violations));
}

PnsSet PnsSet::from_data(const PnsData& data) {
  auto violations = validate(data);
  if (!violations.empty()) throw ValidationError(std::move(violations));
  std::vector<PossValue> cells;
  cells.reserve(data.parameters.size() * data.universe.size());
  for (const auto& row : data.rows) {
    for (const auto& c : row) cells.push_back({{c.t, c.i, c.f}, UnitScalar(c.mu)});
  }
  return PnsSet(data.parameters, data.universe, std::move(cells));
}

PnsData PnsSet::to_data() const {
  PnsData data{parameters_, universe_, {}};
  data.rows.reserve(parameters_.size());
  for (std::size_t r = 0; r < parameters_.size(); ++r) {
    auto& row = data.rows.emplace_back();
    for (const auto& c : this->row(r)) {
      row.push_back({c.triple.t.value(), c.triple.i.value(), c.triple.f.value(), c.mu.value()});
    }
  }
  return data;
}

std::span<const PossValue> PnsSet::row(std::size_t parameter) const {
  return std::span<const PossValue>(cells_).subspan(parameter * universe_.size(), universe_.size());
}

const PossValue& PnsSet::at(std::string_view parameter, std::string_view element) const {
  return at(parameter_index(parameter), element_index(element));
}

std::size_t PnsSet::parameter_index(std::string_view label) const {
  return index_of(parameters_, label, "parameter");
}

std::size_t PnsSet::element_index(std::string_view label) const {
  return index_of(universe_, label, "universe");
}

PnsSet null_set(std::vector<std::string> parameters, std::vector<std::string> universe) {
  const std::size_t n = parameters.size() * universe.size();
  return PnsSet(std::move(parameters), std::move(universe),
                std::vector<PossValue>(n, {NeutrosophicTriple::zero(), UnitScalar::zero()}));
}

PnsSet universal_set(std::vector<std::string> parameters, std::vector<std::string> universe) {
  const std::size_t n = parameters.size() * universe.size();
  return PnsSet(std::move(parameters), std::move(universe),
                std::vector<PossValue>(n, {NeutrosophicTriple::one(), UnitScalar::one()}));
}

PnsSet reorder(const PnsSet& s, std::span<const std::string> parameters,
               std::span<const std::string> universe) {
  if (parameters.size() != s.parameter_count() || universe.size() != s.element_count()) {
    throw IncompatibleSets("reorder: label lists must be permutations of the set's labels");
  }
  std::vector<std::size_t> rows, cols;
  for (const auto& p : parameters) rows.push_back(s.parameter_index(p));
  for (const auto& u : universe) cols.push_back(s.element_index(u));
  std::vector<PossValue> cells;
  cells.reserve(s.cells().size());
  for (auto r : rows)
    for (auto c : cols) cells.push_back(s.at(r, c));
  // the PnsSet constructor rejects duplicates, so a non-permutation fails there
  return PnsSet({parameters.begin(), parameters.end()}, {universe.begin(), universe.end()},
                std::move(cells));
}

void require_same_labels(const PnsSet& f, const PnsSet& g, std::string_view operation) {
  if (!f.same_labels(g)) {
    throw IncompatibleSets(std::string(operation) +
                           ": sets must share identical parameter and universe labels in the "
                           "same order");
  }
}

void require_same_universe(const PnsSet& f, const PnsSet& g, std::string_view operation) {
  if (f.universe() != g.universe()) {
    throw IncompatibleSets(std::string(operation) +
                           ": sets must share identical universe labels in the same order");
  }
}

bool is_subset(const PnsSet& f, const PnsSet& g) {
  require_same_labels(f, g, "subset");
  const auto a = f.cells();
  const auto b = g.cells();
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (!(a[k].mu <= b[k].mu && triple_leq(a[k].triple, b[k].triple))) return false;
  }
  return true;
}

bool equals(const PnsSet& f, const PnsSet& g) { return is_subset(f, g) && is_subset(g, f); }

bool approx_equals(const PnsSet& f, const PnsSet& g, double tolerance) {
  require_same_labels(f, g, "approx_equals");
  const auto a = f.cells();
  const auto b = g.cells();
  auto near = [tolerance](UnitScalar x, UnitScalar y) {
    return std::abs(x.value() - y.value()) <= tolerance;
  };
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (!near(a[k].triple.t, b[k].triple.t) || !near(a[k].triple.i, b[k].triple.i) ||
        !near(a[k].triple.f, b[k].triple.f) || !near(a[k].mu, b[k].mu)) {
      return false;
    }
  }
  return true;
}

namespace {

PnsSet combine(const NormProfile& profile, kernels::Combine op, const PnsSet& f, const PnsSet& g,
               Exec exec, std::string_view name) {
  require_same_labels(f, g, name);
  std::vector<PossValue> out(f.cells().size());
  if (exec == Exec::parallel) {
    kernels::omp::combine(profile, op, f.cells(), g.cells(), out);
  } else {
    kernels::serial::combine(profile, op, f.cells(), g.cells(), out);
  }
  PnsSet result(f.parameters(), f.universe(), std::move(out));
  require_in_range(result, name);
  return result;
}

}  // namespace

PnsSet set_union(const NormProfile& profile, const PnsSet& f, const PnsSet& g, Exec exec) {
  return combine(profile, kernels::Combine::union_, f, g, exec, "union");
}

PnsSet set_intersection(const NormProfile& profile, const PnsSet& f, const PnsSet& g, Exec exec) {
  return combine(profile, kernels::Combine::intersection, f, g, exec, "intersection");
}

PnsSet complement(const NormProfile& profile, const PnsSet& f, Exec exec) {
  std::vector<PossValue> out(f.cells().size());
  if (exec == Exec::parallel) {
    kernels::omp::complement(profile, f.cells(), out);
  } else {
    kernels::serial::complement(profile, f.cells(), out);
  }
  PnsSet result(f.parameters(), f.universe(), std::move(out));
  require_in_range(result, "complement");
  return result;
}

Decomposition decompose(const PnsSet& f) {
  Decomposition parts{{f.parameters(), f.universe(), {}},
                      {f.parameters(), f.universe(), {}},
                      {f.parameters(), f.universe(), {}}};
  for (auto* part : {&parts.truth, &parts.indeterminacy, &parts.falsity}) {
    part->cells.reserve(f.cells().size());
  }
  for (const auto& c : f.cells()) {
    parts.truth.cells.push_back({c.triple.t, c.mu});
    parts.indeterminacy.cells.push_back({c.triple.i, c.mu});
    parts.falsity.cells.push_back({c.triple.f, c.mu});
  }
  return parts;
}

PnsSet recompose(const Decomposition& parts) {
  const auto& t = parts.truth;
  const auto& i = parts.indeterminacy;
  const auto& f = parts.falsity;
  if (t.parameters != i.parameters || t.parameters != f.parameters || t.universe != i.universe ||
      t.universe != f.universe || t.cells.size() != i.cells.size() ||
      t.cells.size() != f.cells.size()) {
    throw IncompatibleSets("recompose: parts disagree on labels or shape");
  }
  std::vector<PossValue> cells;
  cells.reserve(t.cells.size());
  for (std::size_t k = 0; k < t.cells.size(); ++k) {
    if (t.cells[k].mu != i.cells[k].mu || t.cells[k].mu != f.cells[k].mu) {
      throw IncompatibleSets("recompose: parts disagree on the possibility degree of cell " +
                             std::to_string(k));
    }
    cells.push_back({{t.cells[k].component, i.cells[k].component, f.cells[k].component},
                     t.cells[k].mu});
  }
  return PnsSet(t.parameters, t.universe, std::move(cells));
}

}  // namespace pns
