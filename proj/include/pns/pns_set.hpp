#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "pns/errors.hpp"
#include "pns/exec.hpp"
#include "pns/norms.hpp"
#include "pns/scalar.hpp"

namespace pns {

/// Unvalidated cell as read from a file.
struct RawCell {
  double t = 0.0;
  double i = 0.0;
  double f = 0.0;
  double mu = 0.0;
};

/// Unvalidated PNS-set document: labels plus a possibly ragged matrix.
struct PnsData {
  std::vector<std::string> parameters;
  std::vector<std::string> universe;
  std::vector<std::vector<RawCell>> rows;
};

/// Lists every label, shape and range problem with its coordinates. Never throws.
std::vector<Violation> validate(const PnsData& data);

/// A possibility neutrosophic soft set stored as a dense parameter × element
/// matrix, row-major (row = parameter, column = element).
class PnsSet {
 public:
  /// Throws ValidationError on empty or duplicate labels or a cell count that
  /// does not match |parameters| × |universe|.
  PnsSet(std::vector<std::string> parameters, std::vector<std::string> universe,
         std::vector<PossValue> cells);

  /// Throws ValidationError listing every violation from validate().
  static PnsSet from_data(const PnsData& data);
  PnsData to_data() const;

  const std::vector<std::string>& parameters() const noexcept { return parameters_; }
  const std::vector<std::string>& universe() const noexcept { return universe_; }
  std::size_t parameter_count() const noexcept { return parameters_.size(); }
  std::size_t element_count() const noexcept { return universe_.size(); }

  std::span<const PossValue> cells() const noexcept { return cells_; }
  std::span<const PossValue> row(std::size_t parameter) const;

  const PossValue& at(std::size_t parameter, std::size_t element) const {
    return cells_[parameter * universe_.size() + element];
  }
  /// Throws LookupError for an unknown label.
  const PossValue& at(std::string_view parameter, std::string_view element) const;

  std::size_t parameter_index(std::string_view label) const;
  std::size_t element_index(std::string_view label) const;

  bool same_labels(const PnsSet& other) const noexcept {
    return parameters_ == other.parameters_ && universe_ == other.universe_;
  }

  /// Cellwise-exact comparison including labels.
  friend bool operator==(const PnsSet&, const PnsSet&) = default;

 private:
  std::vector<std::string> parameters_;
  std::vector<std::string> universe_;
  std::vector<PossValue> cells_;
};

/// Every cell ((0,1,1), 0).
PnsSet null_set(std::vector<std::string> parameters, std::vector<std::string> universe);
/// Every cell ((1,0,0), 1).
PnsSet universal_set(std::vector<std::string> parameters, std::vector<std::string> universe);

/// The same set with rows and columns in the given label order.
PnsSet reorder(const PnsSet& s, std::span<const std::string> parameters,
               std::span<const std::string> universe);

bool is_subset(const PnsSet& f, const PnsSet& g);
bool equals(const PnsSet& f, const PnsSet& g);
/// Like equals() but tolerant of |a - b| <= tolerance in every component.
bool approx_equals(const PnsSet& f, const PnsSet& g, double tolerance);

PnsSet set_union(const NormProfile& profile, const PnsSet& f, const PnsSet& g,
                 Exec exec = Exec::parallel);
PnsSet set_intersection(const NormProfile& profile, const PnsSet& f, const PnsSet& g,
                        Exec exec = Exec::parallel);
PnsSet complement(const NormProfile& profile, const PnsSet& f, Exec exec = Exec::parallel);

/// One membership component of a PNS-set paired with the possibility degree.
struct PartMatrix {
  struct Entry {
    UnitScalar component;
    UnitScalar mu;
    friend bool operator==(const Entry&, const Entry&) = default;
  };

  std::vector<std::string> parameters;
  std::vector<std::string> universe;
  std::vector<Entry> cells;

  const Entry& at(std::size_t parameter, std::size_t element) const {
    return cells[parameter * universe.size() + element];
  }
  friend bool operator==(const PartMatrix&, const PartMatrix&) = default;
};

struct Decomposition {
  PartMatrix truth;
  PartMatrix indeterminacy;
  PartMatrix falsity;
};

Decomposition decompose(const PnsSet& f);
/// Inverse of decompose(). Throws IncompatibleSets when the parts disagree on
/// labels, shape or possibility degrees.
PnsSet recompose(const Decomposition& parts);

void require_same_labels(const PnsSet& f, const PnsSet& g, std::string_view operation);
void require_same_universe(const PnsSet& f, const PnsSet& g, std::string_view operation);

}  // namespace pns
