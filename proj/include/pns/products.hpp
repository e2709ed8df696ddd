#pragma once

#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "pns/exec.hpp"
#include "pns/pns_set.hpp"

namespace pns {

/// AND/OR product of two PNS-sets: rows indexed by parameter pairs (e_k, e_l),
/// enumerated row-major with the first set's parameter as the outer index.
class ProductPnsSet {
 public:
  using ParamPair = std::pair<std::string, std::string>;

  ProductPnsSet(std::vector<ParamPair> row_params, std::vector<std::string> universe,
                std::vector<PossValue> cells);

  const std::vector<ParamPair>& row_params() const noexcept { return row_params_; }
  const std::vector<std::string>& universe() const noexcept { return universe_; }
  std::size_t row_count() const noexcept { return row_params_.size(); }
  std::size_t element_count() const noexcept { return universe_.size(); }
  std::span<const PossValue> cells() const noexcept { return cells_; }

  const PossValue& at(std::size_t row, std::size_t element) const {
    return cells_[row * universe_.size() + element];
  }
  /// Cell for (first-set parameter, second-set parameter, element).
  const PossValue& at(std::string_view first, std::string_view second,
                      std::string_view element) const;

  /// Flattens to an ordinary PNS-set whose parameter labels are "ek<sep>el".
  /// Throws ValidationError if the joined labels collide.
  PnsSet to_pns(std::string_view separator = "*") const;

  friend bool operator==(const ProductPnsSet&, const ProductPnsSet&) = default;

 private:
  std::vector<ParamPair> row_params_;
  std::vector<std::string> universe_;
  std::vector<PossValue> cells_;
};

/// ((t∧t', i∨i', f∨f'), μ∧ν) for every (e_k, e_l, u). Always min/max.
ProductPnsSet and_product(const PnsSet& f, const PnsSet& g, Exec exec = Exec::parallel);
/// ((t∨t', i∧i', f∧f'), μ∨ν) for every (e_k, e_l, u). Always min/max.
ProductPnsSet or_product(const PnsSet& f, const PnsSet& g, Exec exec = Exec::parallel);

}  // namespace pns
