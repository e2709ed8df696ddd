#include "pns/products.hpp"

#include <algorithm>

#include "pns/kernels.hpp"

namespace pns {

ProductPnsSet::ProductPnsSet(std::vector<ParamPair> row_params, std::vector<std::string> universe,
                             std::vector<PossValue> cells)
    : row_params_(std::move(row_params)), universe_(std::move(universe)), cells_(std::move(cells)) {
  if (cells_.size() != row_params_.size() * universe_.size()) {
    throw ValidationError({{Violation::Kind::shape, {}, {},
                            "product has " + std::to_string(cells_.size()) + " cells for " +
                                std::to_string(row_params_.size()) + " rows x " +
                                std::to_string(universe_.size()) + " elements"}});
  }
}

const PossValue& ProductPnsSet::at(std::string_view first, std::string_view second,
                                   std::string_view element) const {
  const auto row = std::find_if(row_params_.begin(), row_params_.end(), [&](const ParamPair& p) {
    return p.first == first && p.second == second;
  });
  if (row == row_params_.end()) {
    throw LookupError("unknown parameter pair (" + std::string(first) + ", " +
                      std::string(second) + ")");
  }
  const auto col = std::find(universe_.begin(), universe_.end(), element);
  if (col == universe_.end()) {
    throw LookupError("unknown universe label '" + std::string(element) + "'");
  }
  return at(static_cast<std::size_t>(row - row_params_.begin()),
            static_cast<std::size_t>(col - universe_.begin()));
}

PnsSet ProductPnsSet::to_pns(std::string_view separator) const {
  std::vector<std::string> labels;
  labels.reserve(row_params_.size());
  for (const auto& [k, l] : row_params_) {
    labels.push_back(k + std::string(separator) + l);
  }
  return PnsSet(std::move(labels), universe_, cells_);
}

namespace {

ProductPnsSet make_product(kernels::Product op, const PnsSet& f, const PnsSet& g, Exec exec,
                           std::string_view name) {
  require_same_universe(f, g, name);
  std::vector<ProductPnsSet::ParamPair> rows;
  rows.reserve(f.parameter_count() * g.parameter_count());
  for (const auto& k : f.parameters()) {
    for (const auto& l : g.parameters()) rows.emplace_back(k, l);
  }
  std::vector<PossValue> cells(rows.size() * f.element_count());
  if (exec == Exec::parallel) {
    kernels::omp::product(op, f.cells(), f.parameter_count(), g.cells(), g.parameter_count(),
                          f.element_count(), cells);
  } else {
    kernels::serial::product(op, f.cells(), f.parameter_count(), g.cells(), g.parameter_count(),
                             f.element_count(), cells);
  }
  return ProductPnsSet(std::move(rows), f.universe(), std::move(cells));
}

}  // namespace

ProductPnsSet and_product(const PnsSet& f, const PnsSet& g, Exec exec) {
  return make_product(kernels::Product::and_, f, g, exec, "and-product");
}

ProductPnsSet or_product(const PnsSet& f, const PnsSet& g, Exec exec) {
  return make_product(kernels::Product::or_, f, g, exec, "or-product");
}

}  // namespace pns
