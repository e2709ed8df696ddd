#pragma once

#include <span>
#include <string>
#include <vector>

#include "pns/exec.hpp"
#include "pns/products.hpp"

namespace pns {

/// Product rows × universe matrix of blended component/possibility values.
struct WeightedMatrix {
  std::vector<ProductPnsSet::ParamPair> rows;
  std::vector<std::string> columns;
  std::vector<double> entries;  // row-major

  std::size_t row_count() const noexcept { return rows.size(); }
  std::size_t column_count() const noexcept { return columns.size(); }
  double at(std::size_t row, std::size_t column) const {
    return entries[row * columns.size() + column];
  }
};

struct WeightedMatrices {
  WeightedMatrix truth;          // t + m - t·m
  WeightedMatrix indeterminacy;  // i·m
  WeightedMatrix falsity;        // f·m
};

WeightedMatrices weighted_matrices(const ProductPnsSet& product, Exec exec = Exec::parallel);

/// Per-column score: each row contributes its maximum to every column that
/// attains it (ties all score), other columns get 0; contributions summed over rows.
std::vector<double> row_scores(const WeightedMatrix& w, Exec exec = Exec::parallel);

/// ds = s_t - s_i - s_f elementwise. Throws IncompatibleVectors on length mismatch.
std::vector<double> decision_scores(std::span<const double> s_t, std::span<const double> s_i,
                                    std::span<const double> s_f);

struct DecisionReport {
  ProductPnsSet product;
  WeightedMatrices weighted;
  std::vector<std::string> universe;
  std::vector<double> s_t;
  std::vector<double> s_i;
  std::vector<double> s_f;
  std::vector<double> ds;
  /// Universe labels by ds descending; equal scores keep universe order.
  std::vector<std::string> ranking;
  /// Every label attaining max ds, in universe order.
  std::vector<std::string> winners;
};

/// AND-product, weighted matrices, scores, decision scores and ranking for two observations.
DecisionReport decide(const PnsSet& f, const PnsSet& g, Exec exec = Exec::parallel);

}  // namespace pns
