#include "pns/decision.hpp"

#include <algorithm>
#include <numeric>

#include "pns/kernels.hpp"

namespace pns {

WeightedMatrices weighted_matrices(const ProductPnsSet& product, Exec exec) {
  const std::size_t n = product.cells().size();
  WeightedMatrix blank{product.row_params(), product.universe(), std::vector<double>(n)};
  WeightedMatrices out{blank, blank, blank};
  if (exec == Exec::parallel) {
    kernels::omp::weight(product.cells(), out.truth.entries, out.indeterminacy.entries,
                         out.falsity.entries);
  } else {
    kernels::serial::weight(product.cells(), out.truth.entries, out.indeterminacy.entries,
                            out.falsity.entries);
  }
  return out;
}

std::vector<double> row_scores(const WeightedMatrix& w, Exec exec) {
  std::vector<double> scores(w.column_count(), 0.0);
  if (w.row_count() == 0 || w.column_count() == 0) return scores;
  const kernels::Shape shape{w.row_count(), w.column_count()};
  if (exec == Exec::parallel) {
    kernels::omp::row_max_scores(w.entries, shape, scores);
  } else {
    kernels::serial::row_max_scores(w.entries, shape, scores);
  }
  return scores;
}

std::vector<double> decision_scores(std::span<const double> s_t, std::span<const double> s_i,
                                    std::span<const double> s_f) {
  if (s_t.size() != s_i.size() || s_t.size() != s_f.size()) {
    throw IncompatibleVectors("decision scores: score vectors have lengths " +
                              std::to_string(s_t.size()) + ", " + std::to_string(s_i.size()) +
                              ", " + std::to_string(s_f.size()));
  }
  std::vector<double> ds(s_t.size());
  for (std::size_t k = 0; k < ds.size(); ++k) ds[k] = s_t[k] - s_i[k] - s_f[k];
  return ds;
}

DecisionReport decide(const PnsSet& f, const PnsSet& g, Exec exec) {
  auto product = and_product(f, g, exec);
  auto weighted = weighted_matrices(product, exec);
  auto s_t = row_scores(weighted.truth, exec);
  auto s_i = row_scores(weighted.indeterminacy, exec);
  auto s_f = row_scores(weighted.falsity, exec);
  auto ds = decision_scores(s_t, s_i, s_f);

  const auto& universe = f.universe();
  std::vector<std::size_t> order(universe.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return ds[a] > ds[b]; });

  std::vector<std::string> ranking;
  for (auto k : order) ranking.push_back(universe[k]);

  std::vector<std::string> winners;
  const double best = *std::max_element(ds.begin(), ds.end());
  for (std::size_t k = 0; k < ds.size(); ++k) {
    if (ds[k] == best) winners.push_back(universe[k]);
  }

  return {std::move(product), std::move(weighted), universe,           std::move(s_t),
          std::move(s_i),     std::move(s_f),      std::move(ds),      std::move(ranking),
          std::move(winners)};
}

}  // namespace pns
