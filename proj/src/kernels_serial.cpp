#include <algorithm>
#include <cmath>

#include "cell_ops.hpp"
#include "pns/kernels.hpp"

namespace pns::kernels {

namespace serial {

void combine(const NormProfile& profile, Combine op, std::span<const PossValue> a,
             std::span<const PossValue> b, std::span<PossValue> out) {
  for (std::size_t k = 0; k < out.size(); ++k) out[k] = detail::combine_cell(profile, op, a[k], b[k]);
}

void complement(const NormProfile& profile, std::span<const PossValue> a, std::span<PossValue> out) {
  for (std::size_t k = 0; k < out.size(); ++k) out[k] = detail::complement_cell(profile, a[k]);
}

void product(Product op, std::span<const PossValue> a, std::size_t a_rows,
             std::span<const PossValue> b, std::size_t b_rows, std::size_t cols,
             std::span<PossValue> out) {
  for (std::size_t k = 0; k < a_rows; ++k) {
    for (std::size_t l = 0; l < b_rows; ++l) {
      const std::size_t row = k * b_rows + l;
      for (std::size_t j = 0; j < cols; ++j) {
        out[row * cols + j] = detail::product_cell(op, a[k * cols + j], b[l * cols + j]);
      }
    }
  }
}

void weight(std::span<const PossValue> cells, std::span<double> truth,
            std::span<double> indeterminacy, std::span<double> falsity) {
  for (std::size_t k = 0; k < cells.size(); ++k) {
    const auto w = detail::weight_cell(cells[k]);
    truth[k] = w.t;
    indeterminacy[k] = w.i;
    falsity[k] = w.f;
  }
}

void row_max_scores(std::span<const double> entries, Shape shape, std::span<double> scores) {
  std::fill(scores.begin(), scores.end(), 0.0);
  for (std::size_t r = 0; r < shape.rows; ++r) {
    const auto row = entries.subspan(r * shape.cols, shape.cols);
    const double best = *std::max_element(row.begin(), row.end());
    for (std::size_t c = 0; c < shape.cols; ++c) {
      if (row[c] == best) scores[c] += row[c];
    }
  }
}

void value_rows(std::span<const PossValue> a, std::span<const PossValue> b, Shape shape, int p,
                std::span<double> out) {
  for (std::size_t r = 0; r < shape.rows; ++r) {
    double sum = 0.0;
    for (std::size_t c = 0; c < shape.cols; ++c) {
      const std::size_t k = r * shape.cols + c;
      sum += detail::minkowski_term(detail::phi_cell(a[k]) - detail::phi_cell(b[k]), p);
    }
    out[r] = 1.0 - detail::minkowski_root(sum / static_cast<double>(shape.cols), p);
  }
}

std::optional<std::size_t> possibility_rows(std::span<const PossValue> a,
                                            std::span<const PossValue> b, Shape shape,
                                            std::span<double> out) {
  std::optional<std::size_t> degenerate;
  for (std::size_t r = 0; r < shape.rows; ++r) {
    double diff = 0.0;
    double total = 0.0;
    for (std::size_t c = 0; c < shape.cols; ++c) {
      const std::size_t k = r * shape.cols + c;
      diff += std::abs(a[k].mu.value() - b[k].mu.value());
      total += a[k].mu.value() + b[k].mu.value();
    }
    if (total == 0.0) {
      out[r] = 0.0;
      if (!degenerate) degenerate = r;
      continue;
    }
    out[r] = 1.0 - diff / total;
  }
  return degenerate;
}

void for_each_index(std::size_t n, const std::function<void(std::size_t)>& body) {
  for (std::size_t k = 0; k < n; ++k) body(k);
}

}  // namespace serial

std::optional<std::size_t> first_out_of_range(std::span<const PossValue> cells) noexcept {
  for (std::size_t k = 0; k < cells.size(); ++k) {
    const auto& c = cells[k];
    if (!in_unit_range(c.triple.t.value()) || !in_unit_range(c.triple.i.value()) ||
        !in_unit_range(c.triple.f.value()) || !in_unit_range(c.mu.value())) {
      return k;
    }
  }
  return std::nullopt;
}

}  // namespace pns::kernels
