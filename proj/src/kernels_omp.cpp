#include <omp.h>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <vector>

#include "cell_ops.hpp"
#include "pns/kernels.hpp"

namespace pns::kernels::omp {

namespace {

// Below this many cells the fork/join costs more than the loop.
constexpr std::int64_t kMinParallelWork = 2048;

std::int64_t as_index(std::size_t n) { return static_cast<std::int64_t>(n); }

}  // namespace

void combine(const NormProfile& profile, Combine op, std::span<const PossValue> a,
             std::span<const PossValue> b, std::span<PossValue> out) {
  const std::int64_t n = as_index(out.size());
#pragma omp parallel for schedule(static) if (n >= kMinParallelWork)
  for (std::int64_t k = 0; k < n; ++k) out[k] = detail::combine_cell(profile, op, a[k], b[k]);
}

void complement(const NormProfile& profile, std::span<const PossValue> a, std::span<PossValue> out) {
  const std::int64_t n = as_index(out.size());
#pragma omp parallel for schedule(static) if (n >= kMinParallelWork)
  for (std::int64_t k = 0; k < n; ++k) out[k] = detail::complement_cell(profile, a[k]);
}

void product(Product op, std::span<const PossValue> a, std::size_t a_rows,
             std::span<const PossValue> b, std::size_t b_rows, std::size_t cols,
             std::span<PossValue> out) {
  const std::int64_t rows = as_index(a_rows * b_rows);
  const std::int64_t work = rows * as_index(cols);
#pragma omp parallel for schedule(static) if (work >= kMinParallelWork)
  for (std::int64_t row = 0; row < rows; ++row) {
    const std::size_t k = static_cast<std::size_t>(row) / b_rows;
    const std::size_t l = static_cast<std::size_t>(row) % b_rows;
    for (std::size_t j = 0; j < cols; ++j) {
      out[row * cols + j] = detail::product_cell(op, a[k * cols + j], b[l * cols + j]);
    }
  }
}

void weight(std::span<const PossValue> cells, std::span<double> truth,
            std::span<double> indeterminacy, std::span<double> falsity) {
  const std::int64_t n = as_index(cells.size());
#pragma omp parallel for schedule(static) if (n >= kMinParallelWork)
  for (std::int64_t k = 0; k < n; ++k) {
    const auto w = detail::weight_cell(cells[k]);
    truth[k] = w.t;
    indeterminacy[k] = w.i;
    falsity[k] = w.f;
  }
}

void row_max_scores(std::span<const double> entries, Shape shape, std::span<double> scores) {
  const std::int64_t rows = as_index(shape.rows);
  const std::int64_t cols = as_index(shape.cols);
  const bool wide = as_index(shape.size()) >= kMinParallelWork;
  std::vector<double> best(shape.rows);

#pragma omp parallel for schedule(static) if (wide)
  for (std::int64_t r = 0; r < rows; ++r) {
    const auto row = entries.subspan(r * shape.cols, shape.cols);
    best[r] = *std::max_element(row.begin(), row.end());
  }

  // One column per iteration, rows summed in ascending order: same rounding as serial.
#pragma omp parallel for schedule(static) if (wide)
  for (std::int64_t c = 0; c < cols; ++c) {
    double sum = 0.0;
    for (std::int64_t r = 0; r < rows; ++r) {
      const double v = entries[r * cols + c];
      if (v == best[r]) sum += v;
    }
    scores[c] = sum;
  }
}

void value_rows(std::span<const PossValue> a, std::span<const PossValue> b, Shape shape, int p,
                std::span<double> out) {
  const std::int64_t rows = as_index(shape.rows);
#pragma omp parallel for schedule(static) if (as_index(shape.size()) >= kMinParallelWork)
  for (std::int64_t r = 0; r < rows; ++r) {
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
  const std::int64_t rows = as_index(shape.rows);
  std::int64_t degenerate = rows;
#pragma omp parallel for schedule(static) reduction(min : degenerate) \
    if (as_index(shape.size()) >= kMinParallelWork)
  for (std::int64_t r = 0; r < rows; ++r) {
    double diff = 0.0;
    double total = 0.0;
    for (std::size_t c = 0; c < shape.cols; ++c) {
      const std::size_t k = r * shape.cols + c;
      diff += std::abs(a[k].mu.value() - b[k].mu.value());
      total += a[k].mu.value() + b[k].mu.value();
    }
    if (total == 0.0) {
      out[r] = 0.0;
      degenerate = std::min(degenerate, r);
    } else {
      out[r] = 1.0 - diff / total;
    }
  }
  if (degenerate == rows) return std::nullopt;
  return static_cast<std::size_t>(degenerate);
}

void for_each_index(std::size_t n, const std::function<void(std::size_t)>& body) {
  const std::int64_t count = as_index(n);
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t k = 0; k < count; ++k) body(static_cast<std::size_t>(k));
}

int max_threads() noexcept { return omp_get_max_threads(); }

}  // namespace pns::kernels::omp
