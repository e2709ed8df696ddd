#pragma once

// Cell-level loops behind the public operations. `serial` is the reference
// implementation; `omp` parallelises the same loops with OpenMP and must stay
// bitwise-identical to it (tests/test_kernels.cpp checks this).

#include <cstddef>
#include <functional>
#include <optional>
#include <span>

#include "pns/exec.hpp"
#include "pns/norms.hpp"
#include "pns/scalar.hpp"

namespace pns::kernels {

enum class Combine { union_, intersection };
enum class Product { and_, or_ };

/// Matrix shape for row-major kernels.
struct Shape {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::size_t size() const noexcept { return rows * cols; }
};

namespace serial {

void combine(const NormProfile& profile, Combine op, std::span<const PossValue> a,
             std::span<const PossValue> b, std::span<PossValue> out);
void complement(const NormProfile& profile, std::span<const PossValue> a, std::span<PossValue> out);
/// a is |Ea|×cols, b is |Eb|×cols, out is (|Ea|·|Eb|)×cols.
void product(Product op, std::span<const PossValue> a, std::size_t a_rows,
             std::span<const PossValue> b, std::size_t b_rows, std::size_t cols,
             std::span<PossValue> out);
void weight(std::span<const PossValue> cells, std::span<double> truth,
            std::span<double> indeterminacy, std::span<double> falsity);
void row_max_scores(std::span<const double> entries, Shape shape, std::span<double> scores);
/// Per-row 1 - (Σ|φa-φb|^p / cols)^(1/p).
void value_rows(std::span<const PossValue> a, std::span<const PossValue> b, Shape shape, int p,
                std::span<double> out);
/// Per-row 1 - Σ|μa-μb| / Σ(μa+μb). Returns the first row with a zero denominator.
std::optional<std::size_t> possibility_rows(std::span<const PossValue> a,
                                            std::span<const PossValue> b, Shape shape,
                                            std::span<double> out);
void for_each_index(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace serial

namespace omp {

void combine(const NormProfile& profile, Combine op, std::span<const PossValue> a,
             std::span<const PossValue> b, std::span<PossValue> out);
void complement(const NormProfile& profile, std::span<const PossValue> a, std::span<PossValue> out);
void product(Product op, std::span<const PossValue> a, std::size_t a_rows,
             std::span<const PossValue> b, std::size_t b_rows, std::size_t cols,
             std::span<PossValue> out);
void weight(std::span<const PossValue> cells, std::span<double> truth,
            std::span<double> indeterminacy, std::span<double> falsity);
void row_max_scores(std::span<const double> entries, Shape shape, std::span<double> scores);
void value_rows(std::span<const PossValue> a, std::span<const PossValue> b, Shape shape, int p,
                std::span<double> out);
std::optional<std::size_t> possibility_rows(std::span<const PossValue> a,
                                            std::span<const PossValue> b, Shape shape,
                                            std::span<double> out);
/// `body` must not throw.
void for_each_index(std::size_t n, const std::function<void(std::size_t)>& body);

int max_threads() noexcept;

}  // namespace omp

/// Index of the first cell with a component outside [0,1], if any.
std::optional<std::size_t> first_out_of_range(std::span<const PossValue> cells) noexcept;

}  // namespace pns::kernels
