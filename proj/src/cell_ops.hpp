#pragma once

// Per-cell formulas shared by the serial and OpenMP kernels.

#include <algorithm>
#include <cmath>

#include "pns/kernels.hpp"
#include "pns/norms.hpp"
#include "pns/scalar.hpp"

namespace pns::kernels::detail {

inline UnitScalar raw(double v) noexcept { return UnitScalar::unchecked(v); }

inline PossValue combine_cell(const NormProfile& profile, Combine op, const PossValue& a,
                              const PossValue& b) noexcept {
  const auto outer = op == Combine::union_ ? profile.tconorm.apply : profile.tnorm.apply;
  const auto inner = op == Combine::union_ ? profile.tnorm.apply : profile.tconorm.apply;
  return {{raw(outer(a.triple.t.value(), b.triple.t.value())),
           raw(inner(a.triple.i.value(), b.triple.i.value())),
           raw(inner(a.triple.f.value(), b.triple.f.value()))},
          raw(outer(a.mu.value(), b.mu.value()))};
}

inline PossValue complement_cell(const NormProfile& profile, const PossValue& a) noexcept {
  return {profile.triple_negation.apply(a.triple), raw(profile.scalar_negation.apply(a.mu.value()))};
}

inline PossValue product_cell(Product op, const PossValue& a, const PossValue& b) noexcept {
  if (op == Product::and_) {
    return {{std::min(a.triple.t, b.triple.t), std::max(a.triple.i, b.triple.i),
             std::max(a.triple.f, b.triple.f)},
            std::min(a.mu, b.mu)};
  }
  return {{std::max(a.triple.t, b.triple.t), std::min(a.triple.i, b.triple.i),
           std::min(a.triple.f, b.triple.f)},
          std::max(a.mu, b.mu)};
}

struct Weighted {
  double t;
  double i;
  double f;
};

inline Weighted weight_cell(const PossValue& c) noexcept {
  const double m = c.mu.value();
  const double t = c.triple.t.value();
  // t + m - tm can round one ulp past 1
  return {std::min(1.0, t + m - t * m), c.triple.i.value() * m, c.triple.f.value() * m};
}

inline double phi_cell(const PossValue& c) noexcept {
  return (c.triple.t.value() + c.triple.i.value() + c.triple.f.value()) / 3.0;
}

inline double minkowski_term(double diff, int p) noexcept {
  const double d = std::abs(diff);
  return p == 1 ? d : std::pow(d, p);
}

inline double minkowski_root(double mean, int p) noexcept {
  if (p == 1) return mean;
  if (p == 2) return std::sqrt(mean);
  return std::pow(mean, 1.0 / p);
}

}  // namespace pns::kernels::detail
