#pragma once

#include <compare>

namespace pns {

/// A real number in the closed unit interval. Construction rejects anything
/// outside [0,1] (including NaN) instead of clamping.
class UnitScalar {
 public:
  constexpr UnitScalar() noexcept = default;
  explicit UnitScalar(double value);

  constexpr double value() const noexcept { return value_; }

  /// Skips the range check. Only for kernel output whose range is verified
  /// before it leaves the library.
  static constexpr UnitScalar unchecked(double value) noexcept {
    UnitScalar s;
    s.value_ = value;
    return s;
  }

  static constexpr UnitScalar zero() noexcept { return unchecked(0.0); }
  static constexpr UnitScalar one() noexcept { return unchecked(1.0); }

  friend constexpr bool operator==(UnitScalar, UnitScalar) = default;
  friend constexpr auto operator<=>(UnitScalar, UnitScalar) = default;

 private:
  double value_ = 0.0;
};

constexpr bool in_unit_range(double v) noexcept { return v >= 0.0 && v <= 1.0; }

/// (truth, indeterminacy, falsity) memberships.
struct NeutrosophicTriple {
  UnitScalar t;
  UnitScalar i;
  UnitScalar f;

  constexpr NeutrosophicTriple() noexcept = default;
  constexpr NeutrosophicTriple(UnitScalar t_, UnitScalar i_, UnitScalar f_) noexcept
      : t(t_), i(i_), f(f_) {}
  NeutrosophicTriple(double t_, double i_, double f_)
      : t(UnitScalar(t_)), i(UnitScalar(i_)), f(UnitScalar(f_)) {}

  /// Top of the lattice, (1,0,0).
  static constexpr NeutrosophicTriple one() noexcept {
    return {UnitScalar::one(), UnitScalar::zero(), UnitScalar::zero()};
  }
  /// Bottom of the lattice, (0,1,1).
  static constexpr NeutrosophicTriple zero() noexcept {
    return {UnitScalar::zero(), UnitScalar::one(), UnitScalar::one()};
  }

  friend constexpr bool operator==(const NeutrosophicTriple&, const NeutrosophicTriple&) = default;
};

/// Lattice order: a precedes b when a is no truer and no less indeterminate or false.
constexpr bool triple_leq(const NeutrosophicTriple& a, const NeutrosophicTriple& b) noexcept {
  return a.t <= b.t && a.i >= b.i && a.f >= b.f;
}

/// A neutrosophic triple together with its possibility degree.
struct PossValue {
  NeutrosophicTriple triple;
  UnitScalar mu;

  friend constexpr bool operator==(const PossValue&, const PossValue&) = default;
};

}  // namespace pns
