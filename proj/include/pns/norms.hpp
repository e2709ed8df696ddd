#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "pns/scalar.hpp"

namespace pns {

/// A named binary operation on [0,1] (a t-norm or a t-conorm).
struct BinaryOp {
  std::string_view name;
  double (*apply)(double, double) noexcept = nullptr;
};

/// A named negation on [0,1].
struct UnaryOp {
  std::string_view name;
  double (*apply)(double) noexcept = nullptr;
};

/// A named negation on neutrosophic triples.
struct TripleOp {
  std::string_view name;
  NeutrosophicTriple (*apply)(const NeutrosophicTriple&) noexcept = nullptr;
};

namespace norms {

// t-norms
extern const BinaryOp minimum;
extern const BinaryOp product;
extern const BinaryOp lukasiewicz_tnorm;

// t-conorms
extern const BinaryOp maximum;
extern const BinaryOp probabilistic_sum;
extern const BinaryOp lukasiewicz_tconorm;

/// N(x) = 1 - x
extern const UnaryOp standard_negation;
/// (t, i, f) -> (f, 1 - i, t)
extern const TripleOp standard_triple_negation;

std::span<const BinaryOp> tnorms();
std::span<const BinaryOp> tconorms();

/// Looks up by CLI name: min, product, lukasiewicz.
std::optional<BinaryOp> tnorm_by_name(std::string_view name);
/// Looks up by CLI name: max, probsum, lukasiewicz.
std::optional<BinaryOp> tconorm_by_name(std::string_view name);

}  // namespace norms

/// The operators that drive union, intersection and complement.
struct NormProfile {
  BinaryOp tnorm = norms::minimum;
  BinaryOp tconorm = norms::maximum;
  UnaryOp scalar_negation = norms::standard_negation;
  TripleOp triple_negation = norms::standard_triple_negation;

  static NormProfile min_max() { return {}; }
  static NormProfile product() { return {norms::product, norms::probabilistic_sum}; }
  static NormProfile lukasiewicz() {
    return {norms::lukasiewicz_tnorm, norms::lukasiewicz_tconorm};
  }
};

UnitScalar apply_tnorm(const NormProfile& profile, UnitScalar x, UnitScalar y);
UnitScalar apply_tconorm(const NormProfile& profile, UnitScalar x, UnitScalar y);
UnitScalar negate_scalar(const NormProfile& profile, UnitScalar x);

/// (t⊗t, i⊕i, f⊕f)
NeutrosophicTriple n_norm(const NormProfile& profile, const NeutrosophicTriple& a,
                          const NeutrosophicTriple& b);
/// (t⊕t, i⊗i, f⊗f)
NeutrosophicTriple n_conorm(const NormProfile& profile, const NeutrosophicTriple& a,
                            const NeutrosophicTriple& b);
NeutrosophicTriple negate_triple(const NormProfile& profile, const NeutrosophicTriple& a);

/// Checks the defining laws of every operator in the profile on a
/// (steps+1)² grid of [0,1]²: commutativity, associativity, identity and
/// monotonicity of the norms; boundary values and monotonicity of both
/// negations; and the n-norm/n-conorm boundary laws a⊗̃0=0, a⊕̃1=1.
/// Returns one message per violated law, empty when the profile is sound.
std::vector<std::string> check_profile(const NormProfile& profile, int steps = 20,
                                       double tolerance = 1e-12);

}  // namespace pns
