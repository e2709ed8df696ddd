#include "pns/norms.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <sstream>

namespace pns {

namespace {

double min_fn(double a, double b) noexcept { return std::min(a, b); }
double max_fn(double a, double b) noexcept { return std::max(a, b); }
double product_fn(double a, double b) noexcept { return a * b; }
// Arranged so identity and absorbing elements come out exact in floating point.
double probsum_fn(double a, double b) noexcept {
  const double hi = std::max(a, b), lo = std::min(a, b);
  return std::min(1.0, hi + lo * (1.0 - hi));
}
double luk_tnorm_fn(double a, double b) noexcept {
  const double hi = std::max(a, b), lo = std::min(a, b);
  return std::max(lo - (1.0 - hi), 0.0);
}
double luk_tconorm_fn(double a, double b) noexcept { return std::min(a + b, 1.0); }
double standard_negation_fn(double a) noexcept { return 1.0 - a; }

NeutrosophicTriple standard_triple_negation_fn(const NeutrosophicTriple& a) noexcept {
  return {a.f, UnitScalar::unchecked(1.0 - a.i.value()), a.t};
}

}  // namespace

namespace norms {

const BinaryOp minimum{"min", &min_fn};
const BinaryOp product{"product", &product_fn};
const BinaryOp lukasiewicz_tnorm{"lukasiewicz", &luk_tnorm_fn};
const BinaryOp maximum{"max", &max_fn};
const BinaryOp probabilistic_sum{"probsum", &probsum_fn};
const BinaryOp lukasiewicz_tconorm{"lukasiewicz", &luk_tconorm_fn};
const UnaryOp standard_negation{"standard", &standard_negation_fn};
const TripleOp standard_triple_negation{"standard", &standard_triple_negation_fn};

std::span<const BinaryOp> tnorms() {
  static const std::array<BinaryOp, 3> all{minimum, product, lukasiewicz_tnorm};
  return all;
}

std::span<const BinaryOp> tconorms() {
  static const std::array<BinaryOp, 3> all{maximum, probabilistic_sum, lukasiewicz_tconorm};
  return all;
}

std::optional<BinaryOp> tnorm_by_name(std::string_view name) {
  for (const auto& op : tnorms()) {
    if (op.name == name) return op;
  }
  return std::nullopt;
}

std::optional<BinaryOp> tconorm_by_name(std::string_view name) {
  for (const auto& op : tconorms()) {
    if (op.name == name) return op;
  }
  return std::nullopt;
}

}  // namespace norms

UnitScalar apply_tnorm(const NormProfile& profile, UnitScalar x, UnitScalar y) {
  return UnitScalar(profile.tnorm.apply(x.value(), y.value()));
}

UnitScalar apply_tconorm(const NormProfile& profile, UnitScalar x, UnitScalar y) {
  return UnitScalar(profile.tconorm.apply(x.value(), y.value()));
}

UnitScalar negate_scalar(const NormProfile& profile, UnitScalar x) {
  return UnitScalar(profile.scalar_negation.apply(x.value()));
}

NeutrosophicTriple n_norm(const NormProfile& profile, const NeutrosophicTriple& a,
                          const NeutrosophicTriple& b) {
  return {apply_tnorm(profile, a.t, b.t), apply_tconorm(profile, a.i, b.i),
          apply_tconorm(profile, a.f, b.f)};
}

NeutrosophicTriple n_conorm(const NormProfile& profile, const NeutrosophicTriple& a,
                            const NeutrosophicTriple& b) {
  return {apply_tconorm(profile, a.t, b.t), apply_tnorm(profile, a.i, b.i),
          apply_tnorm(profile, a.f, b.f)};
}

NeutrosophicTriple negate_triple(const NormProfile& profile, const NeutrosophicTriple& a) {
  const auto r = profile.triple_negation.apply(a);
  // re-validate: a user-supplied negation may leave the unit cube
  return {UnitScalar(r.t.value()), UnitScalar(r.i.value()), UnitScalar(r.f.value())};
}

namespace {

class LawChecker {
 public:
  LawChecker(int steps, double tolerance) : tol_(tolerance) {
    steps = std::max(steps, 1);
    for (int k = 0; k <= steps; ++k) grid_.push_back(static_cast<double>(k) / steps);
  }

  const std::vector<double>& grid() const { return grid_; }
  double tol() const { return tol_; }

  void fail(std::string_view what, std::string_view op, std::string_view law,
            std::initializer_list<double> at) {
    std::ostringstream msg;
    msg << what << " '" << op << "': " << law << " fails at (";
    bool first = true;
    for (double v : at) {
      msg << (first ? "" : ", ") << v;
      first = false;
    }
    msg << ")";
    failures_.push_back(msg.str());
  }

  void check_binary(std::string_view what, const BinaryOp& op, double identity) {
    const auto g = [&](double a, double b) { return op.apply(a, b); };
    auto near = [&](double x, double y) { return std::abs(x - y) <= tol_; };

    for (std::size_t x = 0; x < grid_.size(); ++x) {
      const double a = grid_[x];
      if (!near(g(a, identity), a)) {
        fail(what, op.name, "identity", {a});
        break;
      }
    }
    bool range_ok = true, comm_ok = true, mono_ok = true, assoc_ok = true;
    for (std::size_t x = 0; x < grid_.size(); ++x) {
      for (std::size_t y = 0; y < grid_.size(); ++y) {
        const double a = grid_[x], b = grid_[y];
        const double v = g(a, b);
        if (range_ok && !in_unit_range(v)) {
          fail(what, op.name, "range", {a, b});
          range_ok = false;
        }
        if (comm_ok && !near(v, g(b, a))) {
          fail(what, op.name, "commutativity", {a, b});
          comm_ok = false;
        }
        if (mono_ok && x + 1 < grid_.size() && g(grid_[x + 1], b) < v - tol_) {
          fail(what, op.name, "monotonicity", {a, b});
          mono_ok = false;
        }
        for (std::size_t z = 0; assoc_ok && z < grid_.size(); ++z) {
          const double c = grid_[z];
          if (!near(g(a, g(b, c)), g(g(a, b), c))) {
            fail(what, op.name, "associativity", {a, b, c});
            assoc_ok = false;
          }
        }
      }
    }
  }

  std::vector<std::string> take() { return std::move(failures_); }

 private:
  double tol_;
  std::vector<double> grid_;
  std::vector<std::string> failures_;
};

bool triple_near(const NeutrosophicTriple& a, const NeutrosophicTriple& b, double tol) {
  return std::abs(a.t.value() - b.t.value()) <= tol && std::abs(a.i.value() - b.i.value()) <= tol &&
         std::abs(a.f.value() - b.f.value()) <= tol;
}

bool triple_leq_tol(const NeutrosophicTriple& a, const NeutrosophicTriple& b, double tol) {
  return a.t.value() <= b.t.value() + tol && a.i.value() + tol >= b.i.value() &&
         a.f.value() + tol >= b.f.value();
}

}  // namespace

std::vector<std::string> check_profile(const NormProfile& profile, int steps, double tolerance) {
  LawChecker checker(steps, tolerance);
  checker.check_binary("tnorm", profile.tnorm, 1.0);
  checker.check_binary("tconorm", profile.tconorm, 0.0);

  const auto& grid = checker.grid();
  const double tol = checker.tol();
  const auto neg = profile.scalar_negation.apply;
  const auto neg_name = profile.scalar_negation.name;
  if (std::abs(neg(0.0) - 1.0) > tol) checker.fail("negation", neg_name, "N(0)=1", {0.0});
  if (std::abs(neg(1.0)) > tol) checker.fail("negation", neg_name, "N(1)=0", {1.0});
  for (std::size_t x = 0; x + 1 < grid.size(); ++x) {
    if (!in_unit_range(neg(grid[x])) || neg(grid[x + 1]) > neg(grid[x]) + tol) {
      checker.fail("negation", neg_name, "non-increasing", {grid[x]});
      break;
    }
  }

  // Triple laws on a coarser grid: the pair loop is O(points²).
  std::vector<NeutrosophicTriple> points;
  const std::size_t stride = std::max<std::size_t>(1, grid.size() / 5);
  for (std::size_t a = 0; a < grid.size(); a += stride)
    for (std::size_t b = 0; b < grid.size(); b += stride)
      for (std::size_t c = 0; c < grid.size(); c += stride)
        points.push_back({UnitScalar::unchecked(grid[a]), UnitScalar::unchecked(grid[b]),
                          UnitScalar::unchecked(grid[c])});

  const auto one = NeutrosophicTriple::one();
  const auto zero = NeutrosophicTriple::zero();
  const auto tneg = profile.triple_negation.apply;
  const auto tneg_name = profile.triple_negation.name;
  if (!triple_near(tneg(zero), one, tol)) checker.fail("triple negation", tneg_name, "n(0)=1", {});
  if (!triple_near(tneg(one), zero, tol)) checker.fail("triple negation", tneg_name, "n(1)=0", {});

  auto raw_norm = [&](const NeutrosophicTriple& a, const NeutrosophicTriple& b) {
    return NeutrosophicTriple{
        UnitScalar::unchecked(profile.tnorm.apply(a.t.value(), b.t.value())),
        UnitScalar::unchecked(profile.tconorm.apply(a.i.value(), b.i.value())),
        UnitScalar::unchecked(profile.tconorm.apply(a.f.value(), b.f.value()))};
  };
  auto raw_conorm = [&](const NeutrosophicTriple& a, const NeutrosophicTriple& b) {
    return NeutrosophicTriple{
        UnitScalar::unchecked(profile.tconorm.apply(a.t.value(), b.t.value())),
        UnitScalar::unchecked(profile.tnorm.apply(a.i.value(), b.i.value())),
        UnitScalar::unchecked(profile.tnorm.apply(a.f.value(), b.f.value()))};
  };

  bool norm_zero = true, norm_one = true, conorm_zero = true, conorm_one = true;
  bool mono = true;
  for (const auto& a : points) {
    const std::initializer_list<double> at{a.t.value(), a.i.value(), a.f.value()};
    if (norm_zero && !triple_near(raw_norm(a, zero), zero, tol)) {
      checker.fail("n-norm", profile.tnorm.name, "a*0=0", at);
      norm_zero = false;
    }
    if (norm_one && !triple_near(raw_norm(a, one), a, tol)) {
      checker.fail("n-norm", profile.tnorm.name, "a*1=a", at);
      norm_one = false;
    }
    if (conorm_zero && !triple_near(raw_conorm(a, zero), a, tol)) {
      checker.fail("n-conorm", profile.tconorm.name, "a+0=a", at);
      conorm_zero = false;
    }
    if (conorm_one && !triple_near(raw_conorm(a, one), one, tol)) {
      checker.fail("n-conorm", profile.tconorm.name, "a+1=1", at);
      conorm_one = false;
    }
    for (const auto& b : points) {
      if (mono && triple_leq(a, b) && !triple_leq_tol(tneg(b), tneg(a), tol)) {
        checker.fail("triple negation", tneg_name, "order-reversing", at);
        mono = false;
      }
    }
  }
  return checker.take();
}

}  // namespace pns
