#include "pns/similarity.hpp"

#include <algorithm>
#include <numeric>

#include "pns/kernels.hpp"

namespace pns {

namespace {

double mean(const std::vector<double>& v) {
  return std::accumulate(v.begin(), v.end(), 0.0) / static_cast<double>(v.size());
}

kernels::Shape shape_of(const PnsSet& s) { return {s.parameter_count(), s.element_count()}; }

}  // namespace

UnitScalar phi(const PossValue& cell) noexcept {
  return UnitScalar::unchecked(
      (cell.triple.t.value() + cell.triple.i.value() + cell.triple.f.value()) / 3.0);
}

UnitScalar phi(const PnsSet& s, std::string_view parameter, std::string_view element) {
  return phi(s.at(parameter, element));
}

ComponentSimilarity possibility_similarity(const PnsSet& f, const PnsSet& g, Exec exec) {
  require_same_labels(f, g, "possibility similarity");
  ComponentSimilarity out;
  out.per_parameter.resize(f.parameter_count());
  const auto degenerate =
      exec == Exec::parallel
          ? kernels::omp::possibility_rows(f.cells(), g.cells(), shape_of(f), out.per_parameter)
          : kernels::serial::possibility_rows(f.cells(), g.cells(), shape_of(f), out.per_parameter);
  if (degenerate) {
    const auto& label = f.parameters()[*degenerate];
    throw DegenerateRow(label, "possibility similarity: every possibility degree of parameter '" +
                                   label + "' is zero in both sets");
  }
  out.mean = mean(out.per_parameter);
  return out;
}

ComponentSimilarity value_similarity(const PnsSet& f, const PnsSet& g, int p, Exec exec) {
  if (p < 1) throw InvalidArgument("Minkowski exponent p must be >= 1, got " + std::to_string(p));
  require_same_labels(f, g, "value similarity");
  ComponentSimilarity out;
  out.per_parameter.resize(f.parameter_count());
  if (exec == Exec::parallel) {
    kernels::omp::value_rows(f.cells(), g.cells(), shape_of(f), p, out.per_parameter);
  } else {
    kernels::serial::value_rows(f.cells(), g.cells(), shape_of(f), p, out.per_parameter);
  }
  out.mean = mean(out.per_parameter);
  return out;
}

SimilarityReport similarity(const PnsSet& f, const PnsSet& g, int p, UnitScalar threshold,
                            Exec exec) {
  auto value = value_similarity(f, g, p, exec);
  auto poss = possibility_similarity(f, g, exec);
  SimilarityReport r;
  r.parameters = f.parameters();
  r.per_parameter_value_sim = std::move(value.per_parameter);
  r.value_sim = value.mean;
  r.per_parameter_poss_sim = std::move(poss.per_parameter);
  r.poss_sim = poss.mean;
  r.similarity = r.value_sim * r.poss_sim;
  r.p = p;
  r.threshold = threshold.value();
  r.significant = r.similarity >= r.threshold;
  return r;
}

SelectionReport select_by_similarity(const PnsSet& model, std::span<const LabeledSet> candidates,
                                     int p, UnitScalar threshold, std::string model_label,
                                     Exec exec) {
  if (candidates.empty()) throw EmptyInput("selection needs at least one candidate");
  if (p < 1) throw InvalidArgument("Minkowski exponent p must be >= 1, got " + std::to_string(p));

  SelectionReport report;
  report.model = std::move(model_label);
  report.p = p;
  report.threshold = threshold.value();
  report.candidates.resize(candidates.size());

  // Each candidate is independent; the inner similarity runs serially to
  // avoid nested parallel regions.
  auto score_one = [&](std::size_t k) {
    auto& slot = report.candidates[k];
    slot.label = candidates[k].label;
    try {
      slot.report = similarity(model, candidates[k].set, p, threshold, Exec::serial);
    } catch (const std::exception& e) {
      slot.error = e.what();
    }
  };
  if (exec == Exec::parallel) {
    kernels::omp::for_each_index(candidates.size(), score_one);
  } else {
    kernels::serial::for_each_index(candidates.size(), score_one);
  }

  std::vector<std::size_t> order(candidates.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  const auto& cs = report.candidates;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (cs[a].ok() != cs[b].ok()) return cs[a].ok();
    return cs[a].ok() && cs[a].report->similarity > cs[b].report->similarity;
  });
  for (auto k : order) report.ranking.push_back(cs[k].label);

  double best = -1.0;
  for (const auto& c : cs) {
    if (c.ok()) best = std::max(best, c.report->similarity);
  }
  for (const auto& c : cs) {
    if (!c.ok()) continue;
    if (c.report->similarity == best) report.selected.push_back(c.label);
    if (c.report->significant) report.significant.push_back(c.label);
  }
  return report;
}

}  // namespace pns
