#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "pns/exec.hpp"
#include "pns/pns_set.hpp"

namespace pns {

inline constexpr int kDefaultMinkowskiP = 2;
inline constexpr double kSignificanceThreshold = 0.5;

/// Mean of the cell's truth, indeterminacy and falsity.
UnitScalar phi(const PossValue& cell) noexcept;
/// Throws LookupError for unknown labels.
UnitScalar phi(const PnsSet& s, std::string_view parameter, std::string_view element);

/// Per-parameter similarity values and their mean over parameters.
struct ComponentSimilarity {
  std::vector<double> per_parameter;
  double mean = 0.0;
};

/// 1 - Σ|μ-ν| / Σ(μ+ν) per parameter row. Throws DegenerateRow when a row's
/// μ and ν are all zero.
ComponentSimilarity possibility_similarity(const PnsSet& f, const PnsSet& g,
                                           Exec exec = Exec::parallel);

/// 1 - (Σ_u |φ_f - φ_g|^p / n)^(1/p) per parameter, n = |U|. Requires p >= 1.
ComponentSimilarity value_similarity(const PnsSet& f, const PnsSet& g, int p = kDefaultMinkowskiP,
                                     Exec exec = Exec::parallel);

struct SimilarityReport {
  std::vector<std::string> parameters;
  std::vector<double> per_parameter_value_sim;
  double value_sim = 0.0;
  std::vector<double> per_parameter_poss_sim;
  double poss_sim = 0.0;
  double similarity = 0.0;  ///< value_sim × poss_sim
  int p = kDefaultMinkowskiP;
  double threshold = kSignificanceThreshold;
  bool significant = false;  ///< similarity >= threshold
};

SimilarityReport similarity(const PnsSet& f, const PnsSet& g, int p = kDefaultMinkowskiP,
                            UnitScalar threshold = UnitScalar(kSignificanceThreshold),
                            Exec exec = Exec::parallel);

struct LabeledSet {
  std::string label;
  PnsSet set;
};

struct CandidateResult {
  std::string label;
  std::optional<SimilarityReport> report;
  std::string error;  ///< set when report is empty

  bool ok() const noexcept { return report.has_value(); }
};

struct SelectionReport {
  std::string model;
  int p = kDefaultMinkowskiP;
  double threshold = kSignificanceThreshold;
  /// In input order.
  std::vector<CandidateResult> candidates;
  /// Candidate labels by S descending (ties keep input order), failed candidates last.
  std::vector<std::string> ranking;
  /// Every successful candidate attaining the maximum S, in input order.
  std::vector<std::string> selected;
  std::vector<std::string> significant;
};

/// Scores every candidate against the model. A candidate that cannot be
/// compared is recorded with its error rather than aborting the batch.
/// Throws EmptyInput for an empty candidate list.
SelectionReport select_by_similarity(const PnsSet& model, std::span<const LabeledSet> candidates,
                                     int p = kDefaultMinkowskiP,
                                     UnitScalar threshold = UnitScalar(kSignificanceThreshold),
                                     std::string model_label = "model",
                                     Exec exec = Exec::parallel);

}  // namespace pns
