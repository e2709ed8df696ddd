#pragma once

#include <string>
#include <string_view>

#include "pns/decision.hpp"
#include "pns/pns_set.hpp"
#include "pns/products.hpp"
#include "pns/similarity.hpp"

namespace pns::render {

// Human-readable tables in the matrix layout: one row per parameter (or
// parameter pair), one column per universe element.

std::string table(const PnsSet& s);
std::string table(const ProductPnsSet& p, std::string_view separator = "*");
std::string table(const WeightedMatrix& w, std::string_view title, std::string_view separator = "*");
std::string table(const DecisionReport& r, std::string_view separator = "*");
std::string table(const SimilarityReport& r);
std::string table(const SelectionReport& r);

}  // namespace pns::render
