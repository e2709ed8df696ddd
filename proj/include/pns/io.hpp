#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include <json.hpp>

#include "pns/decision.hpp"
#include "pns/pns_set.hpp"
#include "pns/products.hpp"
#include "pns/similarity.hpp"

namespace pns::io {

using Json = nlohmann::ordered_json;

/// Parses the canonical document
///   {"parameters": [..], "universe": [..], "cells": [[{"t":..,"i":..,"f":..,"mu":..}, ..], ..]}
/// without range-checking the values. Throws ParseError with line/column or
/// field context for syntax and schema problems.
PnsData parse_pns_json(std::string_view text, std::string_view source = "<input>");

/// CSV with header `parameter,element,t,i,f,mu` and one line per cell.
/// The delimiter is ';' when the header contains one, otherwise ','.
/// Decimal commas ("0,5") are accepted and read as decimal points.
PnsData parse_pns_csv(std::string_view text, std::string_view source = "<input>");

/// Reads a JSON document (or CSV, by .csv extension) and validates it.
/// Throws ParseError, or ValidationError naming every bad cell.
PnsSet load_pns(const std::filesystem::path& path);

/// Writes the canonical JSON with shortest round-trip numbers, so
/// load_pns(save_pns(s)) == s exactly.
void save_pns(const PnsSet& s, const std::filesystem::path& path);
std::string to_json_text(const PnsSet& s);

Json to_json(const PnsSet& s);
Json to_json(const ProductPnsSet& p, std::string_view separator = "*");
Json to_json(const WeightedMatrix& w, std::string_view separator = "*");
Json to_json(const DecisionReport& r, std::string_view separator = "*");
Json to_json(const SimilarityReport& r);
Json to_json(const SelectionReport& r);

/// Deterministic rendering: keys in insertion order, two-space indent,
/// floating-point numbers at a fixed number of decimals.
std::string dump_fixed(const Json& j, int decimals = 6);

}  // namespace pns::io
