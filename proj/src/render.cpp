#include "pns/render.hpp"

#include <algorithm>
#include <cstdio>
#include <vector>

namespace pns::render {

namespace {

std::string num(double v, int decimals = 4) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.*f", decimals, v);
  std::string s = buf;
  if (s.find_first_not_of("-0.") == std::string::npos && s.front() == '-') s.erase(0, 1);
  return s;
}

std::string cell_text(const PossValue& c) {
  return "(<" + num(c.triple.t.value(), 2) + "," + num(c.triple.i.value(), 2) + "," +
         num(c.triple.f.value(), 2) + ">, " + num(c.mu.value(), 2) + ")";
}

/// Pads every column to its widest entry; first row is the header.
std::string grid(const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width;
  for (const auto& row : rows) {
    if (width.size() < row.size()) width.resize(row.size(), 0);
    for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
  }
  std::string out;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    std::string line;
    for (std::size_t c = 0; c < rows[r].size(); ++c) {
      if (c) line += c == 1 ? " | " : "  ";
      line += rows[r][c];
      if (c + 1 < rows[r].size()) line += std::string(width[c] - rows[r][c].size(), ' ');
    }
    out += line + "\n";
    if (r == 0) {
      std::size_t total = 0;
      for (std::size_t c = 0; c < width.size(); ++c) total += width[c] + (c ? (c == 1 ? 3 : 2) : 0);
      out += std::string(total, '-') + "\n";
    }
  }
  return out;
}

std::string join(const std::vector<std::string>& items, std::string_view sep = ", ") {
  std::string out;
  for (std::size_t k = 0; k < items.size(); ++k) {
    if (k) out += sep;
    out += items[k];
  }
  return out;
}

std::string pair_label(const ProductPnsSet::ParamPair& p, std::string_view sep) {
  return p.first + std::string(sep) + p.second;
}

}  // namespace

std::string table(const PnsSet& s) {
  std::vector<std::vector<std::string>> rows;
  auto& header = rows.emplace_back(std::vector<std::string>{""});
  for (const auto& u : s.universe()) header.push_back(u);
  for (std::size_t r = 0; r < s.parameter_count(); ++r) {
    auto& line = rows.emplace_back(std::vector<std::string>{s.parameters()[r]});
    for (const auto& c : s.row(r)) line.push_back(cell_text(c));
  }
  return grid(rows);
}

std::string table(const ProductPnsSet& p, std::string_view separator) {
  std::vector<std::vector<std::string>> rows;
  auto& header = rows.emplace_back(std::vector<std::string>{""});
  for (const auto& u : p.universe()) header.push_back(u);
  for (std::size_t r = 0; r < p.row_count(); ++r) {
    auto& line = rows.emplace_back(std::vector<std::string>{pair_label(p.row_params()[r], separator)});
    for (std::size_t c = 0; c < p.element_count(); ++c) line.push_back(cell_text(p.at(r, c)));
  }
  return grid(rows);
}

std::string table(const WeightedMatrix& w, std::string_view title, std::string_view separator) {
  std::vector<std::vector<std::string>> rows;
  auto& header = rows.emplace_back(std::vector<std::string>{std::string(title)});
  for (const auto& u : w.columns) header.push_back(u);
  for (std::size_t r = 0; r < w.row_count(); ++r) {
    auto& line = rows.emplace_back(std::vector<std::string>{pair_label(w.rows[r], separator)});
    double best = 0.0;
    for (std::size_t c = 0; c < w.column_count(); ++c) best = std::max(best, w.at(r, c));
    for (std::size_t c = 0; c < w.column_count(); ++c) {
      // row maxima (the entries that score) are starred
      line.push_back(num(w.at(r, c)) + (w.at(r, c) == best ? "*" : " "));
    }
  }
  return grid(rows);
}

std::string table(const DecisionReport& r, std::string_view separator) {
  std::string out = "AND-product\n" + table(r.product, separator) + "\n";
  out += "Weighted matrices (* = row maximum)\n";
  out += table(r.weighted.truth, "truth", separator) + "\n";
  out += table(r.weighted.indeterminacy, "indeterminacy", separator) + "\n";
  out += table(r.weighted.falsity, "falsity", separator) + "\n";

  std::vector<std::vector<std::string>> rows;
  rows.push_back({"element", "s_t", "s_i", "s_f", "ds"});
  for (std::size_t k = 0; k < r.universe.size(); ++k) {
    rows.push_back({r.universe[k], num(r.s_t[k]), num(r.s_i[k]), num(r.s_f[k]), num(r.ds[k])});
  }
  out += "Scores\n" + grid(rows) + "\n";
  out += "Ranking: " + join(r.ranking, " > ") + "\n";
  out += "Winner: " + join(r.winners) + "\n";
  return out;
}

std::string table(const SimilarityReport& r) {
  std::vector<std::vector<std::string>> rows;
  rows.push_back({"parameter", "value M_i", "possibility M"});
  for (std::size_t k = 0; k < r.parameters.size(); ++k) {
    rows.push_back({r.parameters[k], num(r.per_parameter_value_sim[k]),
                    num(r.per_parameter_poss_sim[k])});
  }
  rows.push_back({"mean", num(r.value_sim), num(r.poss_sim)});
  std::string out = grid(rows) + "\n";
  out += "p = " + std::to_string(r.p) + "\n";
  out += "S = " + num(r.similarity) + " (" + (r.significant ? "" : "not ") +
         "significantly similar at threshold " + num(r.threshold, 2) + ")\n";
  return out;
}

std::string table(const SelectionReport& r) {
  std::vector<std::vector<std::string>> rows;
  rows.push_back({"rank", "candidate", "S", "value", "possibility", "significant"});
  std::size_t rank = 1;
  for (const auto& label : r.ranking) {
    const auto it = std::find_if(r.candidates.begin(), r.candidates.end(),
                                 [&](const CandidateResult& c) { return c.label == label; });
    if (it->ok()) {
      const auto& s = *it->report;
      rows.push_back({std::to_string(rank), label, num(s.similarity), num(s.value_sim),
                      num(s.poss_sim), s.significant ? "yes" : "no"});
    } else {
      rows.push_back({std::to_string(rank), label, "error", "", "", it->error});
    }
    ++rank;
  }
  std::string out = "Model: " + r.model + "  (p = " + std::to_string(r.p) +
                    ", threshold = " + num(r.threshold, 2) + ")\n";
  out += grid(rows) + "\n";
  out += "Selected: " + join(r.selected) + "\n";
  return out;
}

}  // namespace pns::render
