#include "pns/io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>

namespace pns::io {

namespace {

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(path.string() + ": cannot open file");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string line_col(std::string_view text, std::size_t byte) {
  byte = std::min(byte, text.size());
  std::size_t line = 1, col = 1;
  for (std::size_t k = 0; k + 1 < byte; ++k) {
    if (text[k] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return std::to_string(line) + ":" + std::to_string(col);
}

std::vector<std::string> read_labels(const nlohmann::json& doc, const char* key,
                                     std::string_view source) {
  const auto it = doc.find(key);
  if (it == doc.end() || !it->is_array()) {
    throw ParseError(std::string(source) + ": '" + key + "' must be an array of strings");
  }
  std::vector<std::string> labels;
  for (std::size_t k = 0; k < it->size(); ++k) {
    const auto& v = (*it)[k];
    if (!v.is_string()) {
      throw ParseError(std::string(source) + ": " + key + "[" + std::to_string(k) +
                       "] must be a string");
    }
    labels.push_back(v.get<std::string>());
  }
  return labels;
}

double read_component(const nlohmann::json& cell, const char* key, std::string_view where) {
  const auto it = cell.find(key);
  if (it == cell.end()) {
    throw ParseError(std::string(where) + ": missing field '" + key + "'");
  }
  if (!it->is_number()) {
    throw ParseError(std::string(where) + "." + key + ": expected a number");
  }
  return it->get<double>();
}

std::string coord(std::string_view source, std::size_t r, std::size_t c,
                  const std::vector<std::string>& params, const std::vector<std::string>& universe) {
  std::string out = std::string(source) + ": cells[" + std::to_string(r) + "][" +
                    std::to_string(c) + "]";
  if (r < params.size() && c < universe.size()) {
    out += " (" + params[r] + ", " + universe[c] + ")";
  }
  return out;
}

}  // namespace

PnsData parse_pns_json(std::string_view text, std::string_view source) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string(source) + ":" + line_col(text, e.byte) + ": " + e.what());
  }
  if (!doc.is_object()) throw ParseError(std::string(source) + ": document must be a JSON object");

  PnsData data;
  data.parameters = read_labels(doc, "parameters", source);
  data.universe = read_labels(doc, "universe", source);

  const auto cells = doc.find("cells");
  if (cells == doc.end() || !cells->is_array()) {
    throw ParseError(std::string(source) + ": 'cells' must be an array of rows");
  }
  for (std::size_t r = 0; r < cells->size(); ++r) {
    const auto& row = (*cells)[r];
    if (!row.is_array()) {
      throw ParseError(std::string(source) + ": cells[" + std::to_string(r) +
                       "] must be an array of cells");
    }
    auto& out_row = data.rows.emplace_back();
    for (std::size_t c = 0; c < row.size(); ++c) {
      const auto where = coord(source, r, c, data.parameters, data.universe);
      const auto& cell = row[c];
      if (!cell.is_object()) throw ParseError(where + ": cell must be an object");
      out_row.push_back({read_component(cell, "t", where), read_component(cell, "i", where),
                         read_component(cell, "f", where), read_component(cell, "mu", where)});
    }
  }
  return data;
}

namespace {

std::vector<std::string> split_csv_line(std::string_view line, char delim) {
  std::vector<std::string> fields;
  std::string cur;
  bool quoted = false;
  for (std::size_t k = 0; k < line.size(); ++k) {
    const char ch = line[k];
    if (quoted) {
      if (ch == '"' && k + 1 < line.size() && line[k + 1] == '"') {
        cur += '"';
        ++k;
      } else if (ch == '"') {
        quoted = false;
      } else {
        cur += ch;
      }
    } else if (ch == '"') {
      quoted = true;
    } else if (ch == delim) {
      fields.push_back(std::move(cur));
      cur.clear();
    } else {
      cur += ch;
    }
  }
  fields.push_back(std::move(cur));
  for (auto& f : fields) {
    const auto b = f.find_first_not_of(" \t\r");
    const auto e = f.find_last_not_of(" \t\r");
    f = b == std::string::npos ? std::string() : f.substr(b, e - b + 1);
  }
  return fields;
}

double parse_decimal(std::string field, const std::string& where) {
  std::replace(field.begin(), field.end(), ',', '.');
  double v = 0.0;
  const char* first = field.data();
  const char* last = field.data() + field.size();
  if (!field.empty() && *first == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc() || ptr != last || field.empty() || !std::isfinite(v)) {
    throw ParseError(where + ": '" + field + "' is not a finite decimal number");
  }
  return v;
}

}  // namespace

PnsData parse_pns_csv(std::string_view text, std::string_view source) {
  std::vector<std::string_view> lines;
  for (std::size_t pos = 0; pos <= text.size();) {
    auto end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    lines.push_back(text.substr(pos, end - pos));
    pos = end + 1;
  }
  auto blank = [](std::string_view l) { return l.find_first_not_of(" \t\r") == l.npos; };
  std::size_t header_at = 0;
  while (header_at < lines.size() && blank(lines[header_at])) ++header_at;
  if (header_at == lines.size()) throw ParseError(std::string(source) + ": empty CSV");

  const char delim = lines[header_at].find(';') != std::string_view::npos ? ';' : ',';
  const auto header = split_csv_line(lines[header_at], delim);
  const std::vector<std::string> expected{"parameter", "element", "t", "i", "f", "mu"};
  if (header != expected) {
    throw ParseError(std::string(source) + ":" + std::to_string(header_at + 1) +
                     ": header must be parameter,element,t,i,f,mu");
  }

  PnsData data;
  std::map<std::pair<std::size_t, std::size_t>, RawCell> cells;
  auto intern = [](std::vector<std::string>& labels, const std::string& l) {
    const auto it = std::find(labels.begin(), labels.end(), l);
    if (it != labels.end()) return static_cast<std::size_t>(it - labels.begin());
    labels.push_back(l);
    return labels.size() - 1;
  };

  for (std::size_t n = header_at + 1; n < lines.size(); ++n) {
    if (blank(lines[n])) continue;
    const std::string where = std::string(source) + ":" + std::to_string(n + 1);
    const auto fields = split_csv_line(lines[n], delim);
    if (fields.size() != 6) {
      throw ParseError(where + ": expected 6 fields, found " + std::to_string(fields.size()));
    }
    const auto r = intern(data.parameters, fields[0]);
    const auto c = intern(data.universe, fields[1]);
    const std::string cell_where = where + " (" + fields[0] + ", " + fields[1] + ")";
    RawCell cell{parse_decimal(fields[2], cell_where + " t"), parse_decimal(fields[3], cell_where + " i"),
                 parse_decimal(fields[4], cell_where + " f"), parse_decimal(fields[5], cell_where + " mu")};
    if (!cells.emplace(std::pair{r, c}, cell).second) {
      throw ParseError(cell_where + ": duplicate cell");
    }
  }

  std::vector<std::string> missing;
  for (std::size_t r = 0; r < data.parameters.size(); ++r) {
    auto& row = data.rows.emplace_back();
    for (std::size_t c = 0; c < data.universe.size(); ++c) {
      const auto it = cells.find({r, c});
      if (it == cells.end()) {
        missing.push_back("(" + data.parameters[r] + ", " + data.universe[c] + ")");
        continue;
      }
      row.push_back(it->second);
    }
  }
  if (!missing.empty()) {
    std::string msg = std::string(source) + ": missing cells";
    for (const auto& m : missing) msg += " " + m;
    throw ParseError(msg);
  }
  return data;
}

PnsSet load_pns(const std::filesystem::path& path) {
  const auto text = read_file(path);
  const auto source = path.string();
  const auto data = path.extension() == ".csv" ? parse_pns_csv(text, source)
                                               : parse_pns_json(text, source);
  const auto violations = validate(data);
  if (!violations.empty()) throw ValidationError(violations, source);
  return PnsSet::from_data(data);
}

std::string to_json_text(const PnsSet& s) { return to_json(s).dump(2) + "\n"; }

void save_pns(const PnsSet& s, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(path.string() + ": cannot open for writing");
  out << to_json_text(s);
  if (!out) throw Error(path.string() + ": write failed");
}

namespace {

Json cell_json(const PossValue& c) {
  return Json{{"t", c.triple.t.value()},
              {"i", c.triple.i.value()},
              {"f", c.triple.f.value()},
              {"mu", c.mu.value()}};
}

Json cells_json(std::span<const PossValue> cells, std::size_t cols) {
  Json rows = Json::array();
  for (std::size_t r = 0; cols > 0 && r < cells.size() / cols; ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < cols; ++c) row.push_back(cell_json(cells[r * cols + c]));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json pair_labels(const std::vector<ProductPnsSet::ParamPair>& rows, std::string_view sep) {
  Json out = Json::array();
  for (const auto& [k, l] : rows) out.push_back(k + std::string(sep) + l);
  return out;
}

Json component_json(const std::vector<double>& per, double mean) {
  return Json{{"per_parameter", per}, {"mean", mean}};
}

void dump_value(const Json& j, int decimals, int depth, std::string& out) {
  const std::string pad(static_cast<std::size_t>(depth) * 2, ' ');
  const std::string inner(static_cast<std::size_t>(depth + 1) * 2, ' ');
  switch (j.type()) {
    case Json::value_t::object: {
      if (j.empty()) {
        out += "{}";
        return;
      }
      out += "{\n";
      bool first = true;
      for (const auto& [key, value] : j.items()) {
        if (!first) out += ",\n";
        first = false;
        out += inner + Json(key).dump() + ": ";
        dump_value(value, decimals, depth + 1, out);
      }
      out += "\n" + pad + "}";
      return;
    }
    case Json::value_t::array: {
      if (j.empty()) {
        out += "[]";
        return;
      }
      const bool scalars = std::all_of(j.begin(), j.end(), [](const Json& v) {
        return v.is_primitive();
      });
      if (scalars) {
        out += "[";
        for (std::size_t k = 0; k < j.size(); ++k) {
          if (k) out += ", ";
          dump_value(j[k], decimals, depth + 1, out);
        }
        out += "]";
        return;
      }
      out += "[\n";
      for (std::size_t k = 0; k < j.size(); ++k) {
        if (k) out += ",\n";
        out += inner;
        dump_value(j[k], decimals, depth + 1, out);
      }
      out += "\n" + pad + "]";
      return;
    }
    case Json::value_t::number_float: {
      char buf[64];
      double v = j.get<double>();
      std::snprintf(buf, sizeof buf, "%.*f", decimals, v);
      std::string s = buf;
      // "-0.000000" and "0.000000" must render identically
      if (s.find_first_not_of("-0.") == std::string::npos && s.front() == '-') s.erase(0, 1);
      out += s;
      return;
    }
    default:
      out += j.dump();
  }
}

}  // namespace

Json to_json(const PnsSet& s) {
  return Json{{"parameters", s.parameters()},
              {"universe", s.universe()},
              {"cells", cells_json(s.cells(), s.element_count())}};
}

Json to_json(const ProductPnsSet& p, std::string_view separator) {
  return Json{{"parameters", pair_labels(p.row_params(), separator)},
              {"universe", p.universe()},
              {"cells", cells_json(p.cells(), p.element_count())}};
}

Json to_json(const WeightedMatrix& w, std::string_view separator) {
  Json entries = Json::array();
  for (std::size_t r = 0; r < w.row_count(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < w.column_count(); ++c) row.push_back(w.at(r, c));
    entries.push_back(std::move(row));
  }
  return Json{{"rows", pair_labels(w.rows, separator)},
              {"columns", w.columns},
              {"entries", std::move(entries)}};
}

Json to_json(const DecisionReport& r, std::string_view separator) {
  return Json{{"universe", r.universe},
              {"product", to_json(r.product, separator)},
              {"weighted",
               {{"truth", to_json(r.weighted.truth, separator)},
                {"indeterminacy", to_json(r.weighted.indeterminacy, separator)},
                {"falsity", to_json(r.weighted.falsity, separator)}}},
              {"scores", {{"truth", r.s_t}, {"indeterminacy", r.s_i}, {"falsity", r.s_f}}},
              {"decision_scores", r.ds},
              {"ranking", r.ranking},
              {"winners", r.winners}};
}

Json to_json(const SimilarityReport& r) {
  return Json{{"parameters", r.parameters},
              {"p", r.p},
              {"threshold", r.threshold},
              {"value_similarity", component_json(r.per_parameter_value_sim, r.value_sim)},
              {"possibility_similarity", component_json(r.per_parameter_poss_sim, r.poss_sim)},
              {"similarity", r.similarity},
              {"significant", r.significant}};
}

Json to_json(const SelectionReport& r) {
  Json candidates = Json::array();
  for (const auto& c : r.candidates) {
    Json entry{{"label", c.label}};
    entry["report"] = c.ok() ? to_json(*c.report) : Json(nullptr);
    entry["error"] = c.ok() ? Json(nullptr) : Json(c.error);
    candidates.push_back(std::move(entry));
  }
  return Json{{"model", r.model},
              {"p", r.p},
              {"threshold", r.threshold},
              {"candidates", std::move(candidates)},
              {"ranking", r.ranking},
              {"selected", r.selected},
              {"significant", r.significant}};
}

std::string dump_fixed(const Json& j, int decimals) {
  std::string out;
  dump_value(j, decimals, 0, out);
  out += "\n";
  return out;
}

}  // namespace pns::io
