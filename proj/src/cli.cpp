#include "pns/cli.hpp"

#include <algorithm>
#include <climits>
#include <filesystem>
#include <functional>
#include <ostream>

#include <CLI11.hpp>

#include "pns/decision.hpp"
#include "pns/io.hpp"
#include "pns/products.hpp"
#include "pns/render.hpp"

namespace pns::cli {

namespace fs = std::filesystem;

NormProfile RunConfig::profile() const {
  NormProfile profile;
  const auto t = norms::tnorm_by_name(tnorm);
  if (!t) throw InvalidArgument("unknown t-norm '" + tnorm + "'");
  const auto s = norms::tconorm_by_name(tconorm);
  if (!s) throw InvalidArgument("unknown t-conorm '" + tconorm + "'");
  if (negation != "standard") throw InvalidArgument("unknown negation '" + negation + "'");
  profile.tnorm = *t;
  profile.tconorm = *s;
  return profile;
}

namespace {

std::vector<LabeledSet> load_candidates(const std::vector<std::string>& args) {
  std::vector<fs::path> files;
  for (const auto& arg : args) {
    const fs::path path(arg);
    if (fs::is_directory(path)) {
      std::vector<fs::path> found;
      for (const auto& entry : fs::directory_iterator(path)) {
        const auto ext = entry.path().extension();
        if (entry.is_regular_file() && (ext == ".json" || ext == ".csv")) {
          found.push_back(entry.path());
        }
      }
      std::sort(found.begin(), found.end());
      files.insert(files.end(), found.begin(), found.end());
    } else {
      files.push_back(path);
    }
  }
  std::vector<LabeledSet> out;
  for (const auto& f : files) out.push_back({f.stem().string(), io::load_pns(f)});
  return out;
}

io::Json violations_json(const std::string& file, const std::vector<Violation>& violations) {
  io::Json list = io::Json::array();
  for (const auto& v : violations) {
    const char* kind = v.kind == Violation::Kind::label   ? "label"
                       : v.kind == Violation::Kind::shape ? "shape"
                                                          : "range";
    io::Json entry{{"kind", kind}};
    entry["parameter"] = v.parameter ? io::Json(*v.parameter) : io::Json(nullptr);
    entry["element"] = v.element ? io::Json(*v.element) : io::Json(nullptr);
    entry["message"] = v.message;
    list.push_back(std::move(entry));
  }
  return io::Json{{"file", file}, {"valid", violations.empty()}, {"violations", std::move(list)}};
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Possibility neutrosophic soft set toolkit", "pns"};
  app.require_subcommand(1);
  app.fallthrough();

  app.add_option("--tnorm", cfg.tnorm, "t-norm family")
      ->check(CLI::IsMember({"min", "product", "lukasiewicz"}))
      ->capture_default_str();
  app.add_option("--tconorm", cfg.tconorm, "t-conorm family")
      ->check(CLI::IsMember({"max", "probsum", "lukasiewicz"}))
      ->capture_default_str();
  app.add_option("--negation", cfg.negation, "negation family")
      ->check(CLI::IsMember({"standard"}))
      ->capture_default_str();
  app.add_option("-p", cfg.p, "Minkowski exponent for value similarity")
      ->check(CLI::Range(1, INT_MAX))
      ->capture_default_str();
  app.add_option("--threshold", cfg.threshold, "significance threshold for S")
      ->check(CLI::Range(0.0, 1.0))
      ->capture_default_str();
  std::string format = "table";
  app.add_option("--format", format, "output format")
      ->check(CLI::IsMember({"table", "json"}))
      ->capture_default_str();
  app.add_option("--separator", cfg.separator, "joins parameter pairs in product labels")
      ->capture_default_str();

  std::function<int()> action;

  std::string file_a, file_b;
  auto two_files = [&](CLI::App* sub) {
    sub->add_option("first", file_a, "first PNS-set file")->required();
    sub->add_option("second", file_b, "second PNS-set file")->required();
  };

  auto emit_set = [&](const PnsSet& s) {
    out << (cfg.format == Format::json ? io::dump_fixed(io::to_json(s)) : render::table(s));
  };

  auto* validate_cmd = app.add_subcommand("validate", "check a PNS-set file");
  validate_cmd->add_option("file", file_a, "PNS-set file")->required();
  validate_cmd->callback([&] {
    action = [&] {
      const fs::path path(file_a);
      std::vector<Violation> violations;
      try {
        const auto text = [&] {
          std::ifstream in(path, std::ios::binary);
          if (!in) throw ParseError(file_a + ": cannot open file");
          return std::string(std::istreambuf_iterator<char>(in), {});
        }();
        const auto data = path.extension() == ".csv" ? io::parse_pns_csv(text, file_a)
                                                     : io::parse_pns_json(text, file_a);
        violations = validate(data);
      } catch (const ParseError& e) {
        violations.push_back({Violation::Kind::shape, {}, {}, e.what()});
      }
      if (cfg.format == Format::json) {
        out << io::dump_fixed(violations_json(file_a, violations));
      } else if (violations.empty()) {
        out << file_a << ": valid\n";
      } else {
        out << file_a << ": " << violations.size() << " violation(s)\n";
        for (const auto& v : violations) out << "  " << v.to_string() << "\n";
      }
      return violations.empty() ? kExitOk : kExitDomainError;
    };
  });

  auto* union_cmd = app.add_subcommand("union", "union of two PNS-sets");
  two_files(union_cmd);
  union_cmd->callback([&] {
    action = [&] {
      emit_set(set_union(cfg.profile(), io::load_pns(file_a), io::load_pns(file_b)));
      return kExitOk;
    };
  });

  auto* intersect_cmd = app.add_subcommand("intersect", "intersection of two PNS-sets");
  two_files(intersect_cmd);
  intersect_cmd->callback([&] {
    action = [&] {
      emit_set(set_intersection(cfg.profile(), io::load_pns(file_a), io::load_pns(file_b)));
      return kExitOk;
    };
  });

  auto* complement_cmd = app.add_subcommand("complement", "complement of a PNS-set");
  complement_cmd->add_option("file", file_a, "PNS-set file")->required();
  complement_cmd->callback([&] {
    action = [&] {
      emit_set(complement(cfg.profile(), io::load_pns(file_a)));
      return kExitOk;
    };
  });

  auto product_cmd = [&](const char* name, const char* help, auto op) {
    auto* sub = app.add_subcommand(name, help);
    two_files(sub);
    sub->callback([&, op] {
      action = [&, op] {
        const auto p = op(io::load_pns(file_a), io::load_pns(file_b), Exec::parallel);
        out << (cfg.format == Format::json ? io::dump_fixed(io::to_json(p, cfg.separator))
                                           : render::table(p, cfg.separator));
        return kExitOk;
      };
    });
  };
  product_cmd("and-product", "AND product over parameter pairs", &and_product);
  product_cmd("or-product", "OR product over parameter pairs", &or_product);

  auto* decide_cmd = app.add_subcommand("decide", "rank elements from two observations");
  two_files(decide_cmd);
  decide_cmd->callback([&] {
    action = [&] {
      const auto r = decide(io::load_pns(file_a), io::load_pns(file_b));
      out << (cfg.format == Format::json ? io::dump_fixed(io::to_json(r, cfg.separator))
                                         : render::table(r, cfg.separator));
      return kExitOk;
    };
  });

  auto* similarity_cmd = app.add_subcommand("similarity", "similarity measure of two PNS-sets");
  two_files(similarity_cmd);
  similarity_cmd->callback([&] {
    action = [&] {
      const auto r = similarity(io::load_pns(file_a), io::load_pns(file_b), cfg.p,
                                UnitScalar(cfg.threshold));
      out << (cfg.format == Format::json ? io::dump_fixed(io::to_json(r)) : render::table(r));
      return kExitOk;
    };
  });

  std::vector<std::string> candidate_args;
  auto* select_cmd = app.add_subcommand("select", "pick the candidate most similar to a model");
  select_cmd->add_option("model", file_a, "model PNS-set file")->required();
  select_cmd->add_option("candidates", candidate_args, "candidate files or directories")
      ->required();
  select_cmd->callback([&] {
    action = [&] {
      const auto model = io::load_pns(file_a);
      const auto candidates = load_candidates(candidate_args);
      const auto r = select_by_similarity(model, candidates, cfg.p, UnitScalar(cfg.threshold),
                                          fs::path(file_a).stem().string());
      out << (cfg.format == Format::json ? io::dump_fixed(io::to_json(r)) : render::table(r));
      for (const auto& c : r.candidates) {
        if (!c.ok()) err << "pns: candidate " << c.label << ": " << c.error << "\n";
      }
      return r.selected.empty() ? kExitDomainError : kExitOk;
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "pns: " << e.what() << "\n" << app.help();
    return kExitUsage;
  }

  cfg.format = format == "json" ? Format::json : Format::table;
  try {
    return action ? action() : kExitUsage;
  } catch (const std::exception& e) {
    err << "pns: " << e.what() << "\n";
    return kExitDomainError;
  }
}

}  // namespace pns::cli
