#pragma once

#include <iosfwd>
#include <string>

#include "pns/norms.hpp"
#include "pns/similarity.hpp"

namespace pns::cli {

enum class Format { table, json };

struct RunConfig {
  std::string tnorm = "min";
  std::string tconorm = "max";
  std::string negation = "standard";
  int p = kDefaultMinkowskiP;
  double threshold = kSignificanceThreshold;
  Format format = Format::table;
  std::string separator = "*";

  /// Throws InvalidArgument for an unregistered family name.
  NormProfile profile() const;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomainError = 1;
inline constexpr int kExitUsage = 2;

/// Parses argv, runs one subcommand and writes its output. Returns the exit status.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace pns::cli
