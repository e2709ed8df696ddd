#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace pns {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A scalar fell outside [0,1] or was not a number.
class RangeError : public Error {
 public:
  using Error::Error;
};

/// Two sets (or a set and a label list) do not share the labels an operation needs.
class IncompatibleSets : public Error {
 public:
  using Error::Error;
};

class IncompatibleVectors : public Error {
 public:
  using Error::Error;
};

class LookupError : public Error {
 public:
  using Error::Error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

class EmptyInput : public Error {
 public:
  using Error::Error;
};

/// A possibility-similarity row whose mu and nu are all zero.
class DegenerateRow : public Error {
 public:
  DegenerateRow(std::string parameter, const std::string& what)
      : Error(what), parameter_(std::move(parameter)) {}
  const std::string& parameter() const noexcept { return parameter_; }

 private:
  std::string parameter_;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

/// One problem found while validating a PNS-set document.
struct Violation {
  enum class Kind { label, shape, range };

  Kind kind;
  std::optional<std::string> parameter;
  std::optional<std::string> element;
  std::string message;

  std::string to_string() const;
};

class ValidationError : public Error {
 public:
  /// `source` (a file name, say) prefixes the summary message when given.
  explicit ValidationError(std::vector<Violation> violations, std::string_view source = {});
  const std::vector<Violation>& violations() const noexcept { return violations_; }

 private:
  std::vector<Violation> violations_;
};

}  // namespace pns
