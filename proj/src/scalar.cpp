#include "pns/scalar.hpp"

#include <sstream>

#include "pns/errors.hpp"

namespace pns {

UnitScalar::UnitScalar(double value) : value_(value) {
  if (!in_unit_range(value)) {
    std::ostringstream msg;
    msg << "value " << value << " is outside [0,1]";
    throw RangeError(msg.str());
  }
}

std::string Violation::to_string() const {
  std::string out;
  if (parameter || element) {
    out += "(";
    out += parameter.value_or("?");
    out += ", ";
    out += element.value_or("?");
    out += "): ";
  }
  out += message;
  return out;
}

namespace {

std::string summarize(const std::vector<Violation>& violations, std::string_view source) {
  std::string out = source.empty() ? std::string() : std::string(source) + ": ";
  out += "invalid PNS-set: ";
  out += std::to_string(violations.size());
  out += violations.size() == 1 ? " violation" : " violations";
  for (const auto& v : violations) {
    out += "\n  ";
    out += v.to_string();
  }
  return out;
}

}  // namespace

ValidationError::ValidationError(std::vector<Violation> violations, std::string_view source)
    : Error(summarize(violations, source)), violations_(std::move(violations)) {}

}  // namespace pns
