#include "qumetrics/error.hpp"

namespace qumetrics {

const char* to_string(Violation v) noexcept {
  switch (v) {
    case Violation::kNotHermitian:
      return "not Hermitian";
    case Violation::kNonUnitTrace:
      return "trace is not 1";
    case Violation::kNotPositiveSemidefinite:
      return "not positive semidefinite";
    case Violation::kMalformed:
      return "malformed input";
  }
  return "unknown violation";
}

ValidationError::ValidationError(Violation violation, double measured, const std::string& detail)
    : Error(std::string(to_string(violation)) + ": " + detail),
      violation_(violation),
      measured_(measured) {}

}  // namespace qumetrics
