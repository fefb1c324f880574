#include "qseries/error.hpp"

namespace qseries {

std::string_view to_string(Errc code) noexcept {
  switch (code) {
    case Errc::non_convergent_base: return "NonConvergentBase";
    case Errc::division_by_zero: return "DivisionByZero";
    case Errc::length_mismatch: return "LengthMismatch";
    case Errc::degenerate_variables: return "DegenerateVariables";
    case Errc::domain_violation: return "DomainViolation";
    case Errc::pole_encountered: return "PoleEncountered";
    case Errc::invalid_parameters: return "InvalidParameters";
    case Errc::unknown_identity: return "UnknownIdentity";
    case Errc::invalid_config: return "InvalidConfig";
    case Errc::domain_exhausted: return "DomainExhausted";
    case Errc::property_h_violation: return "PropertyHViolation";
    case Errc::domain_empty: return "DomainEmpty";
  }
  return "Unknown";
}

}  // namespace qseries
