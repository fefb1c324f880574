#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace qseries {

enum class Errc {
  non_convergent_base,
  division_by_zero,
  length_mismatch,
  degenerate_variables,
  domain_violation,
  pole_encountered,
  invalid_parameters,
  unknown_identity,
  invalid_config,
  domain_exhausted,
  property_h_violation,
  domain_empty,
};

std::string_view to_string(Errc code) noexcept;

/// Single exception type for the library; `code()` tells callers which
/// contract was broken.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code), detail_(what) {}

  Errc code() const noexcept { return code_; }
  /// Message without the error-code prefix.
  const std::string& detail() const noexcept { return detail_; }

 private:
  Errc code_;
  std::string detail_;
};

}  // namespace qseries
