#ifndef IVL_ERROR_HPP
#define IVL_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace ivl {

enum class errc {
  invalid_argument,
  reversed_endpoints,
  indeterminate_form,
  zero_in_divisor,
  infinite_endpoint,
  zero_in_pro_divisor,
  unsupported,
  invalid_encoding,
  parse_error,
  dimension_mismatch,
  not_contracting,
  no_convergence,
  singular_midpoint,
  too_many_singular_samples,
  budget_exceeded,
};

constexpr std::string_view to_string(errc code) noexcept {
  switch (code) {
    case errc::invalid_argument: return "InvalidArgument";
    case errc::reversed_endpoints: return "ReversedEndpoints";
    case errc::indeterminate_form: return "IndeterminateForm";
    case errc::zero_in_divisor: return "ZeroInDivisor";
    case errc::infinite_endpoint: return "InfiniteEndpoint";
    case errc::zero_in_pro_divisor: return "ZeroInProDivisor";
    case errc::unsupported: return "Unsupported";
    case errc::invalid_encoding: return "InvalidEncoding";
    case errc::parse_error: return "ParseError";
    case errc::dimension_mismatch: return "DimensionMismatch";
    case errc::not_contracting: return "NotContracting";
    case errc::no_convergence: return "NoConvergence";
    case errc::singular_midpoint: return "SingularMidpoint";
    case errc::too_many_singular_samples: return "TooManySingularSamples";
    case errc::budget_exceeded: return "BudgetExceeded";
  }
  return "Unknown";
}

/// Every failure raised by the library carries one of the `errc` kinds.
class error : public std::runtime_error {
 public:
  error(errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

}  // namespace ivl

#endif  // IVL_ERROR_HPP
