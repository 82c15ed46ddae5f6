#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace poincare {

/// Error categories raised by the library. Each maps to a stable kebab-case
/// name used in CLI diagnostics and JSON output.
enum class Errc {
  unsupported_argument,
  division_by_zero,
  pole_at_origin,
  pole_at_point,
  not_eventually_polynomial,
  horizon_too_short,
  invalid_spec,
  unknown_symbol,
  inconsistent_plan,
  unknown_entry,
  out_of_validity,
  no_hilbert_data,
  not_pr_form,
  order_exceeded,
  bad_point,
  genericity_failure,
  bad_sample,
  parse_error,
  invalid_scenario,
};

constexpr std::string_view to_string(Errc code) noexcept {
  switch (code) {
    case Errc::unsupported_argument: return "unsupported-argument";
    case Errc::division_by_zero: return "division-by-zero";
    case Errc::pole_at_origin: return "pole-at-origin";
    case Errc::pole_at_point: return "pole-at-point";
    case Errc::not_eventually_polynomial: return "not-eventually-polynomial";
    case Errc::horizon_too_short: return "horizon-too-short";
    case Errc::invalid_spec: return "invalid-spec";
    case Errc::unknown_symbol: return "unknown-symbol";
    case Errc::inconsistent_plan: return "inconsistent-plan";
    case Errc::unknown_entry: return "unknown-entry";
    case Errc::out_of_validity: return "out-of-validity";
    case Errc::no_hilbert_data: return "no-hilbert-data";
    case Errc::not_pr_form: return "not-PR-form";
    case Errc::order_exceeded: return "order-exceeded";
    case Errc::bad_point: return "bad-point";
    case Errc::genericity_failure: return "genericity-failure";
    case Errc::bad_sample: return "bad-sample";
    case Errc::parse_error: return "parse-error";
    case Errc::invalid_scenario: return "invalid-scenario";
  }
  return "unknown";
}

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace poincare
