#pragma once

#include <stdexcept>
#include <string>

namespace lexshell {

enum class Errc {
  cycle_detected,
  unknown_element,
  duplicate_element,
  not_comparable,
  not_bounded,
  relation_endpoint_mismatch,
  generator_decomposable,
  incomplete_ordering,
  search_bound_exceeded,
  prefix_violation,
  incomparable_tie,
  order_not_total,
  zero_element,
  no_carrier,
  not_in_ideal,
  path_bound_exceeded,
  theorem_violation,
  sweep_budget_exceeded,
  parse_error,
  validation_error,
  usage_error,
};

constexpr const char* errc_name(Errc c) {
  switch (c) {
    case Errc::cycle_detected: return "CycleDetected";
    case Errc::unknown_element: return "UnknownElement";
    case Errc::duplicate_element: return "DuplicateElement";
    case Errc::not_comparable: return "NotComparable";
    case Errc::not_bounded: return "NotBounded";
    case Errc::relation_endpoint_mismatch: return "RelationEndpointMismatch";
    case Errc::generator_decomposable: return "GeneratorDecomposable";
    case Errc::incomplete_ordering: return "IncompleteOrdering";
    case Errc::search_bound_exceeded: return "SearchBoundExceeded";
    case Errc::prefix_violation: return "PrefixViolation";
    case Errc::incomparable_tie: return "IncomparableTie";
    case Errc::order_not_total: return "OrderNotTotal";
    case Errc::zero_element: return "ZeroElement";
    case Errc::no_carrier: return "NoCarrier";
    case Errc::not_in_ideal: return "NotInIdeal";
    case Errc::path_bound_exceeded: return "PathBoundExceeded";
    case Errc::theorem_violation: return "TheoremViolation";
    case Errc::sweep_budget_exceeded: return "SweepBudgetExceeded";
    case Errc::parse_error: return "ParseError";
    case Errc::validation_error: return "ValidationError";
    case Errc::usage_error: return "UsageError";
  }
  return "UnknownError";
}

/// Library error carrying a machine-readable code alongside the message.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace lexshell
