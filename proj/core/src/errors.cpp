#include "epifair/errors.hpp"

namespace epifair {

const char* to_string(errc code) noexcept {
  switch (code) {
    case errc::all_zero: return "AllZero";
    case errc::zero_with_log_branch: return "ZeroWithLogBranch";
    case errc::empty_group: return "EmptyGroup";
    case errc::not_two_groups: return "NotTwoGroups";
    case errc::too_few_agents: return "TooFewAgents";
    case errc::zero_denominator: return "ZeroDenominator";
    case errc::negative_input: return "NegativeInput";
    case errc::non_finite: return "NonFinite";
    case errc::length_mismatch: return "LengthMismatch";
    case errc::invalid_probability: return "InvalidProbability";
    case errc::negative_entry: return "NegativeEntry";
    case errc::dimension_mismatch: return "DimensionMismatch";
    case errc::invalid_target: return "InvalidTarget";
    case errc::horizon_too_short: return "HorizonTooShort";
    case errc::heterogeneous_input: return "HeterogeneousInput";
    case errc::parse_error: return "ParseError";
    case errc::invalid_value: return "InvalidValue";
    case errc::io_error: return "IoError";
  }
  return "UnknownError";
}

}  // namespace epifair
