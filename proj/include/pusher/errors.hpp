#pragma once

#include <stdexcept>
#include <string>

namespace pusher {

// Error taxonomy, shared by the library and the CLI exit codes:
//   InputError      malformed user data                  -> exit 1
//   NumericError    numerically unresolvable quantity    -> exit 1
//   ContractError   violated precondition or invariant   -> exit 2
//   ConventionError query outlawed by a model convention -> exit 2
//   ResourceError   desk-scale cap exceeded              -> exit 3
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct ContractError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct ConventionError : ContractError {
  using ContractError::ContractError;
};
struct ResourceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NumericError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Desk-scale caps. Enumeration is exponential; these keep suites in minutes.
inline constexpr int kMaxEnumLen = 12;
inline constexpr int kMaxPunctures = 8;
inline constexpr int kMaxScreenDepth = 8;
inline constexpr long kMaxEnumBudget = 40'000'000;  // raw words per enumeration

}  // namespace pusher
