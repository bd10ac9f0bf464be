#pragma once

#include <stdexcept>
#include <string>

namespace gv {

/// Bad user-supplied parameters (family out of range, malformed input, ...).
struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// A structural identity the engine relies on failed to hold.
/// Signals a construction bug, never bad input.
struct InternalConsistencyError : std::logic_error {
  using std::logic_error::logic_error;
};

}  // namespace gv
