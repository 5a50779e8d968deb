#ifndef WMI_ERRORS_HPP
#define WMI_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace wmi {

/// Bad user input: malformed values, out-of-range parameters, invalid files.
/// Maps to exit code 1 in the CLI.
class InvalidInput : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Two objects with incompatible ambient dimensions were combined.
class DimensionMismatch : public InvalidInput {
public:
    using InvalidInput::InvalidInput;
};

/// A Hodge-theoretic quantity was requested that the supplied configuration
/// does not determine (missing pullback data and no forced-zero shortcut).
/// Maps to exit code 2 in the CLI.
class InsufficientHodgeData : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A report was declared log-canonical but its dimension data contradicts
/// the log-canonical constraint (total C-dimension must be at most 1).
class LcInconsistency : public InvalidInput {
public:
    using InvalidInput::InvalidInput;
};

} // namespace wmi

#endif
