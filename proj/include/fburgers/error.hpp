#pragma once

#include <stdexcept>
#include <string>

namespace fburgers {

enum class ErrorKind {
    InvalidInput,       // precondition on an argument violated
    SymmetryViolation,  // spectral data does not describe a real field
    InvalidState,       // non-finite field handed to an operator
    Instability,        // non-finite value produced inside a time step
    SingularTime,       // 1 + t*m0 == 0 in the slope law
    Domain,             // oracle evaluated at or past the shock time
    Convergence,        // implicit solve failed to reach its residual
    Usage,              // bad configuration key or value
    Io,
};

/// Single exception type for the library. `key()` names the offending
/// configuration key for usage errors; `stage()` is the RK stage (1..4)
/// for instability errors, 0 otherwise.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what, std::string key = {}, int stage = 0)
        : std::runtime_error(what), kind_(kind), key_(std::move(key)), stage_(stage) {}

    ErrorKind kind() const noexcept { return kind_; }
    const std::string& key() const noexcept { return key_; }
    int stage() const noexcept { return stage_; }

private:
    ErrorKind kind_;
    std::string key_;
    int stage_;
};

}  // namespace fburgers
