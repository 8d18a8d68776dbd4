#pragma once

#include <stdexcept>
#include <string>

namespace maglev {

/// Malformed parameter or scenario file. Carries the file path and
/// 1-based line number of the offending entry (line 0 = whole file).
class ParseError : public std::runtime_error {
public:
    ParseError(std::string path, int line, const std::string& what)
        : std::runtime_error(path + ":" + std::to_string(line) + ": " + what),
          path_(std::move(path)),
          line_(line) {}

    const std::string& path() const noexcept { return path_; }
    int line() const noexcept { return line_; }

private:
    std::string path_;
    int line_;
};

/// Structurally valid input that violates a contract (unsorted schedule,
/// non-positive time step, missing reference, ...).
class ValidationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A numeric routine failed: eigensolver did not converge, integration
/// produced a non-finite state, root residual out of bounds.
class NumericalError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// CLI exit-code contract, stable for scripting.
enum ExitCode : int {
    kExitOk = 0,
    kExitValidation = 1,
    kExitNumerical = 2,
    kExitContact = 3,
};

}  // namespace maglev
