#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace bredon {

/// Usage errors come from malformed input (exit status 2 in the CLI);
/// domain errors from well-formed input that violates a mathematical
/// precondition (exit status 1).
enum class ErrorKind { Usage, Domain };

/// Every failure the library reports carries a stable machine-readable code.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, std::string code, const std::string& message)
        : std::runtime_error(message), kind_(kind), code_(std::move(code)) {}

    ErrorKind kind() const noexcept { return kind_; }
    const std::string& code() const noexcept { return code_; }

private:
    ErrorKind kind_;
    std::string code_;
};

inline Error usage_error(std::string code, const std::string& message) {
    return Error(ErrorKind::Usage, std::move(code), message);
}

inline Error domain_error(std::string code, const std::string& message) {
    return Error(ErrorKind::Domain, std::move(code), message);
}

} // namespace bredon
