#pragma once

#include <stdexcept>
#include <string>

namespace s3h {

/// Runtime error with a stable machine-readable code ("not-on-sphere",
/// "conformal-point", ...) next to the human-readable message.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& message)
        : std::runtime_error(code + ": " + message), code_(std::move(code)) {}

    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

} // namespace s3h
