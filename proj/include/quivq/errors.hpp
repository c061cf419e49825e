#pragma once

#include <stdexcept>
#include <string>

namespace quivq {

/// A recoverable domain failure carrying a stable error code such as "NoSolution"
/// or "NotReflectable". The CLI reports these with exit status 2.
class DomainError : public std::runtime_error {
public:
    DomainError(std::string code, const std::string& detail)
        : std::runtime_error(code + ": " + detail), code_(std::move(code)), detail_(detail) {}

    [[nodiscard]] const std::string& code() const { return code_; }
    [[nodiscard]] const std::string& detail() const { return detail_; }

private:
    std::string code_;
    std::string detail_;
};

}  // namespace quivq
