#pragma once

#include <stdexcept>
#include <string>

namespace geoclique {

// Exit-code contract: 1 usage (handled by the CLI parser), 2 invalid input,
// 3 guard exceeded, 4 internal audit failure.
struct InvalidInput : std::runtime_error {
    explicit InvalidInput(const std::string& msg) : std::runtime_error(msg) {}
};

struct GuardExceeded : std::runtime_error {
    explicit GuardExceeded(const std::string& msg) : std::runtime_error(msg) {}
};

struct AuditFailure : std::runtime_error {
    explicit AuditFailure(const std::string& msg) : std::runtime_error(msg) {}
};

inline void require(bool cond, const std::string& msg) {
    if (!cond) throw InvalidInput(msg);
}

inline void guard(bool cond, const std::string& msg) {
    if (!cond) throw GuardExceeded(msg);
}

inline void audit(bool cond, const std::string& msg) {
    if (!cond) throw AuditFailure(msg);
}

} // namespace geoclique
