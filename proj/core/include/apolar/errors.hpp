#ifndef APOLAR_ERRORS_HPP
#define APOLAR_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace apolar {

/// Every throwing operation reports a stable error code (used verbatim in
/// CLI reports) plus a kind that maps to the process exit code:
/// user errors exit 2, internal invariant breaches exit 3.
class Error : public std::runtime_error {
public:
    enum class Kind { user, internal };

    Error(Kind kind, std::string code, const std::string& message)
        : std::runtime_error(code + ": " + message),
          kind_(kind),
          code_(std::move(code)) {}

    Kind kind() const { return kind_; }
    const std::string& code() const { return code_; }

private:
    Kind kind_;
    std::string code_;
};

[[noreturn]] inline void fail_user(const std::string& code, const std::string& message) {
    throw Error(Error::Kind::user, code, message);
}

[[noreturn]] inline void fail_internal(const std::string& code, const std::string& message) {
    throw Error(Error::Kind::internal, code, message);
}

inline void require_user(bool ok, const std::string& code, const std::string& message) {
    if (!ok) fail_user(code, message);
}

inline void require_internal(bool ok, const std::string& message) {
    if (!ok) fail_internal("InternalError", message);
}

} // namespace apolar

#endif
