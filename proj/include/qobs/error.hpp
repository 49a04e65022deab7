#pragma once

#include <stdexcept>
#include <string>

namespace qobs {

enum class ErrorKind {
    InvalidArgument,  // malformed value or violated precondition
    InsufficientData, // too few symbols, points or observers
    Io,               // unreadable or unwritable path
    Parse,            // malformed CSV or config text
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& msg) : std::runtime_error(msg), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& msg) { throw Error(kind, msg); }

inline void require(bool cond, const std::string& msg) {
    if (!cond) fail(ErrorKind::InvalidArgument, msg);
}

} // namespace qobs
