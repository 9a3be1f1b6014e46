#pragma once

#include <stdexcept>
#include <string>

namespace eads {

// Error categories mirrored 1:1 by the C API status codes and the CLI
// exit codes.
enum class ErrorCode {
    invalid_argument,
    io,
    degenerate_data,
    empty_data,
};

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] inline void throw_invalid(const std::string& msg) {
    throw Error(ErrorCode::invalid_argument, msg);
}

[[noreturn]] inline void throw_io(const std::string& msg) {
    throw Error(ErrorCode::io, msg);
}

[[noreturn]] inline void throw_degenerate(const std::string& msg) {
    throw Error(ErrorCode::degenerate_data, msg);
}

[[noreturn]] inline void throw_empty(const std::string& msg) {
    throw Error(ErrorCode::empty_data, msg);
}

} // namespace eads
