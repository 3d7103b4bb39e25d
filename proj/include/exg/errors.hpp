#pragma once

#include <stdexcept>
#include <string>

namespace exg {

// Error taxonomy shared by the library and the CLI.  The code string is
// what ends up in the CLI's {"error": code, "detail": ...} objects.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& detail)
        : std::runtime_error(detail), code_(std::move(code)) {}
    const std::string& code() const noexcept { return code_; }
    virtual int exit_code() const noexcept { return 1; }

private:
    std::string code_;
};

// Malformed or out-of-contract input (bad JSON, self-loop, bad weight...).
class InputError : public Error {
public:
    explicit InputError(const std::string& detail) : Error("input", detail) {}
};

// Instance exceeds a configured size cap.
class CapError : public Error {
public:
    explicit CapError(const std::string& detail) : Error("cap-exceeded", detail) {}
};

// Iterative solver failed to reach the requested tolerance.
class ConvergenceError : public Error {
public:
    explicit ConvergenceError(const std::string& detail)
        : Error("nonconvergence", detail) {}
    int exit_code() const noexcept override { return 2; }
};

}  // namespace exg
