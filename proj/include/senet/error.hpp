#pragma once

#include <stdexcept>
#include <string>

namespace senet {

/// Failure categories. Each category maps to a stable process exit code so
/// scripted callers can dispatch on the cause of a rejection.
enum class ErrorKind {
    parse,          // malformed input document or complex file
    validation,     // a structural constraint was violated
    range,          // numeric argument outside its admissible interval
    disjointness,   // an id claimed by both the social and the ecological side
    empty_universe, // a required vertex universe (or one of its sides) is empty
    size_guard,     // simplex cardinality above the configured cap
};

/// Exit code contract: 0 success, 1 internal failure, 2 usage error,
/// then one code per ErrorKind. Documented in the CLI help text.
constexpr int exit_code(ErrorKind kind) noexcept {
    switch (kind) {
    case ErrorKind::parse: return 3;
    case ErrorKind::validation: return 4;
    case ErrorKind::range: return 5;
    case ErrorKind::disjointness: return 6;
    case ErrorKind::empty_universe: return 7;
    case ErrorKind::size_guard: return 8;
    }
    return 1;
}

constexpr const char* to_string(ErrorKind kind) noexcept {
    switch (kind) {
    case ErrorKind::parse: return "parse error";
    case ErrorKind::validation: return "validation error";
    case ErrorKind::range: return "range error";
    case ErrorKind::disjointness: return "disjointness violation";
    case ErrorKind::empty_universe: return "empty universe";
    case ErrorKind::size_guard: return "size guard";
    }
    return "error";
}

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(message), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }
    int exit_code() const noexcept { return senet::exit_code(kind_); }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message) {
    throw Error(kind, message);
}

} // namespace senet
