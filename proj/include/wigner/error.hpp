#pragma once

#include <stdexcept>
#include <string>

namespace wigner {

enum class ErrorKind {
    invalid_dimension,
    numeric_input,
    range,
    domain,
    capacity,
    classification,
    precondition,
    no_shared_edge,
    sample_size,
    undefined_variance,
    input,
    config,
};

const char* to_string(ErrorKind kind) noexcept;

// Single exception type for the library; callers switch on kind() (the CLI
// maps config/input kinds to exit 2 and capacity to exit 3).
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) {
    throw Error(kind, what);
}

inline const char* to_string(ErrorKind kind) noexcept {
    switch (kind) {
    case ErrorKind::invalid_dimension: return "invalid-dimension";
    case ErrorKind::numeric_input: return "numeric-input";
    case ErrorKind::range: return "range";
    case ErrorKind::domain: return "domain";
    case ErrorKind::capacity: return "capacity";
    case ErrorKind::classification: return "classification";
    case ErrorKind::precondition: return "precondition";
    case ErrorKind::no_shared_edge: return "no-shared-edge";
    case ErrorKind::sample_size: return "sample-size";
    case ErrorKind::undefined_variance: return "undefined-variance";
    case ErrorKind::input: return "input";
    case ErrorKind::config: return "config";
    }
    return "unknown";
}

} // namespace wigner
