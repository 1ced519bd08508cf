// Failure taxonomy shared by the whole library.
//
// Every thrown error carries a Kind so callers (CLI, bindings, tests) can
// distinguish "your input is malformed" from "this input is out of the
// supported finite scale" from "an exhaustive search hit its cap".

#pragma once

#include <stdexcept>
#include <string>

namespace locba {

enum class ErrorKind {
    validation,  // structurally invalid input (not an ideal, not a topology, ...)
    scope,       // input exceeds a documented finite-scale cap
    search,      // an exhaustive search exceeded its budget
    io,          // malformed file / JSON
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}

    ErrorKind kind() const { return kind_; }

    static Error validation(const std::string& w) { return Error(ErrorKind::validation, w); }
    static Error scope(const std::string& w) { return Error(ErrorKind::scope, w); }
    static Error search(const std::string& w) { return Error(ErrorKind::search, w); }
    static Error io(const std::string& w) { return Error(ErrorKind::io, w); }

private:
    ErrorKind kind_;
};

inline const char* to_string(ErrorKind k) {
    switch (k) {
        case ErrorKind::validation: return "validation";
        case ErrorKind::scope: return "scope";
        case ErrorKind::search: return "search";
        case ErrorKind::io: return "io";
    }
    return "unknown";
}

}  // namespace locba
