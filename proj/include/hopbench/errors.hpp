#pragma once

#include <stdexcept>
#include <string>

namespace hopbench {

// Invalid user-supplied configuration (bad difficulty, density over capacity, ...).
struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

// The generator could not satisfy its own invariants (collision retries
// exhausted, template pool exhausted). Indicates a bug or a pathological config.
struct GenerationError : std::runtime_error {
    explicit GenerationError(const std::string& what) : std::runtime_error(what) {}
};

// Network-level failure talking to a backend; surfaced after bounded retries.
struct TransportError : std::runtime_error {
    explicit TransportError(const std::string& what) : std::runtime_error(what) {}
};

// Backend replied, but not in the documented wire shape.
struct ProtocolError : std::runtime_error {
    explicit ProtocolError(const std::string& what) : std::runtime_error(what) {}
};

// Request exceeded its deadline. Callers treat this as a forfeited attempt,
// not a run-level failure.
struct TimeoutError : std::runtime_error {
    explicit TimeoutError(const std::string& what) : std::runtime_error(what) {}
};

// Bad inputs to an analysis operation (mismatched scenario sets, empty
// results, degenerate tables, mixed schema versions).
struct AnalysisError : std::runtime_error {
    explicit AnalysisError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace hopbench
