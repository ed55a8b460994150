#pragma once

#include <stdexcept>
#include <string>

namespace graphmax {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Input validation failures (CLI exit code 2).
struct InputError : Error {
    using Error::Error;
};

struct DisconnectedGraph : InputError {
    DisconnectedGraph() : InputError("graph is not connected") {}
};

struct SelfLoop : InputError {
    explicit SelfLoop(int v) : InputError("self-loop at vertex " + std::to_string(v)) {}
};

struct VertexOutOfRange : InputError {
    explicit VertexOutOfRange(int v) : InputError("vertex id out of range: " + std::to_string(v)) {}
};

struct UnsupportedSize : InputError {
    explicit UnsupportedSize(const std::string& what) : InputError(what) {}
};

struct LengthMismatch : InputError {
    LengthMismatch(int got, int want)
        : InputError("vertex function has length " + std::to_string(got) + ", graph has " +
                     std::to_string(want) + " vertices") {}
};

struct InvalidExponent : InputError {
    explicit InvalidExponent(const std::string& what) : InputError(what) {}
};

struct InconsistentMatrix : InputError {
    explicit InconsistentMatrix(const std::string& what) : InputError(what) {}
};

struct UnsupportedCombination : InputError {
    explicit UnsupportedCombination(const std::string& what) : InputError(what) {}
};

// Resource caps (CLI exit code 3).
struct CapExceeded : Error {
    explicit CapExceeded(const std::string& what) : Error(what) {}
};

}  // namespace graphmax
