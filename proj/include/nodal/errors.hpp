#pragma once

#include <stdexcept>
#include <string>

namespace nodal {

// Bad user input: parse failures, dimension mismatches, violated preconditions.
struct InputError : std::runtime_error {
    explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

// A configurable resource cap was hit; the computation was aborted, not answered.
struct ResourceGuardError : std::runtime_error {
    explicit ResourceGuardError(const std::string& what) : std::runtime_error(what) {}
};

// An internal invariant failed: a bug in this library, not bad input.
struct InternalError : std::logic_error {
    explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace nodal
