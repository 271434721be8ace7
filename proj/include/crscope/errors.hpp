#pragma once

#include <stdexcept>
#include <string>

namespace crscope {

// Bad caller-supplied data: shape mismatch, non-finite entries, out-of-range
// parameters, unknown names. The CLI maps this to exit code 2.
struct InputError : std::runtime_error {
    explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

// A computation produced something the theory forbids (odd [T|JT] rank,
// negative kernel dimension, ...). Signals a tolerance failure rather than
// bad input.
struct DegeneracyError : std::runtime_error {
    explicit DegeneracyError(const std::string& what) : std::runtime_error(what) {}
};

// Library-internal invariant broke (e.g. a real-valued polynomial evaluated
// to a visibly non-real number).
struct InternalError : std::logic_error {
    explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace crscope
