#pragma once

#include <stdexcept>
#include <string>

namespace minkspace {

// Invalid descriptors, dimension mismatches, violated preconditions.
// The message names the violated invariant.
struct ValidationError : std::invalid_argument {
    explicit ValidationError(const std::string& what) : std::invalid_argument(what) {}
};

// Iteration caps, failed pivots, non-converged solves.
struct NumericalError : std::runtime_error {
    explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace minkspace
