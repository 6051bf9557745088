#pragma once

#include <stdexcept>
#include <string>

namespace eulab {

// error taxonomy mirrored by the CLI exit codes:
// usage/parse problems exit 2, invalid matroids exit 3, resource bounds exit 4.

struct invalid_parameters_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct invalid_matroid_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct size_limit_error : std::length_error {
    using std::length_error::length_error;
};

// raised when an internal identity that must hold exactly fails to hold,
// e.g. a polynomial division that is guaranteed exact leaves a remainder
struct internal_consistency_error : std::logic_error {
    using std::logic_error::logic_error;
};

struct io_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace eulab
