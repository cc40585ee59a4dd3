#pragma once

#include <stdexcept>
#include <string>

namespace zigzag {

struct InvalidDescent : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct EmptyRestriction : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct UndefinedPaintbox : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Tied sample values or an exact interval-endpoint hit in sigma_u; callers
// resample, these occur with probability zero under density inputs.
struct DegenerateSample : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InvalidValley : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct NotApplicable : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct BoundExceeded : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct IncompleteInput : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct ConfigMismatch : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace zigzag
