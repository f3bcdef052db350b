#pragma once

#include <stdexcept>

namespace fpv {

// Parameter/validation failures. The CLI maps these to exit code 2.
struct invalid_input : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// An exhaustive search was asked to cover more objects than its cap allows.
struct cap_exceeded : invalid_input {
    using invalid_input::invalid_input;
};

// Mathematical precondition violations (e.g. a generator that does not divide
// its modulus). The CLI maps these to exit code 3.
struct precondition_error : std::domain_error {
    using std::domain_error::domain_error;
};

// Gray-map operations refuse parameters with mu == 0: the map is not a
// bijection there and would silently lose information.
struct gray_parameter_error : precondition_error {
    using precondition_error::precondition_error;
};

} // namespace fpv
