#pragma once

#include <stdexcept>
#include <string>

namespace distortion {

// Two quadratic scalars (or matrices over them) from different fields Q(sqrt d).
class DiscriminantMismatch : public std::invalid_argument {
public:
    DiscriminantMismatch(int lhs, int rhs)
        : std::invalid_argument("discriminant mismatch: sqrt(" + std::to_string(lhs) +
                                ") vs sqrt(" + std::to_string(rhs) + ")") {}
};

class DimensionMismatch : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Raised when an inverse is requested for a non-invertible scalar or matrix.
class SingularError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

class InvalidDescriptor : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class ParseError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

}  // namespace distortion
