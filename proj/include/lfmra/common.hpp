#ifndef LFMRA_COMMON_HPP
#define LFMRA_COMMON_HPP

#include <stdexcept>
#include <string>

namespace lfmra {

struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Operands belong to different field parameter sets.
struct FieldMismatchError : Error {
    using Error::Error;
};

// Multiplicative inverse of zero, or a denominator that is not a power of p.
struct ZeroDivisionError : Error {
    using Error::Error;
};

// Malformed input: bad parent map, wrong sequence length, bad JSON, ...
struct ValidationError : Error {
    using Error::Error;
};

// A lambda table violates the telescoping-product vanishing condition.
struct MaskInvalidError : Error {
    using Error::Error;
};

} // namespace lfmra

#endif
