#ifndef SPSLAB_ERRORS_HPP
#define SPSLAB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace spslab {

// Base class for everything thrown by this library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed or out-of-contract input: bad files, bad parameters,
// unsupported generator kinds, non-prime moduli, and the like.
class InputError : public Error {
public:
    explicit InputError(const std::string& msg) : Error(msg) {}
};

// A configured resource cap (monomial count, value bit size, chain
// degree) would be exceeded. The message carries the predicted cost.
class ResourceCapError : public Error {
public:
    explicit ResourceCapError(const std::string& msg) : Error(msg) {}
};

// A proven bound failed on a concrete instance. This is never a user
// error; it means the implementation is wrong somewhere, so callers
// should treat it as a hard fault and not continue.
class TheoremViolation : public Error {
public:
    explicit TheoremViolation(const std::string& msg) : Error(msg) {}
};

// Bounded random search for a prime exhausted its retry budget.
class PrimeSearchError : public Error {
public:
    explicit PrimeSearchError(const std::string& msg) : Error(msg) {}
};

} // namespace spslab

#endif
