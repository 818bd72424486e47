#ifndef FIBCLASS_ERRORS_HPP
#define FIBCLASS_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace fibclass {

// Base class for all library errors.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed input: bad parameters, parse failures, violated preconditions.
struct InvalidArgument : Error {
    explicit InvalidArgument(const std::string& msg) : Error(msg) {}
};

// Mathematically meaningless request (singular curve, illegal subgroup order,
// hypothesis of a decision procedure not met).
struct DomainError : Error {
    explicit DomainError(const std::string& msg) : Error(msg) {}
};

// A brute-force enumeration would exceed the configured cap.
struct ResourceError : Error {
    explicit ResourceError(const std::string& msg) : Error(msg) {}
};

// The requested computation is outside what the library models
// (descriptive-only class spaces, non-extendable foliations, ...).
struct UnsupportedError : Error {
    explicit UnsupportedError(const std::string& msg) : Error(msg) {}
};

} // namespace fibclass

#endif
