#pragma once

#include <stdexcept>
#include <string>

namespace vtrust {

/// Raised when an operation's precondition on its domain is violated:
/// unknown names, inconsistent value sets where consistency is required,
/// out-of-range indices.
class DomainError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Raised when an exhaustive search would exceed its configured bound.
class SizeLimitError : public std::length_error {
public:
    using std::length_error::length_error;
};

}  // namespace vtrust
