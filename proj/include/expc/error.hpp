#ifndef EXPC_ERROR_HPP
#define EXPC_ERROR_HPP

#include <stdexcept>
#include <string>

namespace expc {

// Base of every error thrown by the library.
class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class zero_inverse : public error {
public:
    zero_inverse() : error("inverse of zero in F_p") {}
};

class invalid_param : public error {
public:
    using error::error;
};

class zero_polynomial : public error {
public:
    explicit zero_polynomial(const std::string& what = "operation undefined for the zero polynomial")
        : error(what) {}
};

class prefix_too_short : public error {
public:
    using error::error;
};

class zero_prefix : public error {
public:
    zero_prefix() : error("prefix is all-zero") {}
};

// Raised when an exhaustive search would exceed its work budget; callers
// fall back to reporting bounds only.
class budget_exceeded : public error {
public:
    using error::error;
};

class parse_error : public error {
public:
    using error::error;
};

} // namespace expc

#endif
