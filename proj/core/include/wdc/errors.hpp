#pragma once

#include <stdexcept>

namespace wdc {

// Thrown when a closed-form operation is asked about a grid outside the
// domain where its formula holds (non-uniform, not strictly unimodal, or
// not the Boolean cube, depending on the operation).
class unsupported_domain : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Thrown when an oracle computation would exceed its configured size cap.
class limit_exceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace wdc
