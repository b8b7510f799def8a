#pragma once

#include <stdexcept>
#include <string>

namespace amo {

class division_by_zero : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// An exact or numeric identity failed to hold.
class verification_failure : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Root isolation or another floating-point step did not meet its residual bound.
class numeric_breakdown : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class no_consistent_sign : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace amo
