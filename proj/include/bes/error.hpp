#pragma once

#include <stdexcept>
#include <string>

namespace bes {

// Raised for precondition failures: malformed inputs, out-of-range
// parameters, scale guards. The CLI maps it to exit code 1.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace bes
