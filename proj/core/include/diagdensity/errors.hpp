#pragma once

#include <stdexcept>
#include <string>

namespace diagdensity {

// Thrown when a computation would exceed a configured memory or work budget.
// The message names the budget so callers can report an actionable limit.
class resource_error : public std::runtime_error {
public:
    explicit resource_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace diagdensity
