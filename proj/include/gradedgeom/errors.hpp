#pragma once

#include <stdexcept>
#include <string>

namespace gg {

// A filtration-degree precondition failed (e.g. rees_make with deg(f) < i).
struct DegreeViolation : std::runtime_error {
    explicit DegreeViolation(const std::string &msg) : std::runtime_error(msg) {}
};

// A jet truncation order is too small to decide an order-of-vanishing claim.
struct UndecidableAtTruncation : std::runtime_error {
    explicit UndecidableAtTruncation(const std::string &msg) : std::runtime_error(msg) {}
};

} // namespace gg
