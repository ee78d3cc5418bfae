#pragma once

#include <stdexcept>

namespace qa {

// A value that exists mathematically but is out of reach of the current
// algorithms (for instance a braid image that would leave U^+ letter by letter).
struct NotComputable : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace qa
