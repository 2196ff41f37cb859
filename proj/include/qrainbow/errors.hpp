#pragma once

#include <stdexcept>
#include <string>

namespace qrainbow {

// Hilbert-space dimension exceeds the configured cap.
struct resource_error : std::runtime_error {
    explicit resource_error(const std::string& msg) : std::runtime_error(msg) {}
};

// An intermediate quantity overflowed or left the representable range.
struct numeric_range_error : std::runtime_error {
    explicit numeric_range_error(const std::string& msg) : std::runtime_error(msg) {}
};

// A design target hits a removable singularity of the closed-form recursion.
struct degenerate_target_error : std::runtime_error {
    explicit degenerate_target_error(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace qrainbow
