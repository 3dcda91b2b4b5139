#pragma once

#include <stdexcept>

namespace qcs {

// Valid parameters that hit degenerate data: empty discriminant window,
// degenerate regression fit, oversized resonator support.
struct DataError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace qcs
