#pragma once

/**
 * @file errors.hpp
 * @brief Exception types shared across the library.
 */

#include <stdexcept>

namespace qsplit {

/// An input that would describe a degenerate field extension, e.g. generators
/// of a multiquadratic field whose subset product is a perfect square.
struct degenerate_field_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// An input outside the hypotheses required by a classification rule, e.g. a
/// Hilbert class field whose degree over its base is not an odd prime.
struct hypothesis_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

} // namespace qsplit
