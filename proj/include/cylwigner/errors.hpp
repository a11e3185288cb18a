#pragma once

#include <stdexcept>
#include <string>

namespace cylwigner {

// Raised when a computed quantity violates a numerical contract, e.g. a
// Wigner value with a non-negligible imaginary residue or a non-finite
// integrand sample. Domain and range violations use std::domain_error and
// std::range_error.
class numeric_error : public std::runtime_error {
public:
    explicit numeric_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace cylwigner
