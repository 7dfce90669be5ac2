#pragma once

#include <stdexcept>
#include <string>

namespace tripairs {

// Inputs that are syntactically valid but mathematically degenerate
// (u^2 = v^2, singular curve, pole of a map, ...).
struct degenerate_error : std::domain_error {
    explicit degenerate_error(const std::string& what) : std::domain_error(what) {}
};

// The pair satisfies Aa = Bb; the non-skew machinery does not apply.
struct skew_similar_error : std::domain_error {
    explicit skew_similar_error(const std::string& what) : std::domain_error(what) {}
};

// An internal guarantee failed. Must never fire on valid inputs.
struct invariant_violation : std::logic_error {
    explicit invariant_violation(const std::string& what) : std::logic_error(what) {}
};

} // namespace tripairs
