#pragma once

#include <stdexcept>
#include <string>

namespace fgc {

// Two series of different truncation orders were mixed. Orders are carried
// by the values and never silently re-truncated.
struct OrderMismatchError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// A composition / substitution argument has a nonzero constant term.
struct NonzeroConstantTermError : std::domain_error {
    using std::domain_error::domain_error;
};

// Logarithm (or reciprocal) of a series whose constant term is not 1.
struct ConstantTermNotOneError : std::domain_error {
    using std::domain_error::domain_error;
};

// Compositional inversion requires a normalized curve: c0 = 0 and c1 = 1.
struct NotNormalizedError : std::domain_error {
    using std::domain_error::domain_error;
};

// Exact division over Z failed: some integer coefficient is not a multiple
// of the divisor. Test-suite visible as a divisibility counterexample.
struct NotDivisibleError : std::domain_error {
    using std::domain_error::domain_error;
};

// A computation that must produce integer coefficients produced a proper
// fraction. Signals an implementation bug, not a data error.
struct IntegralityViolationError : std::logic_error {
    using std::logic_error::logic_error;
};

} // namespace fgc
