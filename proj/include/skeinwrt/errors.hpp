#pragma once

#include <stdexcept>
#include <string>

namespace skeinwrt {

/// Base class for all library errors.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Arithmetic on scalars from different rings (generic vs cyclotomic, or
/// different N).
struct ScalarModeMismatch : Error {
    using Error::Error;
};

/// Division by zero, inversion of a singular matrix, and similar.
struct DomainError : Error {
    using Error::Error;
};

/// specialize(): the generic expression has a pole at the chosen root of unity.
struct DenominatorVanishes : Error {
    using Error::Error;
};

/// Composing Temperley-Lieb elements on different strand counts.
struct StrandMismatch : Error {
    using Error::Error;
};

/// Jones-Wenzl idempotent does not exist at this root of unity.
struct NotDefined : Error {
    using Error::Error;
};

/// A network vertex whose incident colors are not admissible.
struct InadmissibleVertex : Error {
    using Error::Error;
};

/// Recoupling input violates parity or triangle conditions.
struct Inadmissible : Error {
    using Error::Error;
};

/// A theta in a 6j denominator vanishes at the chosen root of unity.
struct PoleAtRoot : Error {
    using Error::Error;
};

/// flip() on an edge whose endpoints coincide.
struct NonFlippableEdge : Error {
    using Error::Error;
};

/// spine_curve_operator() on a component that is not a circle of the spine.
struct IncompatibleComponent : Error {
    using Error::Error;
};

struct UnsupportedGenus : Error {
    using Error::Error;
};

/// Operation only asserted for odd N.
struct EvenN : Error {
    using Error::Error;
};

/// shadow_check(): the reduced action is not -2 * S_w. Signals a bug.
struct ShadowMismatch : Error {
    using Error::Error;
};

struct DimensionBudgetExceeded : Error {
    using Error::Error;
};

/// Network evaluation refused: total color exceeds the configured budget.
struct ColorBudgetExceeded : Error {
    using Error::Error;
};

/// Malformed spine/network/weight text input.
struct ParseError : Error {
    using Error::Error;
};

/// Internal consistency check failed; indicates a bug, not bad input.
struct InternalError : std::logic_error {
    explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

} // namespace skeinwrt
