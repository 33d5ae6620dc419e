#pragma once

#include <stdexcept>
#include <string>

namespace fgva {

// Base for all library errors.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct ParseError : Error {
    using Error::Error;
};
// Divisor is zero modulo its own precision; no leading coefficient identifiable.
struct DivisionByIndeterminate : Error {
    using Error::Error;
};
// Requested combination of inputs leaves an empty or insufficient known window.
struct PrecisionExhausted : Error {
    using Error::Error;
};
struct DomainViolation : Error {
    using Error::Error;
};
// Integral of a series with an x^-1 term.
struct ResidueObstruction : Error {
    using Error::Error;
};
struct ZeroDenominator : Error {
    using Error::Error;
};
struct ConventionMismatch : Error {
    using Error::Error;
};
// A substitution would need infinitely many contributions to one output coefficient.
struct UnboundedPrincipalPart : Error {
    using Error::Error;
};
struct GroupMismatch : Error {
    using Error::Error;
};
// A state-space product escapes the configured degree/weight cap.
struct OverflowBeyondCap : Error {
    using Error::Error;
};
struct IncompatiblePair : Error {
    using Error::Error;
};
struct BasisExplosion : Error {
    using Error::Error;
};
struct UsageError : Error {
    using Error::Error;
};

}  // namespace fgva
