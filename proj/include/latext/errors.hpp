#pragma once

#include <stdexcept>
#include <string>

#include "latext/numeric.hpp"

namespace latext {

// Base for everything this library throws on purpose.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Shape mismatches: wrong sizes, m > n, empty matrices where forbidden.
struct DimensionError : Error {
    using Error::Error;
};

// Value-level precondition violations (non-coprime coefficients, bad ranges, ...).
struct DomainError : Error {
    using Error::Error;
};

// An operation that requires a primitive input got a non-primitive one.
// Carries the offending minor gcd.
struct PrimitivityError : Error {
    Int gcd;
    PrimitivityError(const std::string& msg, Int g) : Error(msg), gcd(std::move(g)) {}
};

// A pullback target was not a member of the lattice; identifies the column (1-based).
struct LatticeMembershipError : Error {
    int column;
    LatticeMembershipError(const std::string& msg, int col) : Error(msg), column(col) {}
};

// Refusal to start a computation whose instance-size guard is exceeded.
struct ResourceGuardError : Error {
    using Error::Error;
};

// Brill-Gordan pairing failed to match.
struct DualityError : Error {
    using Error::Error;
};

}  // namespace latext
