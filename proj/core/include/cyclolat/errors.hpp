#pragma once

#include <stdexcept>
#include <string>

namespace cyclolat {

// Base class for every error this library throws on purpose. Catching
// cyclolat::Error separates domain failures from genuine logic_errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Modulus outside the admissible set {n >= 5, n != 2 (mod 4)}. The message
// always names the violated condition.
struct InvalidModulus final : Error {
    using Error::Error;
};

// Scalar argument outside an operation's stated domain (bad unit label,
// m < 2, precision out of bounds, ...).
struct OutOfRange final : Error {
    using Error::Error;
};

// Second argument of the per-factor norm bound is not a divisor of n in
// the accepted range.
struct BadDivisor final : Error {
    using Error::Error;
};

// A sine factor evaluated to zero: some k*a*n_I hit a multiple of n, which
// the coprimality preconditions are supposed to exclude.
struct DegenerateAngle final : Error {
    using Error::Error;
};

// Numerical rank of a supposed basis fell short of the row count.
struct RankDeficient final : Error {
    using Error::Error;
};

// Enumeration walked past its node budget; results would be partial.
struct BudgetExceeded final : Error {
    using Error::Error;
};

// Exact covering radius requested above the supported rank.
struct RankTooLarge final : Error {
    using Error::Error;
};

// A Voronoi coset kept multiple minima beyond sign even after the
// confirmation perturbation; the message names the class index.
struct DegenerateClass final : Error {
    using Error::Error;
};

}  // namespace cyclolat
