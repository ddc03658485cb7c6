#pragma once

#include <Eigen/Core>
#include <cstdint>

#include "cyclolat/lattice.hpp"
#include "cyclolat/numtheory.hpp"

namespace cyclolat {

// Log-embedding vector: component_k = log|sigma_k(x)|^2 = 2 log|sigma_k(x)|,
// one component per embedding representative k (ascending), phi(n)/2 total.
struct LogVector {
    std::int64_t n = 0;
    Eigen::VectorXd components;
};

struct UnitLog {
    std::int64_t label = 0;  // the index a of xi_a
    LogVector log;
    double norm = 0;
};

// Unit vectors sum to ~0 (units have absolute norm 1); tolerance scales
// with the dimension.
inline constexpr double trace_tol_per_dim = 1e-9;

inline double trace_tolerance(const Modulus& mod) {
    return trace_tol_per_dim * static_cast<double>(mod.phi / 2);
}

// Log embedding of zeta^{-a n_I/2} - zeta^{a n_I/2}: component_k =
// 2 log|2 sin(pi k a n_I / n)|. Everything runs through this sine identity;
// complex arithmetic appears only in the test oracle. Requires gcd(a,n)=1
// and a subset divisor of n, which together keep every sine nonzero
// (DegenerateAngle otherwise).
LogVector log_sin_vector(const Modulus& mod, std::int64_t a, const SubsetDivisor& divisor);

// Log xi_a = sum over subsets I of [log_sin_vector(a, n_I) - log_sin_vector(1, n_I)];
// the root-of-unity factors of xi_a carry no magnitude. Throws OutOfRange
// for an invalid label.
UnitLog ramachandra_log(const Modulus& mod, std::int64_t label);

// Rows are Log xi_a for every label, in label order: a rank phi(n)/2 - 1
// basis in dimension phi(n)/2 (multiplicative independence of the units).
// Provenance tag "ramachandra:n=<n>".
LatticeBasis ramachandra_basis(const Modulus& mod);

}  // namespace cyclolat
