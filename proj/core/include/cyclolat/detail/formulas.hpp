#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>

#include "cyclolat/detail/accumulate.hpp"

// Formula kernels shared by the double-precision API (bounds.cpp) and the
// extended-precision fixture mode (highprec.hpp). Templated on the real type
// so both paths evaluate the same expressions.

namespace cyclolat::detail {

template <class Real>
struct constants {
    static Real pi() { return Real(std::numbers::pi_v<double>); }
    static Real ln2() { return Real(std::numbers::ln2_v<double>); }
};

template <>
struct constants<double> {
    static double pi() { return std::numbers::pi; }
    static double ln2() { return std::numbers::ln2; }
};

template <class Real>
Real ln2_sq() {
    const Real l = constants<Real>::ln2();
    return l * l;
}

// sin(pi * k / m) with the argument folded into [0, 1/2] before scaling by
// pi: keeps the sine argument small where sin is well conditioned, instead
// of cancelling inside sin near multiples of pi.
template <class Real>
Real sin_pi_ratio(std::int64_t k, std::int64_t m) {
    using std::sin;
    std::int64_t r = k % m;
    if (r < 0) r += m;
    if (2 * r > m) r = m - r;  // sin(pi (m-r)/m) = sin(pi r/m)
    return sin(constants<Real>::pi() * Real(r) / Real(m));
}

// S(m) = sum_{k=1}^{floor(m/2)} ln^2(2 sin(pi k/m)), compensated.
template <class Real>
Real half_sine_log_sum(std::int64_t m) {
    using std::log;
    CompensatedSum<Real> acc;
    for (std::int64_t k = 1; 2 * k <= m; ++k) {
        const Real t = log(Real(2) * sin_pi_ratio<Real>(k, m));
        acc += t * t;
    }
    return acc.value();
}

template <class Real>
Real envelope_lower(std::int64_t m) {
    using std::log;
    const Real pi = constants<Real>::pi();
    const Real lm = log(Real(m));
    return pi * pi * Real(m) / 24 - Real(2.45) - lm * lm;
}

template <class Real>
Real envelope_upper(std::int64_t m) {
    const Real pi = constants<Real>::pi();
    return pi * pi * Real(m) / 24 + ln2_sq<Real>();
}

// Radicand of the per-factor norm bound, with the divisor as a free real so
// the monotonicity-in-n_I assertions can probe between divisors.
template <class Real>
Real factor_bound_radicand(std::int64_t n, Real n_I) {
    const Real pi = constants<Real>::pi();
    const Real l2 = ln2_sq<Real>();
    return pi * pi * Real(n) / 24 + Real(9) / 2 * l2 + Real(3) / 2 * l2 * n_I +
           Real(3) * pi * pi / 24 * (Real(n) / n_I);
}

template <class Real>
Real factor_bound(std::int64_t n, Real n_I) {
    using std::sqrt;
    return sqrt(factor_bound_radicand<Real>(n, n_I));
}

// Norm bound on a full unit log vector: one empty-subset term plus 2^s - 2
// nonempty-subset terms, each at its worst divisor.
template <class Real>
Real unit_norm_bound(std::int64_t n, int s) {
    using std::sqrt;
    const Real pi = constants<Real>::pi();
    const Real l2 = ln2_sq<Real>();
    const Real nonempty = sqrt(Real(5) * pi * pi * Real(n) / 48 + Real(15) / 2 * l2);
    const Real empty = sqrt(pi * pi * Real(n) / 6 + Real(6) * l2);
    const Real count = Real((std::int64_t{1} << s) - 2);
    return 2 * (count * nonempty + empty);
}

// n(1 - n^{-1/s})^s. For s = 1 this is n - 1 exactly; special-casing keeps
// the equality-at-primes property an exact integer fact instead of a
// rounding coincidence.
template <class Real>
Real totient_upper(std::int64_t n, int s) {
    using std::pow;
    if (s == 1) return Real(n - 1);
    const Real root = pow(Real(n), Real(-1) / Real(s));
    return Real(n) * pow(Real(1) - root, Real(s));
}

template <class Real>
Real prior_radius_bound(std::int64_t n, int s, bool tight_constant) {
    using std::sqrt;
    const Real c = tight_constant ? sqrt(Real(3)) : sqrt(Real(6));
    return Real(n) * Real((std::int64_t{1} << s) - 1) * c;
}

// The improved covering-radius bound, evaluated from its printed closed
// form. The algebraic identity with sqrt(totient_upper/2) * unit_norm_bound/2
// is asserted separately in tests, never substituted here.
template <class Real>
Real improved_radius_bound(std::int64_t n, int s) {
    using std::pow;
    using std::sqrt;
    const Real pi = constants<Real>::pi();
    const Real l2 = ln2_sq<Real>();
    const Real root = pow(Real(n), Real(-1) / Real(s));
    const Real shrink = pow(Real(1) - root, Real(s) / 2);
    const Real nonempty = sqrt(Real(5) * pi * pi * Real(n) / 48 + Real(15) / 2 * l2);
    const Real empty = sqrt(pi * pi * Real(n) / 6 + Real(6) * l2);
    const Real count = Real((std::int64_t{1} << s) - 2);
    return sqrt(Real(n) / 2) * shrink * (count * nonempty + empty);
}

template <class Real>
Real coarse_radius_bound(std::int64_t n, int s) {
    using std::pow;
    using std::sqrt;
    const Real root = pow(Real(n), Real(-1) / Real(s));
    const Real shrink = pow(Real(1) - root, Real(s) / 2);
    return Real(n) * Real((std::int64_t{1} << s) - 1) * shrink * sqrt(Real(1.303));
}

}  // namespace cyclolat::detail
