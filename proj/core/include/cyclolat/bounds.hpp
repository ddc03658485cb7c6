#pragma once

#include <cstdint>

#include "cyclolat/numtheory.hpp"

namespace cyclolat {

// S(m) = sum_{k=1}^{floor(m/2)} ln^2(2 sin(pi k/m)), compensated summation.
// Throws OutOfRange for m < 2.
double lemma2_sum(std::int64_t m);

struct Envelope {
    double lower = 0;
    double upper = 0;
};

// Proven envelope pi^2 m/24 - 2.45 - ln^2 m < S(m) < pi^2 m/24 + ln^2 2.
Envelope lemma2_envelope(std::int64_t m);

struct Lemma2Record {
    std::int64_t m = 0;
    double sum = 0;
    double lower = 0;
    double upper = 0;

    bool sandwiched() const { return lower < sum && sum < upper; }
};

Lemma2Record lemma2_record(std::int64_t m);

// Upper bound on the log-vector norm of one unit factor, parameterized by
// the subset divisor n_I. Throws BadDivisor unless n_I divides n with
// 1 <= n_I < n.
double lemma3_bound(std::int64_t n, std::int64_t n_I);

// Same radicand with the divisor as a free real; no divisibility check.
// Exists so the monotonicity assertions can probe non-divisor points.
double lemma3_bound_formula(std::int64_t n, double n_I);

// Upper bound on ||Log xi_a|| for any valid label a.
double lemma4_bound(std::int64_t n, int s);

// n(1 - n^{-1/s})^s >= phi(n), with equality exactly at primes.
double lemma5_phi_upper(std::int64_t n, int s);

enum class OldBoundVariant { sqrt3, sqrt6 };

// The prior covering-radius bound n(2^s - 1)c; both printed constants are
// exposed, and the reference-table comparison uses sqrt3.
double bound_old(std::int64_t n, int s, OldBoundVariant variant);

// The improved covering-radius bound (closed form).
double bound_new(std::int64_t n, int s);

// The cruder corollary form n(2^s - 1)(1 - n^{-1/s})^{s/2} sqrt(1.303).
double bound_corollary(std::int64_t n, int s);

struct BoundReport {
    std::int64_t n = 0;
    int s = 0;
    std::int64_t phi = 0;
    std::int64_t rank = 0;
    double bound_old_sqrt3 = 0;
    double bound_old_sqrt6 = 0;
    double bound_new = 0;
    double bound_corollary = 0;
    double lemma4 = 0;
    double lemma5_phi_upper = 0;
};

BoundReport make_bound_report(const Modulus& mod);

}  // namespace cyclolat
