#pragma once

#include <cstdint>
#include <vector>

namespace cyclolat {

struct PrimePower {
    std::int64_t prime = 0;
    int exponent = 0;
    std::int64_t value = 0;  // prime^exponent

    friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

// A validated cyclotomic modulus: n >= 5 and n != 2 (mod 4). The second
// condition removes duplicate fields (index 2n with n odd gives the same
// field), so every field of interest has exactly one admissible label.
struct Modulus {
    std::int64_t n = 0;
    std::vector<PrimePower> factors;  // ascending prime
    int s = 0;                        // number of distinct primes
    std::int64_t phi = 0;
    std::int64_t rank = 0;            // phi/2 - 1, rank of the unit lattice
};

// One proper subset of the prime support together with its divisor
// n_I = prod p^e over the subset and cofactor m_I = n / n_I.
struct SubsetDivisor {
    std::uint32_t mask = 0;   // bit i set <=> factors[i] in the subset
    std::int64_t n_I = 1;
    std::int64_t m_I = 0;
};

bool is_admissible(std::int64_t n) noexcept;

// Throws InvalidModulus with a message naming the violated condition.
Modulus make_modulus(std::int64_t n);

// Trial-division factorization, ascending primes. n >= 1.
std::vector<PrimePower> factorize(std::int64_t n);

std::int64_t totient(std::int64_t n);

// All proper subsets of the prime support (including the empty set),
// ordered by ascending mask. Size 2^s - 1.
std::vector<SubsetDivisor> gamma_subsets(const Modulus& mod);

// Unit labels a with 1 < a < n/2 and gcd(a, n) = 1, ascending.
// Size phi(n)/2 - 1: one generator per lattice dimension.
std::vector<std::int64_t> unit_labels(const Modulus& mod);

// Embedding representatives k with 1 <= k < n/2 and gcd(k, n) = 1,
// ascending; one per conjugate pair of complex embeddings. Size phi(n)/2.
std::vector<std::int64_t> embedding_indices(const Modulus& mod);

// Every admissible n in [5, n_max], ascending.
std::vector<std::int64_t> admissible_moduli(std::int64_t n_max);

struct TotientEntry {
    std::int64_t phi = 0;
    int distinct_primes = 0;
};

// phi(n) and the distinct-prime count for every n in [0, n_max] via a
// linear sieve; entry 0 is zero-filled and phi(1) = 1. Used by the large
// sweeps where per-n factorization would dominate.
std::vector<TotientEntry> totient_sieve(std::int64_t n_max);

}  // namespace cyclolat
