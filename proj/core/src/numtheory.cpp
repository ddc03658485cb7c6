#include "cyclolat/numtheory.hpp"

#include <numeric>
#include <string>

#include "cyclolat/errors.hpp"

namespace cyclolat {

bool is_admissible(std::int64_t n) noexcept { return n >= 5 && n % 4 != 2; }

std::vector<PrimePower> factorize(std::int64_t n) {
    if (n < 1) throw OutOfRange("factorize: n must be >= 1, got " + std::to_string(n));
    std::vector<PrimePower> factors;
    std::int64_t rest = n;
    for (std::int64_t p = 2; p * p <= rest; p += (p == 2) ? 1 : 2) {
        if (rest % p != 0) continue;
        PrimePower pp{p, 0, 1};
        while (rest % p == 0) {
            rest /= p;
            ++pp.exponent;
            pp.value *= p;
        }
        factors.push_back(pp);
    }
    if (rest > 1) factors.push_back({rest, 1, rest});
    return factors;
}

std::int64_t totient(std::int64_t n) {
    std::int64_t result = n;
    for (const auto& f : factorize(n)) result -= result / f.prime;
    return result;
}

Modulus make_modulus(std::int64_t n) {
    if (n < 5)
        throw InvalidModulus("modulus must be at least 5, got " + std::to_string(n));
    if (n % 4 == 2)
        throw InvalidModulus("modulus must not be 2 (mod 4), got " + std::to_string(n));
    Modulus mod;
    mod.n = n;
    mod.factors = factorize(n);
    mod.s = static_cast<int>(mod.factors.size());
    mod.phi = n;
    for (const auto& f : mod.factors) mod.phi -= mod.phi / f.prime;
    mod.rank = mod.phi / 2 - 1;
    return mod;
}

std::vector<SubsetDivisor> gamma_subsets(const Modulus& mod) {
    const auto s = static_cast<std::uint32_t>(mod.s);
    std::vector<SubsetDivisor> subsets;
    subsets.reserve((std::size_t{1} << s) - 1);
    // All masks except the full support: proper subsets, empty set included.
    for (std::uint32_t mask = 0; mask + 1 < (std::uint32_t{1} << s); ++mask) {
        SubsetDivisor d{mask, 1, 0};
        for (std::uint32_t i = 0; i < s; ++i)
            if (mask >> i & 1u) d.n_I *= mod.factors[i].value;
        d.m_I = mod.n / d.n_I;
        subsets.push_back(d);
    }
    return subsets;
}

std::vector<std::int64_t> unit_labels(const Modulus& mod) {
    std::vector<std::int64_t> labels;
    labels.reserve(static_cast<std::size_t>(mod.rank));
    for (std::int64_t a = 2; 2 * a < mod.n; ++a)
        if (std::gcd(a, mod.n) == 1) labels.push_back(a);
    return labels;
}

std::vector<std::int64_t> embedding_indices(const Modulus& mod) {
    std::vector<std::int64_t> indices;
    indices.reserve(static_cast<std::size_t>(mod.phi / 2));
    for (std::int64_t k = 1; 2 * k < mod.n; ++k)
        if (std::gcd(k, mod.n) == 1) indices.push_back(k);
    return indices;
}

std::vector<std::int64_t> admissible_moduli(std::int64_t n_max) {
    std::vector<std::int64_t> out;
    for (std::int64_t n = 5; n <= n_max; ++n)
        if (is_admissible(n)) out.push_back(n);
    return out;
}

std::vector<TotientEntry> totient_sieve(std::int64_t n_max) {
    std::vector<TotientEntry> table(static_cast<std::size_t>(n_max) + 1);
    if (n_max < 1) return table;
    std::vector<std::int64_t> phi(static_cast<std::size_t>(n_max) + 1);
    std::iota(phi.begin(), phi.end(), std::int64_t{0});
    for (std::int64_t p = 2; p <= n_max; ++p) {
        if (phi[static_cast<std::size_t>(p)] != p) continue;  // not prime
        for (std::int64_t m = p; m <= n_max; m += p) {
            auto& e = table[static_cast<std::size_t>(m)];
            ++e.distinct_primes;
            phi[static_cast<std::size_t>(m)] -= phi[static_cast<std::size_t>(m)] / p;
        }
    }
    for (std::int64_t n = 1; n <= n_max; ++n)
        table[static_cast<std::size_t>(n)].phi = phi[static_cast<std::size_t>(n)];
    return table;
}

}  // namespace cyclolat
