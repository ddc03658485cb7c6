#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cyclolat/bounds.hpp"

namespace cyclolat {

// One failed check, carrying enough to reproduce it in isolation.
struct SweepViolation {
    std::string input;      // e.g. "m=185" or "n=185 a=11 n_I=5"
    std::string quantity;   // what was measured
    std::string relation;   // the expected relation
    std::string observed;   // measured vs bound values
};

struct SweepOutcome {
    std::string range;
    std::int64_t checked = 0;
    std::vector<SweepViolation> violations;
    // Wall-clock seconds. Never serialized into payload output (stdout must
    // stay byte-identical across runs); the CLI reports it on stderr.
    double elapsed = 0;

    bool clean() const { return violations.empty(); }
};

// The m-grid for the sandwich sweep: every m in [2, m_max] plus `extras`
// log-spaced values in (m_max, extra_max], deduplicated. Deterministic.
std::vector<std::int64_t> lemma2_grid(std::int64_t m_max, int extras,
                                      std::int64_t extra_max = 1'000'000);

// Checks lower(m) < S(m) < upper(m) over lemma2_grid. If rows is non-null
// it receives one Lemma2Record per m, ascending. jobs >= 1 workers;
// results are slot-indexed so the outcome is independent of scheduling.
SweepOutcome lemma2_sweep(std::int64_t m_max, int extras, int jobs,
                          std::vector<Lemma2Record>* rows = nullptr);

// Checks phi(n) <= lemma5_phi_upper(n, s) for all 2 <= n <= n_max, and that
// equality holds exactly at primes.
SweepOutcome phibound_sweep(std::int64_t n_max, int jobs);

// Checks ||log_sin_vector(a, n_I)|| < lemma3_bound(n, n_I) for every
// admissible n <= n_max, every a in {1} union unit labels, every subset
// divisor. (The unit decomposition uses both the a-indexed and the a=1
// vectors, so both are in scope.)
SweepOutcome lemma3_dominance_sweep(std::int64_t n_max, int jobs);

// Checks ||Log xi_a|| < lemma4_bound(n, s) for every admissible n <= n_max
// and every label.
SweepOutcome lemma4_dominance_sweep(std::int64_t n_max, int jobs);

// Checks the algebraic identity bound_new = sqrt(lemma5_phi_upper/2) *
// lemma4_bound/2 to rel_tol for every admissible n <= n_max.
SweepOutcome bound_identity_sweep(std::int64_t n_max, double rel_tol, int jobs);

}  // namespace cyclolat
