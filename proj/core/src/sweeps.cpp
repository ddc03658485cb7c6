#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <exception>
#include <numeric>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "cyclolat/bounds.hpp"
#include "cyclolat/embedding.hpp"
#include "cyclolat/errors.hpp"
#include "cyclolat/sweeps.hpp"

namespace cyclolat {

namespace {

std::string format_value(double value) {
    char buffer[40];
    std::snprintf(buffer, sizeof(buffer), "%.17g", value);
    return buffer;
}

// Per-input result of a sweep worker; slot-indexed by input position so the
// aggregate is identical for any worker count.
struct SlotResult {
    std::int64_t checked = 0;
    std::vector<SweepViolation> violations;
};

template <class Input, class Check>
SweepOutcome run_striped(std::string range, const std::vector<Input>& inputs, int jobs,
                         Check&& check) {
    const auto start = std::chrono::steady_clock::now();
    const int workers = std::max(1, jobs);
    std::vector<SlotResult> slots(inputs.size());
    std::vector<std::exception_ptr> failures(static_cast<std::size_t>(workers));

    const auto worker = [&](int stripe) {
        try {
            for (std::size_t i = static_cast<std::size_t>(stripe); i < inputs.size();
                 i += static_cast<std::size_t>(workers))
                check(inputs[i], slots[i]);
        } catch (...) {
            failures[static_cast<std::size_t>(stripe)] = std::current_exception();
        }
    };
    if (workers == 1) {
        worker(0);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(workers));
        for (int w = 0; w < workers; ++w) pool.emplace_back(worker, w);
        for (std::thread& t : pool) t.join();
    }
    for (const std::exception_ptr& failure : failures)
        if (failure) std::rethrow_exception(failure);

    SweepOutcome outcome;
    outcome.range = std::move(range);
    for (SlotResult& slot : slots) {
        outcome.checked += slot.checked;
        outcome.violations.insert(outcome.violations.end(),
                                  std::make_move_iterator(slot.violations.begin()),
                                  std::make_move_iterator(slot.violations.end()));
    }
    outcome.elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return outcome;
}

}  // namespace

std::vector<std::int64_t> lemma2_grid(std::int64_t m_max, int extras, std::int64_t extra_max) {
    if (m_max < 2) throw OutOfRange("lemma2_grid: m_max must be >= 2, got " + std::to_string(m_max));
    if (extras < 0) throw OutOfRange("lemma2_grid: extras must be >= 0");
    std::vector<std::int64_t> grid;
    grid.reserve(static_cast<std::size_t>(m_max - 1) + static_cast<std::size_t>(extras));
    for (std::int64_t m = 2; m <= m_max; ++m) grid.push_back(m);
    if (extras > 0 && extra_max > m_max) {
        const double lg_low = std::log10(static_cast<double>(m_max + 1));
        const double lg_high = std::log10(static_cast<double>(extra_max));
        for (int i = 0; i < extras; ++i) {
            const double t = extras == 1 ? 1.0 : static_cast<double>(i) / (extras - 1);
            const auto m = static_cast<std::int64_t>(
                std::llround(std::pow(10.0, lg_low + t * (lg_high - lg_low))));
            if (m > m_max) grid.push_back(std::min(m, extra_max));
        }
        std::sort(grid.begin(), grid.end());
        grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
    }
    return grid;
}

SweepOutcome lemma2_sweep(std::int64_t m_max, int extras, int jobs,
                          std::vector<Lemma2Record>* rows) {
    const std::vector<std::int64_t> grid = lemma2_grid(m_max, extras);
    if (rows) rows->assign(grid.size(), Lemma2Record{});
    std::string range = "m in [2, " + std::to_string(m_max) + "]";
    if (extras > 0) range += " plus " + std::to_string(extras) + " log-spaced points";

    // Slot index is needed for the optional row dump, so stripe by hand.
    std::vector<std::size_t> indices(grid.size());
    std::iota(indices.begin(), indices.end(), std::size_t{0});
    return run_striped(std::move(range), indices, jobs,
                       [&](std::size_t i, SlotResult& slot) {
                           const Lemma2Record record = lemma2_record(grid[i]);
                           if (rows) (*rows)[i] = record;
                           slot.checked += 1;
                           if (!record.sandwiched())
                               slot.violations.push_back(SweepViolation{
                                   "m=" + std::to_string(record.m),
                                   "lemma2_sum(m)",
                                   "envelope_lower(m) < S(m) < envelope_upper(m)",
                                   "lower=" + format_value(record.lower) +
                                       " sum=" + format_value(record.sum) +
                                       " upper=" + format_value(record.upper)});
                       });
}

SweepOutcome phibound_sweep(std::int64_t n_max, int jobs) {
    if (n_max < 2) throw OutOfRange("phibound_sweep: n_max must be >= 2, got " +
                                    std::to_string(n_max));
    const std::vector<TotientEntry> sieve = totient_sieve(n_max);
    std::vector<std::int64_t> inputs(static_cast<std::size_t>(n_max - 1));
    std::iota(inputs.begin(), inputs.end(), std::int64_t{2});
    return run_striped("n in [2, " + std::to_string(n_max) + "]", inputs, jobs,
                       [&](std::int64_t n, SlotResult& slot) {
                           const TotientEntry entry = sieve[static_cast<std::size_t>(n)];
                           const auto phi = static_cast<double>(entry.phi);
                           const double bound = lemma5_phi_upper(n, entry.distinct_primes);
                           const bool prime = entry.phi == n - 1;
                           slot.checked += 1;
                           const bool ok = prime ? bound == phi : phi < bound;
                           if (!ok)
                               slot.violations.push_back(SweepViolation{
                                   "n=" + std::to_string(n),
                                   "phi(n)",
                                   prime ? "== lemma5_phi_upper at a prime"
                                         : "< lemma5_phi_upper at a composite",
                                   "phi=" + format_value(phi) +
                                       " bound=" + format_value(bound)});
                       });
}

SweepOutcome lemma3_dominance_sweep(std::int64_t n_max, int jobs) {
    const std::vector<std::int64_t> inputs = admissible_moduli(n_max);
    return run_striped("admissible n in [5, " + std::to_string(n_max) + "]", inputs, jobs,
                       [](std::int64_t n, SlotResult& slot) {
                           const Modulus mod = make_modulus(n);
                           std::vector<std::int64_t> scope = unit_labels(mod);
                           scope.insert(scope.begin(), 1);
                           for (const SubsetDivisor& divisor : gamma_subsets(mod)) {
                               const double bound = lemma3_bound(n, divisor.n_I);
                               for (const std::int64_t a : scope) {
                                   const double norm =
                                       log_sin_vector(mod, a, divisor).components.norm();
                                   slot.checked += 1;
                                   if (!(norm < bound))
                                       slot.violations.push_back(SweepViolation{
                                           "n=" + std::to_string(n) + " a=" + std::to_string(a) +
                                               " n_I=" + std::to_string(divisor.n_I),
                                           "||log_sin_vector(a, n_I)||",
                                           "< lemma3_bound(n, n_I)",
                                           "norm=" + format_value(norm) +
                                               " bound=" + format_value(bound)});
                               }
                           }
                       });
}

SweepOutcome lemma4_dominance_sweep(std::int64_t n_max, int jobs) {
    const std::vector<std::int64_t> inputs = admissible_moduli(n_max);
    return run_striped("admissible n in [5, " + std::to_string(n_max) + "]", inputs, jobs,
                       [](std::int64_t n, SlotResult& slot) {
                           const Modulus mod = make_modulus(n);
                           const double bound = lemma4_bound(n, mod.s);
                           for (const std::int64_t label : unit_labels(mod)) {
                               const double norm = ramachandra_log(mod, label).norm;
                               slot.checked += 1;
                               if (!(norm < bound))
                                   slot.violations.push_back(SweepViolation{
                                       "n=" + std::to_string(n) + " a=" + std::to_string(label),
                                       "||Log xi_a||",
                                       "< lemma4_bound(n, s)",
                                       "norm=" + format_value(norm) +
                                           " bound=" + format_value(bound)});
                           }
                       });
}

SweepOutcome bound_identity_sweep(std::int64_t n_max, double rel_tol, int jobs) {
    const std::vector<std::int64_t> inputs = admissible_moduli(n_max);
    return run_striped("admissible n in [5, " + std::to_string(n_max) + "]", inputs, jobs,
                       [rel_tol](std::int64_t n, SlotResult& slot) {
                           const Modulus mod = make_modulus(n);
                           const double direct = bound_new(n, mod.s);
                           const double composed =
                               std::sqrt(lemma5_phi_upper(n, mod.s) / 2.0) *
                               lemma4_bound(n, mod.s) / 2.0;
                           const double rel =
                               std::abs(direct - composed) / std::max(std::abs(direct), 1e-300);
                           slot.checked += 1;
                           if (!(rel <= rel_tol))
                               slot.violations.push_back(SweepViolation{
                                   "n=" + std::to_string(n),
                                   "bound_new vs sqrt(lemma5_phi_upper/2) * lemma4_bound/2",
                                   "relative deviation <= " + format_value(rel_tol),
                                   "direct=" + format_value(direct) +
                                       " composed=" + format_value(composed) +
                                       " rel=" + format_value(rel)});
                       });
}

}  // namespace cyclolat
