// Acceptance suite: nine binding criteria, one [PASS]/[FAIL] line each.
// Every tolerance is pinned here or in cyclolat/reference.hpp; the exit code
// is the number of failed criteria. Run it through ctest or directly.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdarg>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include <cyclolat/bounds.hpp>
#include <cyclolat/embedding.hpp>
#include <cyclolat/lattice.hpp>
#include <cyclolat/numtheory.hpp>
#include <cyclolat/reference.hpp>
#include <cyclolat/sweeps.hpp>

#include "oracles.hpp"

namespace {

using namespace cyclolat;

std::string fmt(const char* pattern, ...) {
    char buffer[512];
    va_list args;
    va_start(args, pattern);
    std::vsnprintf(buffer, sizeof buffer, pattern, args);
    va_end(args);
    return buffer;
}

struct Outcome {
    bool pass = true;
    std::vector<std::string> details;

    void fail(std::string line) {
        pass = false;
        details.push_back(std::move(line));
    }
    void note(std::string line) { details.push_back(std::move(line)); }
};

int worker_count() {
    return static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
}

void report_violations(Outcome& out, const SweepOutcome& sweep, std::size_t limit = 3) {
    for (std::size_t i = 0; i < sweep.violations.size() && i < limit; ++i) {
        const SweepViolation& v = sweep.violations[i];
        out.note(fmt("  %s: %s (%s)", v.input.c_str(), v.observed.c_str(),
                     v.relation.c_str()));
    }
    if (sweep.violations.size() > limit)
        out.note(fmt("  ... and %zu more", sweep.violations.size() - limit));
}

LatticeBasis integer_basis(int r) {
    return make_basis(Eigen::MatrixXd::Identity(r, r));
}

LatticeBasis hexagonal_basis() {
    Eigen::MatrixXd rows(2, 2);
    rows << 1.0, 0.0, 0.5, std::sqrt(3.0) / 2.0;
    return make_basis(std::move(rows));
}

LatticeBasis checkerboard_basis() {
    Eigen::MatrixXd rows(4, 4);
    rows << 1, -1, 0, 0, 0, 1, -1, 0, 0, 0, 1, -1, 0, 0, 1, 1;
    return make_basis(rows.cast<double>());
}

// 1. Published bound columns, sqrt3 variant vs old and the improved bound vs
//    new, within the printed-rounding tolerances.
void criterion_bound_columns(Outcome& out) {
    for (const ReferenceRow& row : reference_table) {
        const double old_value = bound_old(row.n, row.s, OldBoundVariant::sqrt3);
        const double new_value = bound_new(row.n, row.s);
        if (std::abs(old_value - row.bound_old) > reference_tol_old)
            out.fail(fmt("n=%lld: old bound %.6f vs published %.2f (tol %.2f)",
                         static_cast<long long>(row.n), old_value, row.bound_old,
                         reference_tol_old));
        if (std::abs(new_value - row.bound_new) > reference_tol_new)
            out.fail(fmt("n=%lld: new bound %.6f vs published %.2f (tol %.2f)",
                         static_cast<long long>(row.n), new_value, row.bound_new,
                         reference_tol_new));
    }
}

// 2. Published covering radii: the exact squared radius of each unit lattice
//    against the printed cell; the flagged row is informational above a floor.
void criterion_covering_radii(Outcome& out) {
    for (const ReferenceRow& row : reference_table) {
        const CoveringRadiusResult cover =
            covering_radius_exact(ramachandra_basis(make_modulus(row.n)));
        const double mu_sq = cover.value * cover.value;
        if (row.mu_sq_informational) {
            out.note(fmt("note: n=%lld computed mu=%.6f (mu^2=%.6f) vs published cell "
                         "%.1f -- informational, the generated subgroup may sit at "
                         "index > 1",
                         static_cast<long long>(row.n), cover.value, mu_sq, row.mu_sq));
            if (cover.value < reference_mu_floor_n15)
                out.fail(fmt("n=%lld: mu=%.6f fell below the %.2f floor",
                             static_cast<long long>(row.n), cover.value,
                             reference_mu_floor_n15));
        } else if (std::abs(mu_sq - row.mu_sq) > reference_tol_mu_sq) {
            out.fail(fmt("n=%lld: mu^2=%.6f vs published %.1f (tol %.2f)",
                         static_cast<long long>(row.n), mu_sq, row.mu_sq,
                         reference_tol_mu_sq));
        }
    }
}

// 3. Sandwich envelope around the half-spectrum sum, dense to 1e4 plus 300
//    log-spaced points up to 1e6.
void criterion_sandwich_sweep(Outcome& out) {
    const SweepOutcome sweep = lemma2_sweep(10'000, 300, worker_count());
    if (!sweep.clean()) {
        out.fail(fmt("%zu violations over %s (checked %lld)", sweep.violations.size(),
                     sweep.range.c_str(), static_cast<long long>(sweep.checked)));
        report_violations(out, sweep);
    }
}

// 4. Dominance sweeps: every per-factor log vector under lemma3_bound for
//    admissible n <= 200, and every unit log under lemma4_bound for
//    admissible n <= 300.
void criterion_dominance_sweeps(Outcome& out) {
    const int jobs = worker_count();
    const SweepOutcome per_factor = lemma3_dominance_sweep(200, jobs);
    const SweepOutcome unit_norm = lemma4_dominance_sweep(300, jobs);

    if (!per_factor.clean()) {
        out.fail(fmt("per-factor dominance: %zu violations over %s (checked %lld)",
                     per_factor.violations.size(), per_factor.range.c_str(),
                     static_cast<long long>(per_factor.checked)));
        std::size_t shared = 0;
        for (const SweepViolation& v : per_factor.violations)
            if (v.input.find("n=185") != std::string::npos &&
                v.input.find("n_I=5") != std::string::npos)
                ++shared;
        if (shared == per_factor.violations.size())
            out.note(fmt("  all %zu violations share n=185, n_I=5: the vector norm "
                         "there exceeds the per-factor bound for every label",
                         shared));
        report_violations(out, per_factor);
    }
    if (!unit_norm.clean()) {
        out.fail(fmt("unit-norm dominance: %zu violations over %s (checked %lld)",
                     unit_norm.violations.size(), unit_norm.range.c_str(),
                     static_cast<long long>(unit_norm.checked)));
        report_violations(out, unit_norm);
    } else if (!per_factor.clean()) {
        out.note(fmt("  unit-norm dominance is clean: checked %lld over %s",
                     static_cast<long long>(unit_norm.checked),
                     unit_norm.range.c_str()));
    }
}

// 5. Totient upper bound with equality exactly at primes, n up to 1e5.
void criterion_totient_bound(Outcome& out) {
    const SweepOutcome sweep = phibound_sweep(100'000, worker_count());
    if (!sweep.clean()) {
        out.fail(fmt("%zu violations over %s (checked %lld)", sweep.violations.size(),
                     sweep.range.c_str(), static_cast<long long>(sweep.checked)));
        report_violations(out, sweep);
    }
}

// 6. Covering radius versus minima: mu <= (sqrt r / 2) lambda_r + 1e-6 on
//    every fixture lattice (unit lattices of rank <= 5 for n <= 30, plus the
//    named reference lattices).
void criterion_covering_vs_minima(Outcome& out) {
    std::vector<std::pair<std::string, LatticeBasis>> fixtures;
    fixtures.emplace_back("Z^2", integer_basis(2));
    fixtures.emplace_back("Z^3", integer_basis(3));
    fixtures.emplace_back("Z^4", integer_basis(4));
    fixtures.emplace_back("A2", hexagonal_basis());
    fixtures.emplace_back("D4", checkerboard_basis());
    for (const std::int64_t n : admissible_moduli(30)) {
        const Modulus mod = make_modulus(n);
        if (mod.rank <= 5)
            fixtures.emplace_back(fmt("units n=%lld", static_cast<long long>(n)),
                                  ramachandra_basis(mod));
    }
    for (const auto& [name, basis] : fixtures) {
        const double rank = static_cast<double>(basis.rank());
        const double last_minimum = successive_minima(basis).values.back();
        const double mu = covering_radius_exact(basis).value;
        const double ceiling = std::sqrt(rank) / 2.0 * last_minimum + 1e-6;
        if (mu > ceiling)
            out.fail(fmt("%s: mu=%.9f exceeds (sqrt(%d)/2) lambda_r + 1e-6 = %.9f",
                         name.c_str(), mu, static_cast<int>(rank), ceiling));
    }
}

// 7. Engine oracles: closed-form covering radii, plus shortest/minima/closest
//    agreement with exhaustive box search on 50 seeded random bases.
void criterion_engine_oracles(Outcome& out) {
    const auto check_exact = [&](const char* name, const LatticeBasis& basis,
                                 double expected) {
        const double mu = covering_radius_exact(basis).value;
        if (std::abs(mu - expected) > 1e-9)
            out.fail(fmt("%s: mu=%.12f vs %.12f (tol 1e-9)", name, mu, expected));
    };
    check_exact("Z^2", integer_basis(2), std::sqrt(2.0) / 2.0);
    check_exact("Z^3", integer_basis(3), std::sqrt(3.0) / 2.0);
    check_exact("Z^4", integer_basis(4), std::sqrt(4.0) / 2.0);
    check_exact("A2", hexagonal_basis(), 1.0 / std::sqrt(3.0));

    std::mt19937_64 rng(20260814);
    std::uniform_int_distribution<int> entry(-4, 4);
    std::uniform_real_distribution<double> coord(-0.5, 0.5);
    int accepted = 0;
    while (accepted < 50) {
        const int rank = 1 + static_cast<int>(rng() % 3);
        Eigen::MatrixXd rows(rank, rank);
        for (int i = 0; i < rank; ++i)
            for (int j = 0; j < rank; ++j) rows(i, j) = entry(rng);
        if (rows.fullPivLu().rank() < rank) continue;
        const double outer_radius = rows.rowwise().norm().maxCoeff() * (1.0 + 1e-9);
        if (!oracle::box_covers_radius(rows, outer_radius, 6)) continue;

        Eigen::VectorXd coords(rank);
        for (int i = 0; i < rank; ++i) coords(i) = coord(rng);
        const Eigen::VectorXd target = rows.transpose() * coords;
        Eigen::VectorXd rounded = coords;
        for (int i = 0; i < rank; ++i) rounded(i) = std::round(coords(i));
        const double babai_distance = (rows.transpose() * (coords - rounded)).norm();
        if (!oracle::box_covers_ball(rows, coords, babai_distance, 6)) continue;

        ++accepted;
        const LatticeBasis basis = make_basis(rows);
        const std::string tag = fmt("random basis #%d (rank %d)", accepted, rank);

        const ShortestVectorResult shortest = shortest_vector(basis);
        const double expected_shortest = std::sqrt(oracle::box_shortest(rows, 6).norm_sq);
        if (std::abs(shortest.norm - expected_shortest) > 1e-9)
            out.fail(fmt("%s: shortest %.12f vs box %.12f", tag.c_str(), shortest.norm,
                         expected_shortest));
        if ((rows.transpose() * shortest.coefficients.cast<double>() - shortest.vector)
                .norm() > 1e-9)
            out.fail(fmt("%s: shortest witness does not match its coefficients",
                         tag.c_str()));

        const std::vector<double> expected_minima = oracle::box_minima(rows, 6);
        const SuccessiveMinimaResult minima = successive_minima(basis);
        if (minima.values.size() != expected_minima.size()) {
            out.fail(fmt("%s: %zu minima vs box %zu", tag.c_str(), minima.values.size(),
                         expected_minima.size()));
        } else {
            for (std::size_t i = 0; i < expected_minima.size(); ++i)
                if (std::abs(minima.values[i] - expected_minima[i]) > 1e-9)
                    out.fail(fmt("%s: minimum %zu is %.12f vs box %.12f", tag.c_str(),
                                 i + 1, minima.values[i], expected_minima[i]));
        }

        const oracle::BoxClosest expected_closest = oracle::box_closest(rows, target, 6);
        const ClosestVectorResult closest = closest_vector(basis, target);
        if (std::abs(closest.distance - expected_closest.distance) > 1e-9)
            out.fail(fmt("%s: closest distance %.12f vs box %.12f", tag.c_str(),
                         closest.distance, expected_closest.distance));
    }
}

// 8. Factorization identity between the improved bound and its two factors,
//    to 1e-12 relative error for every admissible n <= 1e4.
void criterion_bound_identity(Outcome& out) {
    const SweepOutcome sweep = bound_identity_sweep(10'000, 1e-12, worker_count());
    if (!sweep.clean()) {
        out.fail(fmt("%zu violations over %s (checked %lld)", sweep.violations.size(),
                     sweep.range.c_str(), static_cast<long long>(sweep.checked)));
        report_violations(out, sweep);
    }
}

// 9. Unit-log integrity: trace residual at most 1e-9 per dimension and
//    componentwise agreement with the complex-arithmetic oracle to 1e-9,
//    for every label of every admissible n <= 50.
void criterion_unit_integrity(Outcome& out) {
    std::size_t violations = 0;
    for (const std::int64_t n : admissible_moduli(50)) {
        const Modulus mod = make_modulus(n);
        const double trace_tol = trace_tolerance(mod);
        for (const std::int64_t label : unit_labels(mod)) {
            const UnitLog unit = ramachandra_log(mod, label);
            const double trace = std::abs(unit.log.components.sum());
            const Eigen::VectorXd expected = oracle::complex_unit_log(mod, label);
            const double deviation =
                (unit.log.components - expected).cwiseAbs().maxCoeff();
            if (trace > trace_tol || deviation > 1e-9) {
                ++violations;
                if (violations <= 5)
                    out.fail(fmt("n=%lld a=%lld: trace residual %.3e (tol %.3e), "
                                 "oracle deviation %.3e (tol 1e-9)",
                                 static_cast<long long>(n),
                                 static_cast<long long>(label), trace, trace_tol,
                                 deviation));
            }
        }
    }
    if (violations > 5) out.note(fmt("  ... and %zu more", violations - 5));
}

struct Criterion {
    int number;
    const char* title;
    double budget_seconds;  // 0 means no runtime requirement
    std::function<void(Outcome&)> run;
};

}  // namespace

int main() {
    const std::vector<Criterion> criteria{
        {1, "published bound columns reproduced", 1.0, criterion_bound_columns},
        {2, "published covering radii reproduced", 30.0, criterion_covering_radii},
        {3, "sandwich envelope sweep is violation-free", 120.0, criterion_sandwich_sweep},
        {4, "dominance sweeps are violation-free", 120.0, criterion_dominance_sweeps},
        {5, "totient bound sweep with equality at primes", 10.0, criterion_totient_bound},
        {6, "covering radius obeys the minima ceiling", 0.0, criterion_covering_vs_minima},
        {7, "engine matches closed forms and box search", 0.0, criterion_engine_oracles},
        {8, "bound factorization identity to 1e-12", 0.0, criterion_bound_identity},
        {9, "unit logs trace-free and oracle-exact", 0.0, criterion_unit_integrity},
    };

    int failures = 0;
    for (const Criterion& criterion : criteria) {
        Outcome outcome;
        const auto start = std::chrono::steady_clock::now();
        try {
            criterion.run(outcome);
        } catch (const std::exception& error) {
            outcome.fail(fmt("unexpected exception: %s", error.what()));
        }
        const double elapsed =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
                .count();
        if (criterion.budget_seconds > 0 && elapsed > criterion.budget_seconds)
            outcome.fail(fmt("runtime %.2f s exceeded the %.0f s budget", elapsed,
                             criterion.budget_seconds));
        std::printf("[%s] criterion %d: %s (%.2f s)\n", outcome.pass ? "PASS" : "FAIL",
                    criterion.number, criterion.title, elapsed);
        for (const std::string& line : outcome.details)
            std::printf("    %s\n", line.c_str());
        if (!outcome.pass) ++failures;
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures,
                criteria.size());
    return failures;
}
