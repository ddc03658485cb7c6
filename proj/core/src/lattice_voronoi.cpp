#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <limits>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "cyclolat/errors.hpp"
#include "cyclolat/lattice.hpp"
#include "lattice_internal.hpp"

namespace cyclolat {

namespace {

constexpr Eigen::Index max_voronoi_rank = 5;

// Minimal-norm representatives of one nonzero class of Lambda/2Lambda.
struct ClassMinimum {
    double norm_sq = 0;
    // Canonical-sign integer coefficient vectors (input basis) attaining it.
    std::vector<std::vector<long long>> attaining;
};

// The class with parity vector p is { p*B + 2*z*B : z integer }, so its
// minimum is a closest-vector problem in the doubled lattice with target
// -p*B.  `doubled` must be prepare_for_enumeration of rows scaled by two.
ClassMinimum class_minimum(const detail::PreparedBasis& doubled,
                           const std::vector<long long>& parity,
                           const Eigen::VectorXd& target,
                           const EnumerationOptions& options,
                           double extra_window_abs) {
    const detail::SpanDecomposition split = detail::decompose_against(doubled, target);

    double best_sq = std::numeric_limits<double>::max() / 4;
    bool found = false;
    auto shrink_visitor = [&](const std::vector<long long>&, double dist_sq, auto& enumeration) {
        if (found && dist_sq >= best_sq) return;
        best_sq = dist_sq;
        found = true;
        enumeration.shrink(dist_sq);
    };
    detail::Enumeration first_pass(doubled, split.coords, best_sq, options.node_cap,
                                   shrink_visitor);
    first_pass.run();

    const double window = tolerance::class_tie_rel * best_sq + extra_window_abs;
    ClassMinimum result;
    result.norm_sq = best_sq;
    auto collect_visitor = [&](const std::vector<long long>& coeffs, double dist_sq, auto&) {
        if (dist_sq > best_sq + window) return;
        const Eigen::VectorXi doubled_coeffs = detail::to_input_coefficients(doubled, coeffs);
        std::vector<long long> input_coeffs(parity.size());
        for (std::size_t i = 0; i < parity.size(); ++i)
            input_coeffs[i] = parity[i] + 2LL * doubled_coeffs(static_cast<Eigen::Index>(i));
        detail::canonicalize_sign(input_coeffs);
        if (std::find(result.attaining.begin(), result.attaining.end(), input_coeffs) ==
            result.attaining.end())
            result.attaining.push_back(std::move(input_coeffs));
    };
    detail::Enumeration second_pass(doubled, split.coords, best_sq + window, options.node_cap,
                                    collect_visitor);
    second_pass.run();
    std::sort(result.attaining.begin(), result.attaining.end());
    return result;
}

Eigen::VectorXd assemble_from_input(const LatticeBasis& basis,
                                    const std::vector<long long>& coeffs) {
    Eigen::VectorXd vector = Eigen::VectorXd::Zero(basis.dim());
    for (Eigen::Index i = 0; i < basis.rank(); ++i)
        vector += static_cast<double>(coeffs[static_cast<std::size_t>(i)]) *
                  basis.rows.row(i).transpose();
    return vector;
}

// Partially pivoted LU for the tiny bisector systems (rank <= 5 columns).
class SmallLu {
public:
    bool factor(const Eigen::MatrixXd& matrix, double pivot_threshold) {
        n_ = static_cast<int>(matrix.rows());
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j < n_; ++j) a_[i][j] = matrix(i, j);
        for (int k = 0; k < n_; ++k) {
            int pivot = k;
            for (int i = k + 1; i < n_; ++i)
                if (std::abs(a_[i][k]) > std::abs(a_[pivot][k])) pivot = i;
            if (std::abs(a_[pivot][k]) < pivot_threshold) return false;
            perm_[k] = pivot;
            if (pivot != k) std::swap(a_[pivot], a_[k]);
            for (int i = k + 1; i < n_; ++i) {
                a_[i][k] /= a_[k][k];
                for (int j = k + 1; j < n_; ++j) a_[i][j] -= a_[i][k] * a_[k][j];
            }
        }
        return true;
    }

    void solve(std::array<double, 5>& rhs) const {
        // factor() swaps whole rows, multipliers included, so the stored L is
        // the fully pivoted one: apply every interchange before eliminating.
        for (int k = 0; k < n_; ++k)
            if (perm_[k] != k) std::swap(rhs[static_cast<std::size_t>(perm_[k])],
                                         rhs[static_cast<std::size_t>(k)]);
        for (int k = 0; k < n_; ++k)
            for (int i = k + 1; i < n_; ++i)
                rhs[static_cast<std::size_t>(i)] -= a_[i][k] * rhs[static_cast<std::size_t>(k)];
        for (int i = n_ - 1; i >= 0; --i) {
            for (int j = i + 1; j < n_; ++j)
                rhs[static_cast<std::size_t>(i)] -= a_[i][j] * rhs[static_cast<std::size_t>(j)];
            rhs[static_cast<std::size_t>(i)] /= a_[i][i];
        }
    }

private:
    std::array<std::array<double, 5>, 5> a_{};
    std::array<int, 5> perm_{};
    int n_ = 0;
};

Eigen::MatrixXd thin_orthonormal_span(const LatticeBasis& basis) {
    const Eigen::Index d = basis.dim();
    const Eigen::Index r = basis.rank();
    Eigen::HouseholderQR<Eigen::MatrixXd> qr(basis.rows.transpose());
    return qr.householderQ() * Eigen::MatrixXd::Identity(d, r);
}

}  // namespace

RelevantVectorsResult voronoi_relevant_vectors(const LatticeBasis& basis,
                                               const EnumerationOptions& options) {
    if (basis.rank() > max_voronoi_rank)
        throw RankTooLarge("voronoi_relevant_vectors: rank " + std::to_string(basis.rank()) +
                           " exceeds the supported maximum " +
                           std::to_string(max_voronoi_rank));
    const Eigen::Index r = basis.rank();
    LatticeBasis doubled_basis{2.0 * basis.rows, basis.provenance};
    const detail::PreparedBasis doubled = detail::prepare_for_enumeration(doubled_basis);

    RelevantVectorsResult result;
    for (std::uint32_t code = 1; code < (1u << r); ++code) {
        std::vector<long long> parity(static_cast<std::size_t>(r), 0);
        for (Eigen::Index i = 0; i < r; ++i)
            parity[static_cast<std::size_t>(i)] = (code >> i) & 1u;
        const Eigen::VectorXd shift = assemble_from_input(basis, parity);
        ClassMinimum minimum = class_minimum(doubled, parity, -shift, options, 0.0);

        if (minimum.attaining.size() > 1) {
            // Tied beyond the sign pair: no facet.  Confirm the tie survives a
            // deterministic relative perturbation of the target before
            // trusting it (guards against enumeration artifacts).
            const double scale = std::sqrt(minimum.norm_sq);
            Eigen::VectorXd pattern(basis.dim());
            for (Eigen::Index i = 0; i < basis.dim(); ++i)
                pattern(i) = (i % 2 == 0 ? 1.0 : -1.0);
            pattern /= pattern.norm();
            const Eigen::VectorXd perturbed = -shift + (1e-10 * scale) * pattern;
            const ClassMinimum retry =
                class_minimum(doubled, parity, perturbed, options, 8e-10 * scale * scale);
            if (retry.attaining.size() < 2)
                throw DegenerateClass("voronoi_relevant_vectors: unstable tie in class " +
                                      std::to_string(code) + " (" + basis.provenance + ")");
            result.degenerate_classes.push_back(code);
            continue;
        }

        const Eigen::VectorXd plus = assemble_from_input(basis, minimum.attaining.front());
        result.vectors.push_back(plus);
        result.vectors.push_back(-plus);
    }
    return result;
}

CoveringRadiusResult covering_radius_exact(const LatticeBasis& basis,
                                           const EnumerationOptions& options) {
    if (basis.rank() > max_voronoi_rank)
        throw RankTooLarge("covering_radius_exact: rank " + std::to_string(basis.rank()) +
                           " exceeds the supported maximum " +
                           std::to_string(max_voronoi_rank));
    const Eigen::Index r = basis.rank();
    const RelevantVectorsResult relevant = voronoi_relevant_vectors(basis, options);
    const auto pair_count = static_cast<Eigen::Index>(relevant.vectors.size() / 2);
    if (pair_count < r)
        throw Error("covering_radius_exact: fewer relevant pairs than the rank (" +
                    basis.provenance + ")");

    // Work in orthonormal coordinates of the row span; every vertex of the
    // central Voronoi cell solves r bisector equations x . v = |v|^2 / 2 with
    // signs running over both halves of each chosen pair.
    const Eigen::MatrixXd q = thin_orthonormal_span(basis);
    Eigen::MatrixXd pairs(pair_count, r);
    Eigen::VectorXd half_norm_sq(pair_count);
    for (Eigen::Index j = 0; j < pair_count; ++j) {
        pairs.row(j) = (q.transpose() * relevant.vectors[static_cast<std::size_t>(2 * j)])
                           .transpose();
        half_norm_sq(j) = pairs.row(j).squaredNorm() / 2.0;
    }
    const double lambda1 = (2.0 * half_norm_sq.minCoeff() > 0)
                               ? std::sqrt(2.0 * half_norm_sq.minCoeff())
                               : 0.0;
    const double vert_tol = tolerance::vertex_rel * lambda1;

    double best_sq = -1.0;
    Eigen::VectorXd best_x;
    std::vector<Eigen::Index> subset(static_cast<std::size_t>(r));
    for (Eigen::Index i = 0; i < r; ++i) subset[static_cast<std::size_t>(i)] = i;

    Eigen::MatrixXd system(r, r);
    const auto consider_subset = [&]() {
        for (Eigen::Index k = 0; k < r; ++k)
            system.row(k) = pairs.row(subset[static_cast<std::size_t>(k)]);
        const double scale = system.cwiseAbs().maxCoeff();
        SmallLu lu;
        if (!lu.factor(system, tolerance::bisector_pivot_rel * scale)) return;
        for (std::uint32_t signs = 0; signs < (1u << r); ++signs) {
            std::array<double, 5> x{};
            for (Eigen::Index k = 0; k < r; ++k)
                x[static_cast<std::size_t>(k)] =
                    ((signs >> k) & 1u ? -1.0 : 1.0) *
                    half_norm_sq(subset[static_cast<std::size_t>(k)]);
            lu.solve(x);
            double norm_sq = 0;
            for (Eigen::Index k = 0; k < r; ++k)
                norm_sq += x[static_cast<std::size_t>(k)] * x[static_cast<std::size_t>(k)];
            if (norm_sq <= best_sq) continue;
            // In-cell test against every relevant pair, in squared form to
            // avoid square roots on the hot path.
            const double nx = std::sqrt(norm_sq);
            bool inside = true;
            for (Eigen::Index j = 0; j < pair_count && inside; ++j) {
                double dot = 0;
                for (Eigen::Index k = 0; k < r; ++k)
                    dot += x[static_cast<std::size_t>(k)] * pairs(j, k);
                const double other_sq = norm_sq - 2.0 * std::abs(dot) + 2.0 * half_norm_sq(j);
                const double slack = nx - vert_tol;
                if (slack > 0 && slack * slack > other_sq) inside = false;
            }
            if (!inside) continue;
            best_sq = norm_sq;
            best_x = Eigen::Map<const Eigen::VectorXd>(x.data(), r);
        }
    };

    // Lexicographic run over all r-subsets of the relevant pairs.
    while (true) {
        consider_subset();
        Eigen::Index i = r - 1;
        while (i >= 0 && subset[static_cast<std::size_t>(i)] == pair_count - r + i) --i;
        if (i < 0) break;
        ++subset[static_cast<std::size_t>(i)];
        for (Eigen::Index j = i + 1; j < r; ++j)
            subset[static_cast<std::size_t>(j)] = subset[static_cast<std::size_t>(j - 1)] + 1;
    }
    if (best_sq < 0)
        throw Error("covering_radius_exact: no cell vertex found (" + basis.provenance + ")");

    CoveringRadiusResult result;
    result.value = std::sqrt(best_sq);
    result.method = CoveringMethod::voronoi_exact;
    result.deep_hole = q * best_x;
    const ClosestVectorResult check = closest_vector(basis, result.deep_hole, options);
    result.certificate = check.distance;
    if (std::abs(result.certificate - result.value) > tolerance::certificate_abs)
        throw Error("covering_radius_exact: deep-hole certificate mismatch (" +
                    basis.provenance + ")");
    return result;
}

CoveringRadiusResult covering_radius_estimate(const LatticeBasis& basis, std::int64_t samples,
                                              std::uint64_t seed,
                                              const EnumerationOptions& options) {
    if (samples < 1)
        throw OutOfRange("covering_radius_estimate: need at least one sample, got " +
                         std::to_string(samples));
    const detail::PreparedBasis prepared = detail::prepare_for_enumeration(basis);
    const Eigen::Index r = prepared.rank();
    const double lambda1 = std::sqrt(prepared.rows.rowwise().squaredNorm().minCoeff());

    // In-span distance to the lattice (single shrinking enumeration pass).
    const auto distance_sq_to_lattice = [&](const Eigen::VectorXd& point) {
        const detail::SpanDecomposition split = detail::decompose_against(prepared, point);
        double best = std::numeric_limits<double>::max() / 4;
        bool found = false;
        auto visitor = [&](const std::vector<long long>&, double dist_sq, auto& enumeration) {
            if (found && dist_sq >= best) return;
            best = dist_sq;
            found = true;
            enumeration.shrink(dist_sq);
        };
        detail::Enumeration pass(prepared, split.coords, best, options.node_cap, visitor);
        pass.run();
        return best;
    };

    std::mt19937_64 rng(seed);
    const auto next_uniform = [&rng]() {
        return static_cast<double>(rng() >> 11) * 0x1.0p-53;
    };

    constexpr std::size_t refine_count = 3;
    std::vector<std::pair<double, Eigen::VectorXd>> best_samples;  // dist_sq desc
    for (std::int64_t s = 0; s < samples; ++s) {
        Eigen::VectorXd point = Eigen::VectorXd::Zero(prepared.rows.cols());
        for (Eigen::Index i = 0; i < r; ++i)
            point += next_uniform() * prepared.rows.row(i).transpose();
        const double dist_sq = distance_sq_to_lattice(point);
        if (best_samples.size() < refine_count || dist_sq > best_samples.back().first) {
            best_samples.emplace_back(dist_sq, std::move(point));
            std::sort(best_samples.begin(), best_samples.end(),
                      [](const auto& a, const auto& b) { return a.first > b.first; });
            if (best_samples.size() > refine_count) best_samples.pop_back();
        }
    }

    // Normalized orthogonalized rows span the lattice subspace; pattern
    // search along them keeps every probe inside it.
    Eigen::MatrixXd directions = prepared.star;
    for (Eigen::Index i = 0; i < r; ++i) directions.row(i).normalize();

    double best_sq = -1.0;
    Eigen::VectorXd best_point;
    for (auto& [start_sq, start] : best_samples) {
        Eigen::VectorXd current = start;
        double current_sq = start_sq;
        double step = 0.25 * lambda1;
        while (step > 1e-7 * lambda1) {
            bool improved = false;
            for (Eigen::Index k = 0; k < r && !improved; ++k) {
                for (const double sign : {1.0, -1.0}) {
                    const Eigen::VectorXd probe = current + sign * step * directions.row(k).transpose();
                    const double probe_sq = distance_sq_to_lattice(probe);
                    if (probe_sq > current_sq) {
                        current = probe;
                        current_sq = probe_sq;
                        improved = true;
                        break;
                    }
                }
            }
            if (!improved) step *= 0.5;
        }
        if (current_sq > best_sq) {
            best_sq = current_sq;
            best_point = current;
        }
    }

    CoveringRadiusResult result;
    result.value = std::sqrt(best_sq);
    result.method = CoveringMethod::randomized_lower_bound;
    result.deep_hole = best_point;
    result.certificate = closest_vector(basis, best_point, options).distance;
    return result;
}

}  // namespace cyclolat
