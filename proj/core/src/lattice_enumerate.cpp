#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "cyclolat/errors.hpp"
#include "cyclolat/lattice.hpp"
#include "lattice_internal.hpp"

namespace cyclolat {

namespace detail {

PreparedBasis prepare_for_enumeration(const LatticeBasis& basis) {
    LllResult reduced = lll_reduce(basis);
    PreparedBasis prepared;
    prepared.rows = std::move(reduced.basis.rows);
    prepared.transform = std::move(reduced.transform);
    const Eigen::Index r = prepared.rows.rows();
    prepared.mu = Eigen::MatrixXd::Zero(r, r);
    prepared.star_sq = Eigen::VectorXd::Zero(r);
    prepared.star = prepared.rows;
    for (Eigen::Index i = 0; i < r; ++i) {
        for (Eigen::Index j = 0; j < i; ++j) {
            prepared.mu(i, j) = prepared.rows.row(i).dot(prepared.star.row(j)) /
                                prepared.star_sq(j);
            prepared.star.row(i) -= prepared.mu(i, j) * prepared.star.row(j);
        }
        prepared.star_sq(i) = prepared.star.row(i).squaredNorm();
    }
    return prepared;
}

SpanDecomposition decompose_against(const PreparedBasis& prepared, const Eigen::VectorXd& point) {
    const Eigen::Index r = prepared.rank();
    SpanDecomposition result{Eigen::VectorXd::Zero(r), 0.0};
    Eigen::VectorXd residual = point;
    for (Eigen::Index i = 0; i < r; ++i) {
        result.coords(i) = point.dot(prepared.star.row(i)) / prepared.star_sq(i);
        residual -= result.coords(i) * prepared.star.row(i).transpose();
    }
    result.residual_sq = residual.squaredNorm();
    return result;
}

Eigen::VectorXi to_input_coefficients(const PreparedBasis& prepared,
                                      const std::vector<long long>& reduced_coeffs) {
    const Eigen::Index r = prepared.rank();
    Eigen::VectorXi coefficients = Eigen::VectorXi::Zero(r);
    for (Eigen::Index col = 0; col < r; ++col) {
        long long value = 0;
        for (Eigen::Index row = 0; row < r; ++row)
            value += prepared.transform(row, col) * reduced_coeffs[static_cast<std::size_t>(row)];
        coefficients(col) = static_cast<int>(value);
    }
    return coefficients;
}

bool canonicalize_sign(std::vector<long long>& coeffs) {
    for (const long long c : coeffs) {
        if (c > 0) return false;
        if (c < 0) {
            for (long long& v : coeffs) v = -v;
            return true;
        }
    }
    return false;
}

}  // namespace detail

namespace {

Eigen::VectorXd assemble(const detail::PreparedBasis& prepared,
                         const std::vector<long long>& coeffs) {
    Eigen::VectorXd vector = Eigen::VectorXd::Zero(prepared.rows.cols());
    for (Eigen::Index i = 0; i < prepared.rank(); ++i)
        vector += static_cast<double>(coeffs[static_cast<std::size_t>(i)]) *
                  prepared.rows.row(i).transpose();
    return vector;
}

bool all_zero(const std::vector<long long>& coeffs) {
    return std::all_of(coeffs.begin(), coeffs.end(), [](long long c) { return c == 0; });
}

void require_rank_at_most(const LatticeBasis& basis, Eigen::Index limit, const char* operation) {
    if (basis.rank() > limit)
        throw OutOfRange(std::string(operation) + ": rank " + std::to_string(basis.rank()) +
                         " exceeds the supported maximum " + std::to_string(limit));
}

}  // namespace

ShortestVectorResult shortest_vector(const LatticeBasis& basis, const EnumerationOptions& options) {
    require_rank_at_most(basis, 12, "shortest_vector");
    const detail::PreparedBasis prepared = detail::prepare_for_enumeration(basis);
    const Eigen::Index r = prepared.rank();

    // The shortest reduced row is both the starting radius and the incumbent.
    Eigen::Index seed_row = 0;
    double best_sq = prepared.rows.rowwise().squaredNorm().minCoeff(&seed_row);
    std::vector<long long> best(static_cast<std::size_t>(r), 0);
    best[static_cast<std::size_t>(seed_row)] = 1;

    auto visitor = [&](const std::vector<long long>& coeffs, double dist_sq, auto& enumeration) {
        if (all_zero(coeffs) || dist_sq >= best_sq) return;
        best_sq = dist_sq;
        best = coeffs;
        enumeration.shrink(dist_sq);
    };
    detail::Enumeration enumeration(prepared, Eigen::VectorXd::Zero(r), best_sq,
                                    options.node_cap, visitor);
    enumeration.run();

    detail::canonicalize_sign(best);
    ShortestVectorResult result;
    result.vector = assemble(prepared, best);
    result.norm = result.vector.norm();
    result.coefficients = detail::to_input_coefficients(prepared, best);
    return result;
}

SuccessiveMinimaResult successive_minima(const LatticeBasis& basis,
                                         const EnumerationOptions& options) {
    require_rank_at_most(basis, 8, "successive_minima");
    const detail::PreparedBasis prepared = detail::prepare_for_enumeration(basis);
    const Eigen::Index r = prepared.rank();

    // Every successive minimum is attained within the longest reduced row,
    // because the reduced rows themselves are r independent candidates.
    const double radius_sq = prepared.rows.rowwise().squaredNorm().maxCoeff() * (1.0 + 1e-9);

    std::vector<std::pair<double, std::vector<long long>>> candidates;
    auto visitor = [&](const std::vector<long long>& coeffs, double dist_sq, auto&) {
        if (all_zero(coeffs)) return;
        std::vector<long long> canonical = coeffs;
        if (detail::canonicalize_sign(canonical)) return;  // keep one of each +- pair
        candidates.emplace_back(dist_sq, std::move(canonical));
    };
    detail::Enumeration enumeration(prepared, Eigen::VectorXd::Zero(r), radius_sq,
                                    options.node_cap, visitor);
    enumeration.run();
    std::sort(candidates.begin(), candidates.end());

    SuccessiveMinimaResult result;
    Eigen::MatrixXd orthonormal(r, prepared.rows.cols());
    Eigen::Index accepted = 0;
    for (const auto& [dist_sq, coeffs] : candidates) {
        Eigen::VectorXd vector = assemble(prepared, coeffs);
        Eigen::VectorXd residual = vector;
        for (Eigen::Index i = 0; i < accepted; ++i)
            residual -= residual.dot(orthonormal.row(i)) * orthonormal.row(i).transpose();
        if (residual.norm() <= tolerance::rank_rel * vector.norm()) continue;
        orthonormal.row(accepted) = residual.transpose() / residual.norm();
        result.values.push_back(vector.norm());
        result.witnesses.push_back(std::move(vector));
        if (++accepted == r) break;
    }
    if (accepted != r)
        throw Error("successive_minima: failed to extract " + std::to_string(r) +
                    " independent witnesses (" + basis.provenance + ")");
    return result;
}

ClosestVectorResult closest_vector(const LatticeBasis& basis, const Eigen::VectorXd& target,
                                   const EnumerationOptions& options) {
    require_rank_at_most(basis, 8, "closest_vector");
    if (target.size() != basis.dim())
        throw OutOfRange("closest_vector: target dimension " + std::to_string(target.size()) +
                         " does not match basis dimension " + std::to_string(basis.dim()));
    const detail::PreparedBasis prepared = detail::prepare_for_enumeration(basis);
    const detail::SpanDecomposition split = detail::decompose_against(prepared, target);

    // First pass: shrink down to the optimal in-span distance.  The first
    // leaf the zigzag order reaches is the nearest-plane point, so an
    // effectively unbounded starting radius is tightened after r nodes.
    double best_sq = std::numeric_limits<double>::max() / 4;
    bool found = false;
    auto shrink_visitor = [&](const std::vector<long long>&, double dist_sq, auto& enumeration) {
        if (found && dist_sq >= best_sq) return;
        best_sq = dist_sq;
        found = true;
        enumeration.shrink(dist_sq);
    };
    detail::Enumeration first_pass(prepared, split.coords, best_sq, options.node_cap,
                                   shrink_visitor);
    first_pass.run();

    // Second pass: collect everything inside the tie window and keep the
    // lexicographically smallest coefficient vector over the input basis.
    const double window = 1e-12 * (1.0 + best_sq);
    bool have_choice = false;
    Eigen::VectorXi chosen_coeffs;
    std::vector<long long> chosen_reduced;
    auto collect_visitor = [&](const std::vector<long long>& coeffs, double dist_sq, auto&) {
        if (dist_sq > best_sq + window) return;
        Eigen::VectorXi input_coeffs = detail::to_input_coefficients(prepared, coeffs);
        if (!have_choice ||
            std::lexicographical_compare(input_coeffs.begin(), input_coeffs.end(),
                                         chosen_coeffs.begin(), chosen_coeffs.end())) {
            have_choice = true;
            chosen_coeffs = std::move(input_coeffs);
            chosen_reduced = coeffs;
        }
    };
    detail::Enumeration second_pass(prepared, split.coords, best_sq + window, options.node_cap,
                                    collect_visitor);
    second_pass.run();

    ClosestVectorResult result;
    result.vector = assemble(prepared, chosen_reduced);
    result.distance = (target - result.vector).norm();
    result.coefficients = std::move(chosen_coeffs);
    result.out_of_span = std::sqrt(split.residual_sq);
    return result;
}

}  // namespace cyclolat
