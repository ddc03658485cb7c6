#include "oracles.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <stdexcept>

namespace oracle {
namespace {

// Walks the full coefficient box [-bound, bound]^r like an odometer and
// hands every point (including zero) to visit.
template <typename Visit>
void for_each_box_point(int rank, int bound, Visit&& visit) {
    Eigen::VectorXi coeffs = Eigen::VectorXi::Constant(rank, -bound);
    for (;;) {
        visit(coeffs);
        int level = 0;
        while (level < rank && coeffs(level) == bound) coeffs(level++) = -bound;
        if (level == rank) return;
        ++coeffs(level);
    }
}

bool lex_less(const Eigen::VectorXi& a, const Eigen::VectorXi& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

}  // namespace

Eigen::VectorXd complex_unit_log(const cyclolat::Modulus& mod, std::int64_t label) {
    const auto indices = cyclolat::embedding_indices(mod);
    const auto subsets = cyclolat::gamma_subsets(mod);
    const long double angle_unit =
        2.0L * 3.14159265358979323846264338327950288L / static_cast<long double>(mod.n);
    const auto factor_magnitude = [&](std::int64_t exponent) {
        const std::int64_t reduced = exponent % mod.n;
        const std::complex<long double> root =
            std::polar(1.0L, angle_unit * static_cast<long double>(reduced));
        return std::abs(std::complex<long double>(1.0L, 0.0L) - root);
    };
    Eigen::VectorXd components(static_cast<Eigen::Index>(indices.size()));
    for (std::size_t i = 0; i < indices.size(); ++i) {
        long double acc = 0.0L;
        for (const auto& subset : subsets) {
            const std::int64_t base = (indices[i] * subset.n_I) % mod.n;
            acc += std::log(factor_magnitude((label % mod.n) * base));
            acc -= std::log(factor_magnitude(base));
        }
        components(static_cast<Eigen::Index>(i)) = static_cast<double>(2.0L * acc);
    }
    return components;
}

Eigen::VectorXd dual_row_norms(const Eigen::MatrixXd& rows) {
    const Eigen::MatrixXd gram = rows * rows.transpose();
    const Eigen::MatrixXd dual = gram.fullPivLu().solve(rows);
    return dual.rowwise().norm();
}

bool box_covers_radius(const Eigen::MatrixXd& rows, double radius, int bound) {
    const Eigen::VectorXd g = dual_row_norms(rows);
    return (g.array() * radius <= static_cast<double>(bound) - 0.5).all();
}

bool box_covers_ball(const Eigen::MatrixXd& rows, const Eigen::VectorXd& center_coords,
                     double radius, int bound) {
    const Eigen::VectorXd g = dual_row_norms(rows);
    return (center_coords.array().abs() + g.array() * radius <=
            static_cast<double>(bound) - 0.5)
        .all();
}

std::vector<BoxVector> enumerate_box(const Eigen::MatrixXd& rows, int bound, double radius_sq) {
    const int rank = static_cast<int>(rows.rows());
    if (rank > 4) throw std::invalid_argument("enumerate_box: rank too large for brute force");
    const double limit = radius_sq * (1.0 + 1e-12);
    std::vector<BoxVector> found;
    for_each_box_point(rank, bound, [&](const Eigen::VectorXi& coeffs) {
        if (coeffs.isZero()) return;
        const Eigen::VectorXd vector = rows.transpose() * coeffs.cast<double>();
        const double norm_sq = vector.squaredNorm();
        if (norm_sq <= limit) found.push_back({coeffs, vector, norm_sq});
    });
    std::sort(found.begin(), found.end(), [](const BoxVector& a, const BoxVector& b) {
        if (a.norm_sq != b.norm_sq) return a.norm_sq < b.norm_sq;
        return lex_less(a.coefficients, b.coefficients);
    });
    return found;
}

BoxVector box_shortest(const Eigen::MatrixXd& rows, int bound) {
    const double radius_sq = rows.rowwise().squaredNorm().minCoeff();
    const auto candidates = enumerate_box(rows, bound, radius_sq);
    if (candidates.empty()) throw std::logic_error("box_shortest: empty candidate set");
    return candidates.front();
}

std::vector<double> box_minima(const Eigen::MatrixXd& rows, int bound) {
    const double radius_sq = rows.rowwise().squaredNorm().maxCoeff() * (1.0 + 1e-9);
    const auto candidates = enumerate_box(rows, bound, radius_sq);
    const Eigen::Index rank = rows.rows();
    Eigen::MatrixXd chosen(rank, rows.cols());
    Eigen::Index taken = 0;
    std::vector<double> values;
    for (const auto& candidate : candidates) {
        chosen.row(taken) = candidate.vector;
        const Eigen::Index new_rank =
            chosen.topRows(taken + 1).fullPivLu().rank();
        if (new_rank == taken + 1) {
            values.push_back(std::sqrt(candidate.norm_sq));
            ++taken;
            if (taken == rank) break;
        }
    }
    if (taken != rank) throw std::logic_error("box_minima: box missed an independent witness");
    return values;
}

BoxClosest box_closest(const Eigen::MatrixXd& rows, const Eigen::VectorXd& target, int bound) {
    const int rank = static_cast<int>(rows.rows());
    if (rank > 4) throw std::invalid_argument("box_closest: rank too large for brute force");
    bool have = false;
    BoxClosest best;
    double best_sq = 0;
    for_each_box_point(rank, bound, [&](const Eigen::VectorXi& coeffs) {
        const Eigen::VectorXd vector = rows.transpose() * coeffs.cast<double>();
        const double dist_sq = (vector - target).squaredNorm();
        if (!have || dist_sq < best_sq ||
            (dist_sq == best_sq && lex_less(coeffs, best.coefficients))) {
            have = true;
            best_sq = dist_sq;
            best.coefficients = coeffs;
        }
    });
    best.distance = std::sqrt(best_sq);
    return best;
}

}  // namespace oracle
