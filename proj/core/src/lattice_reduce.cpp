#include <cmath>
#include <cstdint>
#include <string>

#include "cyclolat/errors.hpp"
#include "cyclolat/lattice.hpp"

namespace cyclolat {

namespace {

struct Gso {
    Eigen::MatrixXd mu;        // strictly lower triangular coefficients
    Eigen::VectorXd star_sq;   // squared norms of the orthogonalized rows
};

Gso compute_gso(const Eigen::MatrixXd& rows) {
    const Eigen::Index r = rows.rows();
    Gso gso{Eigen::MatrixXd::Zero(r, r), Eigen::VectorXd::Zero(r)};
    Eigen::MatrixXd star = rows;
    for (Eigen::Index i = 0; i < r; ++i) {
        for (Eigen::Index j = 0; j < i; ++j) {
            gso.mu(i, j) = rows.row(i).dot(star.row(j)) / gso.star_sq(j);
            star.row(i) -= gso.mu(i, j) * star.row(j);
        }
        gso.star_sq(i) = star.row(i).squaredNorm();
        if (!(gso.star_sq(i) > 0.0))
            throw RankDeficient("lll_reduce: orthogonalization collapsed at row " +
                                std::to_string(i));
    }
    return gso;
}

}  // namespace

LllResult lll_reduce(const LatticeBasis& basis, double delta) {
    if (!(delta > 0.25 && delta < 1.0))
        throw OutOfRange("lll_reduce: delta must lie in (1/4, 1), got " + std::to_string(delta));

    Eigen::MatrixXd rows = basis.rows;
    const Eigen::Index r = rows.rows();
    using TransformMatrix = Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic>;
    TransformMatrix transform = TransformMatrix::Identity(r, r);

    Gso gso = compute_gso(rows);
    const double det_before = gso.star_sq.prod();

    // Subtracts round(mu(k,l)) times row l from row k, keeping mu current.
    const auto size_reduce_against = [&](Eigen::Index k, Eigen::Index l) {
        const double q = std::round(gso.mu(k, l));
        if (q == 0.0) return;
        const auto qi = static_cast<std::int64_t>(q);
        rows.row(k) -= q * rows.row(l);
        transform.row(k) -= qi * transform.row(l);
        for (Eigen::Index j = 0; j < l; ++j) gso.mu(k, j) -= q * gso.mu(l, j);
        gso.mu(k, l) -= q;
    };

    Eigen::Index k = 1;
    while (k < r) {
        size_reduce_against(k, k - 1);
        if (gso.star_sq(k) <
            (delta - gso.mu(k, k - 1) * gso.mu(k, k - 1)) * gso.star_sq(k - 1)) {
            rows.row(k).swap(rows.row(k - 1));
            transform.row(k).swap(transform.row(k - 1));
            // Standard constant-time update of the factorization after a swap.
            for (Eigen::Index j = 0; j + 1 < k; ++j) std::swap(gso.mu(k, j), gso.mu(k - 1, j));
            const double mu_old = gso.mu(k, k - 1);
            const double star_new = gso.star_sq(k) + mu_old * mu_old * gso.star_sq(k - 1);
            gso.mu(k, k - 1) = mu_old * gso.star_sq(k - 1) / star_new;
            gso.star_sq(k) = gso.star_sq(k - 1) * gso.star_sq(k) / star_new;
            gso.star_sq(k - 1) = star_new;
            for (Eigen::Index i = k + 1; i < r; ++i) {
                const double t = gso.mu(i, k);
                gso.mu(i, k) = gso.mu(i, k - 1) - mu_old * t;
                gso.mu(i, k - 1) = t + gso.mu(k, k - 1) * gso.mu(i, k);
            }
            k = std::max<Eigen::Index>(k - 1, 1);
        } else {
            for (Eigen::Index l = k - 2; l >= 0; --l) size_reduce_against(k, l);
            ++k;
        }
    }

    // Row operations are unimodular, so the Gram determinant is an invariant;
    // drift beyond tolerance signals accumulated floating-point damage.
    const double det_after = compute_gso(rows).star_sq.prod();
    if (std::abs(det_after - det_before) > tolerance::lll_det_rel * std::abs(det_before))
        throw Error("lll_reduce: Gram determinant drifted beyond tolerance (" +
                    basis.provenance + ")");

    return LllResult{make_basis(std::move(rows), basis.provenance), std::move(transform)};
}

}  // namespace cyclolat
