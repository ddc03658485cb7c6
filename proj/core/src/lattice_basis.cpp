#include <string>

#include "cyclolat/errors.hpp"
#include "cyclolat/lattice.hpp"

namespace cyclolat {

Eigen::Index gram_rank(const Eigen::MatrixXd& gram_matrix) {
    // Symmetric pivoted elimination: pick the largest remaining diagonal
    // entry, eliminate, repeat. For a PSD matrix the diagonal dominates the
    // remaining block, so diagonal pivoting is the full-pivot choice.
    Eigen::MatrixXd g = gram_matrix;
    const Eigen::Index n = g.rows();
    const double scale = g.diagonal().maxCoeff();
    const double threshold = tolerance::rank_rel * scale;
    Eigen::Index rank = 0;
    std::vector<bool> used(static_cast<std::size_t>(n), false);
    for (Eigen::Index step = 0; step < n; ++step) {
        Eigen::Index pivot = -1;
        double best = threshold;
        for (Eigen::Index i = 0; i < n; ++i)
            if (!used[static_cast<std::size_t>(i)] && g(i, i) > best) {
                best = g(i, i);
                pivot = i;
            }
        if (pivot < 0) break;
        used[static_cast<std::size_t>(pivot)] = true;
        ++rank;
        const Eigen::VectorXd col = g.col(pivot) / g(pivot, pivot);
        for (Eigen::Index i = 0; i < n; ++i)
            if (!used[static_cast<std::size_t>(i)])
                g.row(i) -= col(i) * g.row(pivot);
    }
    return rank;
}

LatticeBasis make_basis(Eigen::MatrixXd rows, std::string provenance) {
    if (rows.rows() < 1 || rows.cols() < rows.rows())
        throw RankDeficient("make_basis: need 1 <= rank <= dimension, got " +
                            std::to_string(rows.rows()) + " x " + std::to_string(rows.cols()));
    LatticeBasis basis{std::move(rows), std::move(provenance)};
    const Eigen::MatrixXd g = basis.rows * basis.rows.transpose();
    const Eigen::Index rank = gram_rank(g);
    if (rank != basis.rank())
        throw RankDeficient("make_basis: numerical rank " + std::to_string(rank) + " < " +
                            std::to_string(basis.rank()) + " rows (" + basis.provenance + ")");
    return basis;
}

Eigen::MatrixXd gram(const LatticeBasis& basis) {
    Eigen::MatrixXd g = basis.rows * basis.rows.transpose();
    // The basis struct is an open aggregate, so re-check positive
    // definiteness here rather than trusting the caller used make_basis.
    if (gram_rank(g) != basis.rank())
        throw RankDeficient("gram: matrix is not numerically positive definite (" +
                            basis.provenance + ")");
    return g;
}

}  // namespace cyclolat
