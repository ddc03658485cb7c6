#pragma once

// Internals shared by the enumeration-based lattice operations.  Not part of
// the installed interface.

#include <cmath>
#include <cstdint>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "cyclolat/errors.hpp"
#include "cyclolat/lattice.hpp"

namespace cyclolat::detail {

// LLL-reduced rows together with their Gram-Schmidt data and the unimodular
// map back to the caller's basis (reduced = transform * input).
struct PreparedBasis {
    Eigen::MatrixXd rows;
    Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic> transform;
    Eigen::MatrixXd mu;
    Eigen::VectorXd star_sq;
    Eigen::MatrixXd star;

    Eigen::Index rank() const { return rows.rows(); }
};

PreparedBasis prepare_for_enumeration(const LatticeBasis& basis);

// Coordinates of `point` along the orthogonalized rows plus the squared norm
// of the component outside the row span.
struct SpanDecomposition {
    Eigen::VectorXd coords;
    double residual_sq;
};

SpanDecomposition decompose_against(const PreparedBasis& prepared, const Eigen::VectorXd& point);

// Maps coefficients over the reduced rows back to the caller's basis.
Eigen::VectorXi to_input_coefficients(const PreparedBasis& prepared,
                                      const std::vector<long long>& reduced_coeffs);

// Flips the sign so the first nonzero coefficient is positive; returns true
// if a flip happened (so callers can negate the ambient vector too).
bool canonicalize_sign(std::vector<long long>& coeffs);

// Schnorr-Euchner depth-first enumeration of integer coefficient vectors y
// such that ||y * rows - target||^2 <= radius_sq, where the target is given
// in coordinates along the orthogonalized rows.  The visitor is invoked at
// every leaf inside the current radius as visitor(coeffs, dist_sq, self) and
// may tighten the radius through shrink().
template <class Visitor>
class Enumeration {
public:
    Enumeration(const PreparedBasis& prepared, Eigen::VectorXd target_coords, double radius_sq,
                std::int64_t node_cap, Visitor& visitor)
        : prepared_(prepared),
          target_(std::move(target_coords)),
          radius_sq_(radius_sq),
          node_cap_(node_cap),
          visitor_(visitor),
          coeffs_(static_cast<std::size_t>(prepared.rank()), 0) {}

    void run() { descend(static_cast<int>(prepared_.rank()) - 1, 0.0); }

    void shrink(double radius_sq) { radius_sq_ = radius_sq; }
    double radius_sq() const { return radius_sq_; }

private:
    void descend(int level, double partial) {
        double center = target_(level);
        for (std::size_t j = static_cast<std::size_t>(level) + 1; j < coeffs_.size(); ++j)
            center -= prepared_.mu(static_cast<Eigen::Index>(j), level) *
                      static_cast<double>(coeffs_[j]);
        // Zigzag order: the rounded center first, then whichever untried
        // integer is currently nearer.  Once the nearer one falls outside the
        // radius the farther one does too, so the level is exhausted.
        const long long nearest = std::llround(center);
        long long left = nearest - 1;
        long long right = nearest + 1;
        bool at_nearest = true;
        while (true) {
            long long value;
            if (at_nearest) {
                value = nearest;
                at_nearest = false;
            } else if (center - static_cast<double>(left) <=
                       static_cast<double>(right) - center) {
                value = left--;
            } else {
                value = right++;
            }
            if (++nodes_ > node_cap_)
                throw BudgetExceeded("lattice enumeration exceeded its node budget");
            const double diff = static_cast<double>(value) - center;
            const double dist_sq = partial + prepared_.star_sq(level) * diff * diff;
            if (dist_sq > radius_sq_ + 1e-12 * (1.0 + radius_sq_)) break;
            coeffs_[static_cast<std::size_t>(level)] = value;
            if (level == 0)
                visitor_(coeffs_, dist_sq, *this);
            else
                descend(level - 1, dist_sq);
        }
    }

    const PreparedBasis& prepared_;
    Eigen::VectorXd target_;
    double radius_sq_;
    std::int64_t node_cap_;
    Visitor& visitor_;
    std::vector<long long> coeffs_;
    std::int64_t nodes_ = 0;
};

}  // namespace cyclolat::detail
