#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <vector>

#include <cyclolat/numtheory.hpp>

// Independent ground-truth generators for the test suite. Everything here
// deliberately avoids the library's own computational paths: the unit
// embedding is recomputed with complex arithmetic, and the lattice queries
// are answered by exhaustive search over integer coefficient boxes whose
// sufficiency is proved from dual-basis norms before use.
namespace oracle {

// Log embedding of xi_label from first principles: component_k =
// 2 log|sigma_k(xi_a)| with |sigma_k(xi_a)| = prod_I |1 - w^{k a n_I}| /
// |1 - w^{k n_I}|, w = exp(2 pi i / n), evaluated in long double complex
// arithmetic. One component per embedding representative, ascending.
Eigen::VectorXd complex_unit_log(const cyclolat::Modulus& mod, std::int64_t label);

// Norms g_i of the dual basis rows (G^{-1} B with G = B B^T). For any
// lattice vector v = B^T x the coefficients obey |x_i| <= g_i ||v||, and
// for any target t in span(B) with coordinates c, |x_i - c_i| <= g_i ||B^T x - t||.
Eigen::VectorXd dual_row_norms(const Eigen::MatrixXd& rows);

// True if every lattice vector of norm <= radius provably has all
// coefficients in [-bound, bound] (with half a unit of slack to spare).
bool box_covers_radius(const Eigen::MatrixXd& rows, double radius, int bound);

// Same guarantee for a ball of the given radius around the point with real
// coefficient coordinates center_coords.
bool box_covers_ball(const Eigen::MatrixXd& rows, const Eigen::VectorXd& center_coords,
                     double radius, int bound);

struct BoxVector {
    Eigen::VectorXi coefficients;
    Eigen::VectorXd vector;
    double norm_sq = 0;
};

// Every nonzero lattice vector with coefficients in [-bound, bound]^r and
// squared norm <= radius_sq (plus a relative slack of 1e-12), sorted by
// (norm_sq, coefficients).
std::vector<BoxVector> enumerate_box(const Eigen::MatrixXd& rows, int bound, double radius_sq);

// Shortest nonzero vector by exhaustive box search.
BoxVector box_shortest(const Eigen::MatrixXd& rows, int bound);

// All successive minima by exhaustive search and greedy extraction of
// linearly independent witnesses in (norm, lex) order.
std::vector<double> box_minima(const Eigen::MatrixXd& rows, int bound);

struct BoxClosest {
    Eigen::VectorXi coefficients;
    double distance = 0;
};

// Closest lattice point to an in-span target by exhaustive search; exact
// ties resolve to the lexicographically smallest coefficient vector.
BoxClosest box_closest(const Eigen::MatrixXd& rows, const Eigen::VectorXd& target, int bound);

}  // namespace oracle
