#pragma once

#include <Eigen/Core>
#include <cstdint>
#include <string>
#include <vector>

namespace cyclolat {

// Row basis of a lattice: r linearly independent vectors of ambient
// dimension d >= r. Construct through make_basis, which enforces the rank
// invariant; the struct itself stays an aggregate for cheap composition.
struct LatticeBasis {
    Eigen::MatrixXd rows;     // r x d
    std::string provenance;   // free-form tag, e.g. "ramachandra:n=7"

    Eigen::Index rank() const { return rows.rows(); }
    Eigen::Index dim() const { return rows.cols(); }
};

// Validates linear independence (pivoted elimination on the Gram matrix,
// threshold 1e-8 * largest diagonal entry). Throws RankDeficient.
LatticeBasis make_basis(Eigen::MatrixXd rows, std::string provenance = {});

// Symmetric positive-definite matrix of pairwise inner products.
// Throws RankDeficient if positive definiteness fails numerically.
Eigen::MatrixXd gram(const LatticeBasis& basis);

// Numerical rank of a symmetric PSD matrix by pivoted elimination with the
// threshold policy above; shared by make_basis and the full-rank tests.
Eigen::Index gram_rank(const Eigen::MatrixXd& gram_matrix);

struct EnumerationOptions {
    // Hard cap on enumeration tree nodes; BudgetExceeded beyond it.
    std::int64_t node_cap = 100'000'000;
};

struct LllResult {
    LatticeBasis basis;
    // Integer change of basis with |det| = 1: basis.rows = transform * input.
    Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic> transform;
};

// Floating-point LLL with the Lovasz parameter delta in (1/4, 1).
LllResult lll_reduce(const LatticeBasis& basis, double delta = 0.99);

struct ShortestVectorResult {
    Eigen::VectorXd vector;
    double norm = 0;
    Eigen::VectorXi coefficients;  // w.r.t. the input basis
};

// Exact shortest nonzero vector by depth-first enumeration over the
// LLL-reduced Gram. Rank <= 12.
ShortestVectorResult shortest_vector(const LatticeBasis& basis,
                                     const EnumerationOptions& options = {});

struct SuccessiveMinimaResult {
    std::vector<double> values;              // lambda_1 <= ... <= lambda_r
    std::vector<Eigen::VectorXd> witnesses;  // independent attaining vectors
};

// All successive minima by enumerating every vector up to the max reduced
// basis norm and greedily extracting independent witnesses. Rank <= 8.
SuccessiveMinimaResult successive_minima(const LatticeBasis& basis,
                                         const EnumerationOptions& options = {});

struct ClosestVectorResult {
    Eigen::VectorXd vector;        // closest lattice point, ambient coords
    double distance = 0;           // includes any out-of-span component
    Eigen::VectorXi coefficients;
    double out_of_span = 0;        // norm of target's component off span(B)
};

// Exact closest lattice point; targets off span(B) are projected first and
// the orthogonal residual folded into the reported distance. Equidistant
// candidates resolve to the lexicographically smallest coefficient vector.
// Rank <= 8.
ClosestVectorResult closest_vector(const LatticeBasis& basis,
                                   const Eigen::VectorXd& target,
                                   const EnumerationOptions& options = {});

struct RelevantVectorsResult {
    // Full +-pair list (even size), ordered by class index then sign.
    std::vector<Eigen::VectorXd> vectors;
    // Indices (1-based, as Lambda/2Lambda class codes) of classes whose
    // minimum was tied beyond the sign pair; such classes support no facet
    // and are skipped. Kept for diagnostics.
    std::vector<std::uint32_t> degenerate_classes;
};

// Voronoi-relevant vectors via per-class minima of Lambda/2Lambda: a pair
// is relevant iff it uniquely attains its class minimum up to sign.
// Rank <= 5.
RelevantVectorsResult voronoi_relevant_vectors(const LatticeBasis& basis,
                                               const EnumerationOptions& options = {});

enum class CoveringMethod { voronoi_exact, randomized_lower_bound };

struct CoveringRadiusResult {
    double value = 0;              // Euclidean covering radius (or lower bound)
    CoveringMethod method = CoveringMethod::voronoi_exact;
    Eigen::VectorXd deep_hole;     // ambient coords, in span(B)
    double certificate = 0;        // closest_vector distance of deep_hole
};

// Exact covering radius: enumerate Voronoi-cell vertices as solutions of r
// bisector equations per r-subset of relevant vectors, keep the in-cell
// ones, take the farthest. The deep hole is re-verified by an independent
// closest-vector query. Throws RankTooLarge above rank 5.
CoveringRadiusResult covering_radius_exact(const LatticeBasis& basis,
                                           const EnumerationOptions& options = {});

// Randomized lower bound: uniform samples in the fundamental parallelepiped,
// each refined by pattern-search hill climbing on distance-to-lattice.
// Deterministic for a fixed seed.
CoveringRadiusResult covering_radius_estimate(const LatticeBasis& basis,
                                              std::int64_t samples,
                                              std::uint64_t seed,
                                              const EnumerationOptions& options = {});

namespace tolerance {

// Rank threshold: 1e-8 * largest Gram diagonal.
inline constexpr double rank_rel = 1e-8;
// Voronoi vertex in-cell slack: 1e-9 * lambda_1.
inline constexpr double vertex_rel = 1e-9;
// Deep-hole certificate agreement, absolute.
inline constexpr double certificate_abs = 1e-8;
// Singular bisector systems: pivot below 1e-10 * matrix scale.
inline constexpr double bisector_pivot_rel = 1e-10;
// Gram determinant preservation under LLL, relative.
inline constexpr double lll_det_rel = 1e-9;
// Class-minimum tie detection, relative.
inline constexpr double class_tie_rel = 1e-9;

}  // namespace tolerance

}  // namespace cyclolat
