#pragma once

#include <array>
#include <cstdint>

namespace cyclolat {

// Published reference values for selected n: the squared covering radius of
// the unit lattice and the two radius bounds, all rounded as printed.
// mu_sq_informational marks the one row whose unit sublattice may sit at
// index > 1 inside the full unit lattice, so its mu cell is compared
// informationally rather than asserted.
struct ReferenceRow {
    std::int64_t n;
    int s;
    double mu_sq;        // printed to one decimal
    double bound_old;    // sqrt3 variant, printed to two decimals
    double bound_new;    // printed to two decimals
    bool mu_sq_informational;
};

inline constexpr std::array<ReferenceRow, 5> reference_table{{
    {7, 1, 1.4, 12.12, 6.58, false},
    {9, 1, 2.3, 15.59, 8.42, false},
    {11, 1, 5.4, 19.05, 10.25, false},
    {15, 2, 2.7, 77.94, 28.39, true},
    {16, 1, 6.3, 27.71, 14.80, false},
}};

// Comparison tolerances for reproducing the table.
inline constexpr double reference_tol_mu_sq = 0.05;   // one-decimal rounding
inline constexpr double reference_tol_old = 0.01;     // two-decimal rounding
inline constexpr double reference_tol_new = 0.02;     // two-decimal rounding
// The informational row's computed radius must still clear this floor.
inline constexpr double reference_mu_floor_n15 = 2.65;

}  // namespace cyclolat
