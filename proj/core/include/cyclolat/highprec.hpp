#pragma once

// Opt-in extended-precision mode (50 significant digits) for regenerating
// fixture values. Header-only so the core library never links Boost; include
// this only where the extra precision is actually needed.

#include <boost/math/constants/constants.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>
#include <cstdint>
#include <vector>

#include "cyclolat/detail/formulas.hpp"
#include "cyclolat/errors.hpp"
#include "cyclolat/numtheory.hpp"

namespace cyclolat::detail {

template <>
struct constants<boost::multiprecision::cpp_bin_float_50> {
    using Real = boost::multiprecision::cpp_bin_float_50;
    static Real pi() { return boost::math::constants::pi<Real>(); }
    static Real ln2() { return boost::math::constants::ln_two<Real>(); }
};

}  // namespace cyclolat::detail

namespace cyclolat::highprec {

using Real = boost::multiprecision::cpp_bin_float_50;

inline Real lemma2_sum(std::int64_t m) {
    if (m < 2) throw OutOfRange("lemma2_sum: m must be >= 2");
    return detail::half_sine_log_sum<Real>(m);
}

inline Real lemma2_lower(std::int64_t m) { return detail::envelope_lower<Real>(m); }
inline Real lemma2_upper(std::int64_t m) { return detail::envelope_upper<Real>(m); }

inline Real lemma3_bound(std::int64_t n, std::int64_t n_I) {
    return detail::factor_bound<Real>(n, Real(n_I));
}

inline Real lemma4_bound(std::int64_t n, int s) { return detail::unit_norm_bound<Real>(n, s); }

inline Real lemma5_phi_upper(std::int64_t n, int s) { return detail::totient_upper<Real>(n, s); }

inline Real bound_old_sqrt3(std::int64_t n, int s) {
    return detail::prior_radius_bound<Real>(n, s, true);
}

inline Real bound_old_sqrt6(std::int64_t n, int s) {
    return detail::prior_radius_bound<Real>(n, s, false);
}

inline Real bound_new(std::int64_t n, int s) { return detail::improved_radius_bound<Real>(n, s); }

inline Real bound_corollary(std::int64_t n, int s) {
    return detail::coarse_radius_bound<Real>(n, s);
}

// 2 log|2 sin(pi t / n)|: one log-embedding component at angle index t.
inline Real log_sin_component(std::int64_t n, std::int64_t t) {
    using std::log;
    const Real s = detail::sin_pi_ratio<Real>(t, n);
    return 2 * log(2 * s);
}

// Extended-precision Log xi_a, for cross-checking the double-precision path.
inline std::vector<Real> ramachandra_components(const Modulus& mod, std::int64_t label) {
    const auto ks = embedding_indices(mod);
    const auto subsets = gamma_subsets(mod);
    std::vector<Real> out(ks.size(), Real(0));
    for (const auto& d : subsets) {
        for (std::size_t i = 0; i < ks.size(); ++i) {
            out[i] += log_sin_component(mod.n, label * d.n_I * ks[i]) -
                      log_sin_component(mod.n, d.n_I * ks[i]);
        }
    }
    return out;
}

}  // namespace cyclolat::highprec
