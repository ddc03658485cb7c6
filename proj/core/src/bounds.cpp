#include "cyclolat/bounds.hpp"

#include <string>

#include "cyclolat/detail/formulas.hpp"
#include "cyclolat/errors.hpp"

namespace cyclolat {

double lemma2_sum(std::int64_t m) {
    if (m < 2) throw OutOfRange("lemma2_sum: m must be >= 2, got " + std::to_string(m));
    return detail::half_sine_log_sum<double>(m);
}

Envelope lemma2_envelope(std::int64_t m) {
    if (m < 2) throw OutOfRange("lemma2_envelope: m must be >= 2, got " + std::to_string(m));
    return {detail::envelope_lower<double>(m), detail::envelope_upper<double>(m)};
}

Lemma2Record lemma2_record(std::int64_t m) {
    const auto env = lemma2_envelope(m);
    return {m, lemma2_sum(m), env.lower, env.upper};
}

double lemma3_bound(std::int64_t n, std::int64_t n_I) {
    if (n_I < 1 || n_I >= n || n % n_I != 0)
        throw BadDivisor("lemma3_bound: n_I must be a proper divisor of n, got n_I=" +
                         std::to_string(n_I) + " for n=" + std::to_string(n));
    return detail::factor_bound<double>(n, static_cast<double>(n_I));
}

double lemma3_bound_formula(std::int64_t n, double n_I) {
    return detail::factor_bound<double>(n, n_I);
}

double lemma4_bound(std::int64_t n, int s) {
    if (n < 5 || s < 1)
        throw OutOfRange("lemma4_bound: need n >= 5 and s >= 1");
    return detail::unit_norm_bound<double>(n, s);
}

double lemma5_phi_upper(std::int64_t n, int s) {
    if (n < 2 || s < 1)
        throw OutOfRange("lemma5_phi_upper: need n >= 2 and s >= 1");
    return detail::totient_upper<double>(n, s);
}

double bound_old(std::int64_t n, int s, OldBoundVariant variant) {
    return detail::prior_radius_bound<double>(n, s, variant == OldBoundVariant::sqrt3);
}

double bound_new(std::int64_t n, int s) {
    return detail::improved_radius_bound<double>(n, s);
}

double bound_corollary(std::int64_t n, int s) {
    return detail::coarse_radius_bound<double>(n, s);
}

BoundReport make_bound_report(const Modulus& mod) {
    BoundReport report;
    report.n = mod.n;
    report.s = mod.s;
    report.phi = mod.phi;
    report.rank = mod.rank;
    report.bound_old_sqrt3 = bound_old(mod.n, mod.s, OldBoundVariant::sqrt3);
    report.bound_old_sqrt6 = bound_old(mod.n, mod.s, OldBoundVariant::sqrt6);
    report.bound_new = bound_new(mod.n, mod.s);
    report.bound_corollary = bound_corollary(mod.n, mod.s);
    report.lemma4 = lemma4_bound(mod.n, mod.s);
    report.lemma5_phi_upper = lemma5_phi_upper(mod.n, mod.s);
    return report;
}

}  // namespace cyclolat
