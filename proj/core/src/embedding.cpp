#include "cyclolat/embedding.hpp"

#include <cmath>
#include <numeric>
#include <string>

#include "cyclolat/errors.hpp"

namespace cyclolat {

namespace {

// 2 log|2 sin(pi t / n)| with the angle folded into [0, pi/2].
double doubled_log_sine(std::int64_t t, std::int64_t n) {
    std::int64_t r = t % n;
    if (r < 0) r += n;
    if (r == 0)
        throw DegenerateAngle("log_sin_vector: sine argument hit a multiple of pi (t=" +
                              std::to_string(t) + ", n=" + std::to_string(n) + ")");
    if (2 * r > n) r = n - r;
    const double s = std::sin(std::numbers::pi * static_cast<double>(r) / static_cast<double>(n));
    return 2.0 * std::log(2.0 * s);
}

bool is_valid_label(const Modulus& mod, std::int64_t a) {
    return a > 1 && 2 * a < mod.n && std::gcd(a, mod.n) == 1;
}

}  // namespace

LogVector log_sin_vector(const Modulus& mod, std::int64_t a, const SubsetDivisor& divisor) {
    if (std::gcd(a, mod.n) != 1)
        throw OutOfRange("log_sin_vector: a must be coprime to n, got a=" + std::to_string(a) +
                         ", n=" + std::to_string(mod.n));
    const auto ks = embedding_indices(mod);
    LogVector vec;
    vec.n = mod.n;
    vec.components.resize(static_cast<Eigen::Index>(ks.size()));
    for (std::size_t i = 0; i < ks.size(); ++i)
        vec.components[static_cast<Eigen::Index>(i)] =
            doubled_log_sine(a * divisor.n_I * ks[i], mod.n);
    return vec;
}

UnitLog ramachandra_log(const Modulus& mod, std::int64_t label) {
    if (!is_valid_label(mod, label))
        throw OutOfRange("ramachandra_log: label must satisfy 1 < a < n/2 and gcd(a,n)=1, got a=" +
                         std::to_string(label) + " for n=" + std::to_string(mod.n));
    UnitLog unit;
    unit.label = label;
    unit.log.n = mod.n;
    unit.log.components = Eigen::VectorXd::Zero(mod.phi / 2);
    for (const auto& divisor : gamma_subsets(mod)) {
        unit.log.components += log_sin_vector(mod, label, divisor).components;
        unit.log.components -= log_sin_vector(mod, 1, divisor).components;
    }
    unit.norm = unit.log.components.norm();
    return unit;
}

LatticeBasis ramachandra_basis(const Modulus& mod) {
    const auto labels = unit_labels(mod);
    Eigen::MatrixXd rows(static_cast<Eigen::Index>(labels.size()), mod.phi / 2);
    for (std::size_t i = 0; i < labels.size(); ++i)
        rows.row(static_cast<Eigen::Index>(i)) = ramachandra_log(mod, labels[i]).log.components;
    // make_basis re-checks numerical rank; failure here would mean the units
    // were not multiplicatively independent, i.e. a bug, not bad input.
    return make_basis(std::move(rows), "ramachandra:n=" + std::to_string(mod.n));
}

}  // namespace cyclolat
