#pragma once

namespace cyclolat::detail {

// Kahan compensated accumulator: recovers the low-order bits that a plain
// running sum drops. The verification sweeps add up to ~5*10^5 terms per m;
// the envelope margins being certified are far larger than the compensated
// error, which is what makes the strict-inequality checks meaningful.
template <class Real>
struct CompensatedSum {
    Real sum{};
    Real compensation{};

    void add(const Real& term) {
        const Real y = term - compensation;
        const Real t = sum + y;
        compensation = (t - sum) - y;
        sum = t;
    }

    CompensatedSum& operator+=(const Real& term) {
        add(term);
        return *this;
    }

    const Real& value() const { return sum; }
};

}  // namespace cyclolat::detail
