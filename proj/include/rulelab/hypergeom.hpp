#pragma once

// Exact hyper-geometric kernel. The co-occurrence count of two itemsets
// with marginal counts cX and cY in a database of m transactions follows,
// conditionally on the margins, a hyper-geometric distribution with
// support [max(0, cX+cY-m), min(cX, cY)].
//
// Terms are computed via log-gamma and tail sums are accumulated on the
// side of the mode that keeps every partial sum relatively accurate, so
// tiny tails at m in the tens of thousands come out at full double
// precision instead of underflowing or cancelling.

#include <cstdint>

namespace rulelab {

class HyperGeom {
public:
    /// cX draws from a population of m with cY marked; throws on invalid
    /// margins (negative values or cX, cY > m).
    HyperGeom(long long c_x, long long c_y, long long m);

    long long lower_bound() const { return lo_; }
    long long upper_bound() const { return hi_; }
    long long mode() const { return mode_; }

    /// P(C = r); 0 outside the support.
    double pmf(long long r) const;
    double log_pmf(long long r) const;

    /// P(C <= r).
    double cdf(long long r) const;

    /// P(C > r); accumulated directly in the upper tail when small.
    double tail_gt(long long r) const;

    /// Minimal q with P(C < q) <= delta and P(C > q) <= 1 - delta,
    /// i.e. the smallest support point whose CDF reaches delta.
    long long quantile(double delta) const;

    /// cX * cY / m (0 when m = 0).
    double expected() const;

private:
    // Sum of pmf over [lo_, r], accumulated from the largest term down.
    double lower_sum(long long r) const;
    // Sum of pmf over [r, hi_], accumulated from the largest term down.
    double upper_sum(long long r) const;

    long long c_x_, c_y_, m_;
    long long lo_, hi_, mode_;
    long double log_denom_;  // log C(m, cX)
};

}  // namespace rulelab
