#include "rulelab/hypergeom.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace rulelab {

namespace {

// Long double keeps the absolute error of the log terms (which reach
// ~5e5 at m ~ 50000) small enough for 1e-12-level pmf accuracy.
long double log_choose(long long n, long long k) {
    return lgammal(static_cast<long double>(n) + 1.0L) -
           lgammal(static_cast<long double>(k) + 1.0L) -
           lgammal(static_cast<long double>(n - k) + 1.0L);
}

}  // namespace

HyperGeom::HyperGeom(long long c_x, long long c_y, long long m)
    : c_x_(c_x), c_y_(c_y), m_(m) {
    if (m < 0 || c_x < 0 || c_y < 0 || c_x > m || c_y > m)
        throw std::invalid_argument("HyperGeom: invalid margins");
    lo_ = std::max<long long>(0, c_x + c_y - m);
    hi_ = std::min(c_x, c_y);
    mode_ = std::clamp((c_x + 1) * (c_y + 1) / (m + 2), lo_, hi_);
    log_denom_ = log_choose(m, c_x);
}

double HyperGeom::log_pmf(long long r) const {
    if (r < lo_ || r > hi_) return -HUGE_VAL;
    return static_cast<double>(log_choose(c_y_, r) +
                               log_choose(m_ - c_y_, c_x_ - r) - log_denom_);
}

double HyperGeom::pmf(long long r) const {
    if (r < lo_ || r > hi_) return 0.0;
    return static_cast<double>(expl(log_choose(c_y_, r) +
                                    log_choose(m_ - c_y_, c_x_ - r) -
                                    log_denom_));
}

double HyperGeom::lower_sum(long long r) const {
    r = std::min(r, hi_);
    if (r < lo_) return 0.0;
    // Terms grow towards the mode, so starting at r and walking down
    // adds them in decreasing order.
    double term = pmf(r);
    double sum = term;
    for (long long i = r; i > lo_; --i) {
        const double num = static_cast<double>(i) *
                           static_cast<double>(m_ - c_y_ - c_x_ + i);
        const double den = static_cast<double>(c_y_ - i + 1) *
                           static_cast<double>(c_x_ - i + 1);
        term *= num / den;
        if (term <= sum * 1e-18) break;
        sum += term;
    }
    return sum;
}

double HyperGeom::upper_sum(long long r) const {
    r = std::max(r, lo_);
    if (r > hi_) return 0.0;
    double term = pmf(r);
    double sum = term;
    for (long long i = r; i < hi_; ++i) {
        const double num = static_cast<double>(c_y_ - i) *
                           static_cast<double>(c_x_ - i);
        const double den = static_cast<double>(i + 1) *
                           static_cast<double>(m_ - c_y_ - c_x_ + i + 1);
        term *= num / den;
        if (term <= sum * 1e-18) break;
        sum += term;
    }
    return sum;
}

double HyperGeom::cdf(long long r) const {
    if (r < lo_) return 0.0;
    if (r >= hi_) return 1.0;
    if (r < mode_) return lower_sum(r);
    return 1.0 - upper_sum(r + 1);
}

double HyperGeom::tail_gt(long long r) const {
    if (r < lo_) return 1.0;
    if (r >= hi_) return 0.0;
    if (r < mode_) return 1.0 - lower_sum(r);
    return upper_sum(r + 1);
}

long long HyperGeom::quantile(double delta) const {
    if (!(delta > 0.0 && delta < 1.0))
        throw std::invalid_argument("quantile: delta must be in (0,1)");
    // Ascending scan of the CDF, accelerated by bisection; the computed
    // cdf is non-decreasing (adjacent values differ by a pmf term that
    // dominates the summation noise of the shared tail sums).
    long long l = lo_, h = hi_;
    while (l < h) {
        const long long mid = l + (h - l) / 2;
        if (cdf(mid) >= delta)
            h = mid;
        else
            l = mid + 1;
    }
    if (!(cdf(l) >= delta && cdf(l - 1) <= delta))
        throw std::logic_error("quantile: no admissible support point");
    return l;
}

double HyperGeom::expected() const {
    if (m_ == 0) return 0.0;
    return static_cast<double>(c_x_) * static_cast<double>(c_y_) /
           static_cast<double>(m_);
}

}  // namespace rulelab
