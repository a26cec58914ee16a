#include "rulelab/measures.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace rulelab {

void ContingencyCounts::validate() const {
    if (m < 1) throw std::invalid_argument("counts: m must be >= 1");
    if (c_x < 0 || c_y < 0 || c_x > m || c_y > m)
        throw std::invalid_argument("counts: margins out of range");
    if (c_xy < std::max<long long>(0, c_x + c_y - m) || c_xy > std::min(c_x, c_y))
        throw std::invalid_argument("counts: cXY outside feasible range");
}

double hypergeom_pmf(long long r, const ContingencyCounts& counts) {
    counts.validate();
    return counts.null_dist().pmf(r);
}

double hypergeom_tail_gt(long long r, const ContingencyCounts& counts) {
    counts.validate();
    return counts.null_dist().tail_gt(r);
}

double expected_count(const ContingencyCounts& counts) {
    counts.validate();
    return counts.null_dist().expected();
}

long long quantile(double delta, const ContingencyCounts& counts) {
    counts.validate();
    return counts.null_dist().quantile(delta);
}

std::optional<double> hyper_lift(double delta, const ContingencyCounts& counts) {
    counts.validate();
    const long long q = counts.null_dist().quantile(delta);
    if (q == 0) {
        if (counts.c_xy == 0) return std::nullopt;  // 0/0
        return std::numeric_limits<double>::infinity();
    }
    return static_cast<double>(counts.c_xy) / static_cast<double>(q);
}

double hyper_confidence(const ContingencyCounts& counts) {
    counts.validate();
    return counts.null_dist().cdf(counts.c_xy - 1);
}

double hyper_confidence_sub(const ContingencyCounts& counts) {
    counts.validate();
    return counts.null_dist().tail_gt(counts.c_xy);
}

std::optional<double> confidence(const ContingencyCounts& counts) {
    counts.validate();
    if (counts.c_x == 0) return std::nullopt;
    return static_cast<double>(counts.c_xy) / static_cast<double>(counts.c_x);
}

std::optional<double> lift(const ContingencyCounts& counts) {
    counts.validate();
    if (counts.c_x == 0 || counts.c_y == 0) return std::nullopt;
    return static_cast<double>(counts.c_xy) * static_cast<double>(counts.m) /
           (static_cast<double>(counts.c_x) * static_cast<double>(counts.c_y));
}

std::optional<double> chi_square(const ContingencyCounts& counts) {
    counts.validate();
    const double m = static_cast<double>(counts.m);
    const double row1 = static_cast<double>(counts.c_y);
    const double row0 = m - row1;
    const double col1 = static_cast<double>(counts.c_x);
    const double col0 = m - col1;
    const double observed[2][2] = {
        {m - col1 - row1 + static_cast<double>(counts.c_xy),  // X=0, Y=0
         col1 - static_cast<double>(counts.c_xy)},            // X=1, Y=0
        {row1 - static_cast<double>(counts.c_xy),             // X=0, Y=1
         static_cast<double>(counts.c_xy)},                   // X=1, Y=1
    };
    const double rows[2] = {row0, row1};
    const double cols[2] = {col0, col1};
    double stat = 0.0;
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            const double expected = rows[i] * cols[j] / m;
            if (expected == 0.0) return std::nullopt;
            const double diff = observed[i][j] - expected;
            stat += diff * diff / expected;
        }
    }
    return stat;
}

double fisher_p_value(const ContingencyCounts& counts) {
    counts.validate();
    return counts.null_dist().tail_gt(counts.c_xy - 1);
}

MeasureVector compute_measures(const ContingencyCounts& counts, double delta) {
    counts.validate();
    MeasureVector v;
    v.support = static_cast<double>(counts.c_xy) / static_cast<double>(counts.m);
    v.confidence = confidence(counts);
    v.lift = lift(counts);
    v.hyper_lift = hyper_lift(delta, counts);
    v.hyper_confidence = hyper_confidence(counts);
    v.hyper_confidence_sub = hyper_confidence_sub(counts);
    v.chi_square = chi_square(counts);
    v.fisher_p = fisher_p_value(counts);
    return v;
}

const std::vector<std::string>& measure_names() {
    static const std::vector<std::string> names = {
        "support",          "confidence",          "lift",
        "hyper_lift",       "hyper_confidence",    "hyper_confidence_sub",
        "chi_square",       "fisher_p",
    };
    return names;
}

std::optional<double> compute_measure(const std::string& name,
                                      const ContingencyCounts& counts,
                                      double delta) {
    if (name == "support")
        return static_cast<double>(counts.c_xy) / static_cast<double>(counts.m);
    if (name == "confidence") return confidence(counts);
    if (name == "lift") return lift(counts);
    if (name == "hyper_lift") return hyper_lift(delta, counts);
    if (name == "hyper_confidence") return hyper_confidence(counts);
    if (name == "hyper_confidence_sub") return hyper_confidence_sub(counts);
    if (name == "chi_square") return chi_square(counts);
    if (name == "fisher_p") return fisher_p_value(counts);
    throw std::invalid_argument("unknown measure: " + name);
}

}  // namespace rulelab
