#pragma once

// Interest measures on 2x2 contingency counts. Undefined values
// (divisions by zero) are explicit empty optionals, never NaN.

#include <optional>
#include <string>
#include <vector>

#include "rulelab/hypergeom.hpp"

namespace rulelab {

/// The quadruple behind every measure: marginal counts of the antecedent
/// and consequent, their co-occurrence count, and the database size.
struct ContingencyCounts {
    long long c_x = 0;
    long long c_y = 0;
    long long c_xy = 0;
    long long m = 0;

    /// Throws unless 0 <= cXY, max(0,cX+cY-m) <= cXY <= min(cX,cY),
    /// cX <= m, cY <= m, m >= 1.
    void validate() const;

    HyperGeom null_dist() const { return HyperGeom(c_x, c_y, m); }
};

inline constexpr double kDefaultDelta = 0.99;

double hypergeom_pmf(long long r, const ContingencyCounts& counts);

/// P(C_XY > r) under independence.
double hypergeom_tail_gt(long long r, const ContingencyCounts& counts);

/// cX * cY / m.
double expected_count(const ContingencyCounts& counts);

/// Minimal delta-quantile of the null co-occurrence distribution.
long long quantile(double delta, const ContingencyCounts& counts);

/// cXY / Q_delta. Empty when cXY = 0 and the quantile is 0; +infinity
/// when cXY > 0 and the quantile is 0.
std::optional<double> hyper_lift(double delta, const ContingencyCounts& counts);

/// P(C_XY < cXY): probability of a smaller count under independence.
double hyper_confidence(const ContingencyCounts& counts);

/// P(C_XY > cXY): the substitutes variant.
double hyper_confidence_sub(const ContingencyCounts& counts);

/// cXY / cX; empty when cX = 0.
std::optional<double> confidence(const ContingencyCounts& counts);

/// cXY * m / (cX * cY); empty when cX = 0 or cY = 0.
std::optional<double> lift(const ContingencyCounts& counts);

/// Pearson chi-square of the 2x2 table; empty if any expected cell is 0.
std::optional<double> chi_square(const ContingencyCounts& counts);

/// One-sided p-value P(C_XY >= cXY); equals 1 - hyper_confidence.
double fisher_p_value(const ContingencyCounts& counts);

struct MeasureVector {
    double support = 0.0;
    std::optional<double> confidence;
    std::optional<double> lift;
    std::optional<double> hyper_lift;
    double hyper_confidence = 0.0;
    double hyper_confidence_sub = 0.0;
    std::optional<double> chi_square;
    double fisher_p = 0.0;
};

MeasureVector compute_measures(const ContingencyCounts& counts,
                               double delta = kDefaultDelta);

/// Names accepted by compute_measure, CSV columns and the CLI.
const std::vector<std::string>& measure_names();

/// Computes a single measure by name; throws on unknown names.
std::optional<double> compute_measure(const std::string& name,
                                      const ContingencyCounts& counts,
                                      double delta = kDefaultDelta);

}  // namespace rulelab
