#pragma once

// Experiment protocols: threshold filtering, real-vs-null threshold
// sweeps, Bonferroni correction, spurious-rule estimation and PN graphs
// against generator ground truth.

#include <iosfwd>
#include <string>
#include <vector>

#include "rulelab/mine.hpp"
#include "rulelab/questgen.hpp"

namespace rulelab {

struct SweepPoint {
    double threshold = 0.0;
    long long accepted_real = 0;
    long long accepted_null = 0;
};

struct SweepCurve {
    std::string measure;
    std::vector<SweepPoint> points;
};

struct PNPoint {
    double threshold = 0.0;
    double p = 0.0;  // accepted rules covered by the pattern log
    double n = 0.0;  // accepted spurious rules
};

/// True when the value passes the threshold. Undefined values never
/// pass. Strict comparison everywhere except hyper-confidence (and its
/// substitutes variant), whose gamma thresholds are met-or-exceeded; the
/// comparator can be forced for protocols that need the other reading.
enum class Comparator { PerMeasure, Strict, GreaterEqual };
bool passes(const std::string& measure, const std::optional<double>& value,
            double threshold, Comparator cmp = Comparator::PerMeasure);

std::vector<Rule> filter(const std::vector<Rule>& rules,
                         const std::string& measure, double threshold,
                         double delta = kDefaultDelta,
                         Comparator cmp = Comparator::PerMeasure);

/// 1 - alpha/nTests.
double bonferroni_gamma(double alpha, long long n_tests);

/// nTests * (1 - gamma) / nAccepted.
double spurious_estimate(long long n_tests, double gamma, long long n_accepted);

/// Accepted-rule counts on the real and null side per threshold
/// (strictly-greater filtering, as in the threshold tables).
SweepCurve sweep(const std::vector<Rule>& real_rules,
                 const std::vector<Rule>& null_rules,
                 const std::string& measure,
                 const std::vector<double>& thresholds,
                 double delta = kDefaultDelta);

/// Default threshold grids: lift and hyper-lift over [1,3], confidence
/// over [0,1], hyper-confidence over [0.5,0.9999].
std::vector<double> default_grid(const std::string& measure);

std::vector<PNPoint> pn_graph(const std::vector<Rule>& rules,
                              const PatternLog& log,
                              const std::string& measure,
                              const std::vector<double>& thresholds,
                              double delta = kDefaultDelta);

/// Pointwise arithmetic mean over runs (all runs share the grid).
std::vector<PNPoint> average_pn(const std::vector<std::vector<PNPoint>>& runs);

void write_sweep_csv(std::ostream& out, const SweepCurve& curve);
void write_pn_csv(std::ostream& out, const std::vector<PNPoint>& points);
std::string sweep_to_json(const SweepCurve& curve);
std::string pn_to_json(const std::vector<PNPoint>& points);

}  // namespace rulelab
