#include "rulelab/evaluate.hpp"

#include <ostream>
#include <stdexcept>

#include <json.hpp>

#include "rulelab/rule_io.hpp"

namespace rulelab {

bool passes(const std::string& measure, const std::optional<double>& value,
            double threshold, Comparator cmp) {
    if (!value) return false;
    bool greater_equal = cmp == Comparator::GreaterEqual;
    if (cmp == Comparator::PerMeasure)
        greater_equal =
            measure == "hyper_confidence" || measure == "hyper_confidence_sub";
    return greater_equal ? *value >= threshold : *value > threshold;
}

std::vector<Rule> filter(const std::vector<Rule>& rules,
                         const std::string& measure, double threshold,
                         double delta, Comparator cmp) {
    std::vector<Rule> out;
    for (const Rule& rule : rules) {
        if (passes(measure, compute_measure(measure, rule.counts, delta),
                   threshold, cmp))
            out.push_back(rule);
    }
    return out;
}

double bonferroni_gamma(double alpha, long long n_tests) {
    if (!(alpha >= 0.0 && alpha <= 1.0))
        throw std::invalid_argument("alpha must be in [0,1]");
    if (n_tests < 1) throw std::invalid_argument("nTests must be >= 1");
    return 1.0 - alpha / static_cast<double>(n_tests);
}

double spurious_estimate(long long n_tests, double gamma, long long n_accepted) {
    if (n_tests < 1) throw std::invalid_argument("nTests must be >= 1");
    if (n_accepted < 1) throw std::invalid_argument("nAccepted must be >= 1");
    return static_cast<double>(n_tests) * (1.0 - gamma) /
           static_cast<double>(n_accepted);
}

namespace {

std::vector<std::optional<double>> measure_values(const std::vector<Rule>& rules,
                                                  const std::string& measure,
                                                  double delta) {
    std::vector<std::optional<double>> values;
    values.reserve(rules.size());
    for (const Rule& rule : rules)
        values.push_back(compute_measure(measure, rule.counts, delta));
    return values;
}

long long count_passing(const std::vector<std::optional<double>>& values,
                        const std::string& measure, double threshold) {
    long long n = 0;
    for (const auto& value : values)
        if (passes(measure, value, threshold, Comparator::Strict)) ++n;
    return n;
}

}  // namespace

SweepCurve sweep(const std::vector<Rule>& real_rules,
                 const std::vector<Rule>& null_rules,
                 const std::string& measure,
                 const std::vector<double>& thresholds, double delta) {
    const auto real_values = measure_values(real_rules, measure, delta);
    const auto null_values = measure_values(null_rules, measure, delta);
    SweepCurve curve;
    curve.measure = measure;
    for (double threshold : thresholds) {
        curve.points.push_back({threshold,
                                count_passing(real_values, measure, threshold),
                                count_passing(null_values, measure, threshold)});
    }
    return curve;
}

std::vector<double> default_grid(const std::string& measure) {
    std::vector<double> grid;
    if (measure == "lift" || measure == "hyper_lift") {
        for (int k = 0; k <= 40; ++k) grid.push_back(1.0 + 0.05 * k);
    } else if (measure == "confidence" || measure == "support") {
        for (int k = 0; k <= 40; ++k) grid.push_back(0.025 * k);
    } else if (measure == "hyper_confidence" ||
               measure == "hyper_confidence_sub") {
        for (int k = 0; k <= 39; ++k) grid.push_back(0.5 + 0.0125 * k);
        grid.push_back(0.999);
        grid.push_back(0.9999);
    } else if (measure == "chi_square") {
        double v = 0.01;
        while (v < 1.0e5) {
            grid.push_back(v);
            v *= 1.5;
        }
    } else if (measure == "fisher_p") {
        for (int k = 0; k <= 40; ++k) grid.push_back(0.025 * k);
    } else {
        throw std::invalid_argument("unknown measure: " + measure);
    }
    return grid;
}

std::vector<PNPoint> pn_graph(const std::vector<Rule>& rules,
                              const PatternLog& log, const std::string& measure,
                              const std::vector<double>& thresholds,
                              double delta) {
    const auto values = measure_values(rules, measure, delta);
    std::vector<char> covered(rules.size());
    for (std::size_t k = 0; k < rules.size(); ++k)
        covered[k] = is_covered(rules[k], log) ? 1 : 0;
    std::vector<PNPoint> out;
    for (double threshold : thresholds) {
        PNPoint point;
        point.threshold = threshold;
        for (std::size_t k = 0; k < rules.size(); ++k) {
            if (!passes(measure, values[k], threshold, Comparator::Strict))
                continue;
            if (covered[k])
                point.p += 1.0;
            else
                point.n += 1.0;
        }
        out.push_back(point);
    }
    return out;
}

std::vector<PNPoint> average_pn(const std::vector<std::vector<PNPoint>>& runs) {
    if (runs.empty()) throw std::invalid_argument("average_pn: no runs");
    std::vector<PNPoint> out = runs.front();
    for (std::size_t r = 1; r < runs.size(); ++r) {
        if (runs[r].size() != out.size())
            throw std::invalid_argument("average_pn: mismatched grids");
        for (std::size_t k = 0; k < out.size(); ++k) {
            if (runs[r][k].threshold != out[k].threshold)
                throw std::invalid_argument("average_pn: mismatched grids");
            out[k].p += runs[r][k].p;
            out[k].n += runs[r][k].n;
        }
    }
    for (PNPoint& point : out) {
        point.p /= static_cast<double>(runs.size());
        point.n /= static_cast<double>(runs.size());
    }
    return out;
}

void write_sweep_csv(std::ostream& out, const SweepCurve& curve) {
    out << "threshold,acceptedReal,acceptedNull\n";
    for (const SweepPoint& point : curve.points) {
        out << format_number(point.threshold) << ',' << point.accepted_real
            << ',' << point.accepted_null << '\n';
    }
}

void write_pn_csv(std::ostream& out, const std::vector<PNPoint>& points) {
    out << "threshold,P,N\n";
    for (const PNPoint& point : points) {
        out << format_number(point.threshold) << ',' << format_number(point.p)
            << ',' << format_number(point.n) << '\n';
    }
}

std::string sweep_to_json(const SweepCurve& curve) {
    nlohmann::json j;
    j["measure"] = curve.measure;
    j["points"] = nlohmann::json::array();
    for (const SweepPoint& point : curve.points) {
        j["points"].push_back({{"threshold", point.threshold},
                               {"acceptedReal", point.accepted_real},
                               {"acceptedNull", point.accepted_null}});
    }
    return j.dump();
}

std::string pn_to_json(const std::vector<PNPoint>& points) {
    nlohmann::json j = nlohmann::json::array();
    for (const PNPoint& point : points) {
        j.push_back({{"threshold", point.threshold},
                     {"P", point.p},
                     {"N", point.n}});
    }
    return j.dump();
}

}  // namespace rulelab
