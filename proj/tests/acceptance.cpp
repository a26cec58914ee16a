// Acceptance suite: one pass/fail line per criterion, nonzero exit if
// any criterion fails. Conditional checks that need external data print
// SKIP and do not fail the run.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "rulelab/evaluate.hpp"
#include "rulelab/measures.hpp"
#include "rulelab/mine.hpp"
#include "rulelab/questgen.hpp"
#include "rulelab/rng.hpp"
#include "rulelab/rule_io.hpp"
#include "rulelab/simulate.hpp"

#include "oracle.hpp"

using namespace rulelab;

namespace {

int failures = 0;

void report(int criterion, bool ok, const std::string& detail) {
    std::printf("criterion %d: %s - %s\n", criterion, ok ? "PASS" : "FAIL",
                detail.c_str());
    if (!ok) ++failures;
}

void report_skip(int criterion, const std::string& detail) {
    std::printf("criterion %d: SKIP - %s\n", criterion, detail.c_str());
}

std::string fmt(const char* format, ...) {
    char buffer[512];
    va_list args;
    va_start(args, format);
    std::vsnprintf(buffer, sizeof buffer, format, args);
    va_end(args);
    return buffer;
}

// ---------------------------------------------------------------- 1
// Kernel values at cX=cY=100, m=10000 and sub-millisecond runtime.
void criterion_1() {
    const ContingencyCounts counts{100, 100, 2, 10000};
    const double expected = expected_count(counts);
    const double tail = hypergeom_tail_gt(1, counts);

    double best_us = 1e18;
    for (int rep = 0; rep < 50; ++rep) {
        const auto start = std::chrono::steady_clock::now();
        volatile double sink = hypergeom_tail_gt(1, counts);
        (void)sink;
        const auto stop = std::chrono::steady_clock::now();
        best_us = std::min(
            best_us,
            std::chrono::duration<double, std::micro>(stop - start).count());
    }

    const bool ok = expected == 1.0 && std::abs(tail - 0.264) <= 0.0005 &&
                    best_us < 1000.0;
    report(1, ok,
           fmt("expected_count=%g, P(C>1)=%.6f (want 0.264 +/- 0.0005), "
               "tail eval %.1f us",
               expected, tail, best_us));
}

// ---------------------------------------------------------------- 2
// hyper_confidence >= gamma <=> hyper_lift_delta > 1 for gamma = delta,
// exhaustively over every valid quadruple with m <= 60.
void criterion_2() {
    const double gammas[] = {0.5, 0.9, 0.99, 0.999};
    long long checked = 0, violations = 0;
    for (long long m = 1; m <= 60; ++m) {
        for (long long c_x = 0; c_x <= m; ++c_x) {
            for (long long c_y = 0; c_y <= m; ++c_y) {
                const long long lo = std::max<long long>(0, c_x + c_y - m);
                const long long hi = std::min(c_x, c_y);
                for (long long c_xy = lo; c_xy <= hi; ++c_xy) {
                    const ContingencyCounts counts{c_x, c_y, c_xy, m};
                    const double hc = hyper_confidence(counts);
                    for (const double gamma : gammas) {
                        const auto hl = hyper_lift(gamma, counts);
                        const bool lhs = hc >= gamma;
                        const bool rhs = hl.has_value() && *hl > 1.0;
                        ++checked;
                        if (lhs != rhs) ++violations;
                    }
                }
            }
        }
    }
    report(2, violations == 0,
           fmt("%lld quadruple/gamma combinations, %lld violations", checked,
               violations));
}

// ---------------------------------------------------------------- 3
// Fisher identity and pmf normalization over 1e5 random quadruples.
void criterion_3() {
    Rng rng(2024);
    double worst_identity = 0.0, worst_norm = 0.0;
    for (int trial = 0; trial < 100000; ++trial) {
        const long long m = 1 + static_cast<long long>(rng.uniform_below(50000));
        const long long c_x = static_cast<long long>(rng.uniform_below(m + 1));
        const long long c_y = static_cast<long long>(rng.uniform_below(m + 1));
        const long long lo = std::max<long long>(0, c_x + c_y - m);
        const long long hi = std::min(c_x, c_y);
        const long long c_xy =
            lo + static_cast<long long>(rng.uniform_below(hi - lo + 1));
        const ContingencyCounts counts{c_x, c_y, c_xy, m};

        worst_identity = std::max(
            worst_identity,
            std::abs(fisher_p_value(counts) - (1.0 - hyper_confidence(counts))));

        // Normalization via a mode-anchored long double recurrence; far
        // tails underflow harmlessly below the stopping threshold.
        const HyperGeom h(c_x, c_y, m);
        const long long mode = h.mode();
        long double sum = static_cast<long double>(h.pmf(mode));
        long double term = sum;
        for (long long r = mode + 1; r <= hi && term > 1e-25L; ++r) {
            term *= static_cast<long double>((c_y - r + 1)) * (c_x - r + 1) /
                    (static_cast<long double>(r) * (m - c_y - c_x + r));
            sum += term;
        }
        term = static_cast<long double>(h.pmf(mode));
        for (long long r = mode; r > lo && term > 1e-25L; --r) {
            term *= static_cast<long double>(r) * (m - c_y - c_x + r) /
                    (static_cast<long double>((c_y - r + 1)) * (c_x - r + 1));
            sum += term;
        }
        worst_norm =
            std::max(worst_norm, std::abs(static_cast<double>(sum) - 1.0));
    }
    report(3, worst_identity < 1e-12 && worst_norm < 1e-10,
           fmt("max |fisher_p - (1 - hc)| = %.3g (< 1e-12), "
               "max |sum pmf - 1| = %.3g (< 1e-10)",
               worst_identity, worst_norm));
}

// ---------------------------------------------------------------- 4
// Null calibration at Grocery scale: n=169 items, theta*t = 9825.
IndependenceModel grocery_scale_model() {
    const std::size_t n = 169;
    const double theta_t = 9825.0;
    std::vector<std::string> labels;
    std::vector<double> lambda;
    for (std::size_t i = 0; i < n; ++i) {
        labels.push_back(std::to_string(i));
        const double p = 0.1 + 0.2 * static_cast<double>(i) /
                                   static_cast<double>(n - 1);
        lambda.push_back(p * theta_t);
    }
    return IndependenceModel(theta_t, 1.0, lambda, ItemCatalog(labels));
}

void criterion_4() {
    const auto model = grocery_scale_model();
    const double n_pairs = 169.0 * 168.0;
    const double sigma = std::sqrt(0.01 * 0.99 / n_pairs);

    // Single-database acceptance rate of the hc >= 0.99 filter.
    const auto db = simulate(model, Seed{1});
    const auto rules = all_pair_rules(db);
    long long accepted = 0;
    for (const auto& rule : rules)
        if (hyper_confidence(rule.counts) >= 0.99) ++accepted;
    const double fraction =
        static_cast<double>(accepted) / static_cast<double>(rules.size());
    const bool in_band = std::abs(fraction - 0.01) <= 4.0 * sigma;

    // Bonferroni-corrected gamma accepts nothing in >= 95 of 100 seeds.
    const double gamma_b = bonferroni_gamma(0.01, static_cast<long long>(n_pairs));
    int zero_seeds = 0;
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        const auto null_db = simulate(model, Seed{seed});
        bool any = false;
        for (const auto& rule : all_pair_rules(null_db)) {
            if (hyper_confidence(rule.counts) >= gamma_b) {
                any = true;
                break;
            }
        }
        if (!any) ++zero_seeds;
    }

    report(4, in_band && zero_seeds >= 95,
           fmt("hc>=0.99 fraction %.5f (band 0.01 +/- %.5f), Bonferroni "
               "zero-acceptance in %d/100 seeds (need >= 95)",
               fraction, 4.0 * sigma, zero_seeds));
}

// ---------------------------------------------------------------- 5
// Bonferroni and spurious-estimate arithmetic.
void criterion_5() {
    const double gamma = bonferroni_gamma(0.01, 19272);
    const double rounded = std::round(gamma * 1e8) / 1e8;
    const double spurious = spurious_estimate(19272, 0.99, 3732);
    const bool ok =
        rounded == 0.99999948 && std::abs(spurious - 0.052) <= 0.001;
    report(5, ok,
           fmt("gamma = %.8f (want 0.99999948), spurious estimate %.4f "
               "(want 0.052 +/- 0.001)",
               gamma, spurious));
}

// ---------------------------------------------------------------- 6
// Real-data column counts, conditional on the Grocery basket file.
long long count_filtered(const std::vector<Rule>& rules,
                         const std::string& measure, double threshold) {
    return static_cast<long long>(
        filter(rules, measure, threshold, kDefaultDelta, Comparator::Strict)
            .size());
}

void criterion_6() {
    std::string path = "data/groceries.basket";
    if (const char* env = std::getenv("RULELAB_GROCERY")) path = env;
    if (!std::ifstream(path)) {
        report_skip(6, "Grocery basket file not found (set RULELAB_GROCERY "
                       "or provide data/groceries.basket)");
        return;
    }
    const auto db = load_basket(path);
    const auto rules =
        rules_single_consequent(db, frequent_itemsets(db, 0.001));
    const long long found = static_cast<long long>(rules.size());
    const long long lift1 = count_filtered(rules, "lift", 1.0);
    const long long lift2 = count_filtered(rules, "lift", 2.0);
    const long long hl1 = count_filtered(rules, "hyper_lift", 1.0);
    const long long hl2 = count_filtered(rules, "hyper_lift", 2.0);
    const long long hc9 = count_filtered(rules, "hyper_confidence", 0.9);
    const bool exact = found == 40943 && lift1 == 40011 && lift2 == 27334 &&
                       hl1 == 30083 && hl2 == 1563 && hc9 == 36724;

    // Null-side counts vary by seed: found rules within +/- 20% of 8685.
    const auto model = fit(db, 30.0);
    int in_band = 0;
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const auto null_db = simulate(model, Seed{seed});
        const auto null_rules = rules_single_consequent(
            null_db, frequent_itemsets(null_db, 0.001));
        const double n = static_cast<double>(null_rules.size());
        if (n >= 8685.0 * 0.8 && n <= 8685.0 * 1.2) ++in_band;
    }

    report(6, exact && in_band == 10,
           fmt("found %lld (40943), lift>1 %lld (40011), lift>2 %lld (27334), "
               "hl>1 %lld (30083), hl>2 %lld (1563), hc>0.9 %lld (36724); "
               "null-side found in +/-20%% band for %d/10 seeds",
               found, lift1, lift2, hl1, hl2, hc9, in_band));
}

// ---------------------------------------------------------------- 7
// Default generator configuration matches the published dataset stats.
void criterion_7() {
    bool ok = true;
    double avg0 = 0.0;
    std::size_t distinct0 = 0;
    for (std::uint64_t seed = 0; seed < 3; ++seed) {
        GeneratorConfig config;
        config.seed = seed;
        const auto [db, log] = generate(config);
        double cells = 0.0;
        std::set<ItemId> seen;
        for (const auto& t : db.transactions()) {
            cells += static_cast<double>(t.size());
            seen.insert(t.begin(), t.end());
        }
        const double avg = cells / static_cast<double>(db.num_transactions());
        if (seed == 0) {
            avg0 = avg;
            distinct0 = seen.size();
        }
        if (std::abs(avg - 10.10) > 0.5) ok = false;
        if (seen.size() < 783 || seen.size() > 957) ok = false;
    }
    report(7, ok,
           fmt("seed 0: avg transaction size %.3f (10.10 +/- 0.5), distinct "
               "items %zu (870 +/- 10%%); seeds 1-2 in band too",
               avg0, distinct0));
}

// ---------------------------------------------------------------- 8
// Averaged PN curves: dominance at matched N on the default grids.
double interp_p(const std::vector<PNPoint>& points, double n) {
    for (std::size_t i = 1; i < points.size(); ++i) {
        if (n <= points[i].n) {
            const double n0 = points[i - 1].n, n1 = points[i].n;
            if (n1 == n0) return std::max(points[i - 1].p, points[i].p);
            const double w = (n - n0) / (n1 - n0);
            return points[i - 1].p + w * (points[i].p - points[i - 1].p);
        }
    }
    return points.back().p;
}

// Smallest P_a(N) - P_b(N) over the sample points of both curves inside
// the shared N range (linear interpolation between samples).
double worst_margin(std::vector<PNPoint> a, std::vector<PNPoint> b) {
    const auto by_n = [](const PNPoint& x, const PNPoint& y) {
        return x.n < y.n;
    };
    std::sort(a.begin(), a.end(), by_n);
    std::sort(b.begin(), b.end(), by_n);
    const double lo = std::max(a.front().n, b.front().n);
    const double hi = std::min(a.back().n, b.back().n);
    double worst = 1e300;
    for (const auto& pt : b)
        if (pt.n >= lo && pt.n <= hi)
            worst = std::min(worst, interp_p(a, pt.n) - pt.p);
    for (const auto& pt : a)
        if (pt.n >= lo && pt.n <= hi)
            worst = std::min(worst, pt.p - interp_p(b, pt.n));
    return worst;
}

void criterion_8() {
    const std::vector<std::string> measures = {"hyper_confidence", "chi_square",
                                               "lift", "confidence"};
    std::map<std::string, std::vector<std::vector<PNPoint>>> runs;
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        GeneratorConfig config;
        config.num_transactions = 20000;
        config.num_items = 1000;
        config.num_patterns = 400;
        config.corruption_mean = 0.9;
        config.seed = seed;
        const auto [db, log] = generate(config);
        const auto rules =
            rules_single_consequent(db, frequent_itemsets(db, 0.001));
        for (const auto& measure : measures)
            runs[measure].push_back(
                pn_graph(rules, log, measure, default_grid(measure)));
    }
    std::map<std::string, std::vector<PNPoint>> avg;
    for (const auto& measure : measures) avg[measure] = average_pn(runs[measure]);

    // The chi-square statistic is two-sided, so its loose-threshold end
    // also accepts strong negative dependence; compare it where the
    // threshold is at least the conventional 5% significance cutoff.
    std::vector<PNPoint> chi_significant;
    for (const auto& point : avg["chi_square"])
        if (point.threshold >= 3.84) chi_significant.push_back(point);

    const double hc_lift = worst_margin(avg["hyper_confidence"], avg["lift"]);
    const double chi_lift = worst_margin(chi_significant, avg["lift"]);
    const double hc_conf =
        worst_margin(avg["hyper_confidence"], avg["confidence"]);
    const double lift_conf = worst_margin(avg["lift"], avg["confidence"]);
    const double eps = -1e-9;
    const bool ok = hc_lift >= eps && chi_lift >= eps && hc_conf >= eps &&
                    lift_conf >= eps;
    report(8, ok,
           fmt("worst matched-N margins: hc-lift %.2f, chi2-lift %.2f, "
               "hc-confidence %.2f, lift-confidence %.2f (all >= 0)",
               hc_lift, chi_lift, hc_conf, lift_conf));
}

// ---------------------------------------------------------------- 9
// Small instances: miner vs bitmask brute force and measures vs the
// long double summation oracle.
void criterion_9() {
    Rng rng(909);
    long long db_mismatches = 0;
    double worst_rel = 0.0;
    long long measure_checks = 0;

    const auto rel_err = [](double got, long double want) {
        const double w = static_cast<double>(want);
        if (w == 0.0) return std::abs(got);
        return std::abs(got - w) / std::abs(w);
    };

    for (int round = 0; round < 1000; ++round) {
        const std::size_t n = 2 + rng.uniform_below(11);   // <= 12
        const std::size_t m = 1 + rng.uniform_below(200);  // <= 200
        const double density = 0.1 + 0.4 * rng.uniform();

        std::vector<Itemset> transactions;
        std::vector<std::uint32_t> masks;
        for (std::size_t r = 0; r < m; ++r) {
            std::vector<ItemId> row;
            std::uint32_t mask = 0;
            for (ItemId i = 0; i < n; ++i) {
                if (rng.uniform() < density) {
                    row.push_back(i);
                    mask |= 1u << i;
                }
            }
            transactions.push_back(make_itemset(row));
            masks.push_back(mask);
        }
        std::vector<std::string> labels;
        for (std::size_t i = 0; i < n; ++i) labels.push_back(std::to_string(i));
        const TransactionDatabase db(ItemCatalog(labels), transactions);

        const double min_support = 0.02 + 0.28 * rng.uniform();
        const auto mined = frequent_itemsets(db, min_support);

        // Brute force over all itemset bitmasks.
        const long long min_count =
            min_count_for(min_support, static_cast<long long>(m));
        std::vector<FrequentItemset> brute;
        for (std::uint32_t q = 1; q < (1u << n); ++q) {
            long long count = 0;
            for (const std::uint32_t t : masks)
                if ((t & q) == q) ++count;
            if (count < min_count) continue;
            FrequentItemset fs;
            for (ItemId i = 0; i < n; ++i)
                if (q & (1u << i)) fs.itemset.push_back(i);
            fs.count = count;
            brute.push_back(std::move(fs));
        }
        std::sort(brute.begin(), brute.end(),
                  [](const FrequentItemset& a, const FrequentItemset& b) {
                      if (a.itemset.size() != b.itemset.size())
                          return a.itemset.size() < b.itemset.size();
                      return a.itemset < b.itemset;
                  });
        bool same = brute.size() == mined.size();
        for (std::size_t k = 0; same && k < brute.size(); ++k)
            same = brute[k].itemset == mined[k].itemset &&
                   brute[k].count == mined[k].count;
        if (!same) ++db_mismatches;

        // Every measure of every rule against the summation oracle.
        for (const auto& rule : rules_single_consequent(db, mined)) {
            const auto& c = rule.counts;
            const auto v = compute_measures(c);
            worst_rel = std::max(
                worst_rel,
                rel_err(v.support, static_cast<long double>(c.c_xy) /
                                       static_cast<long double>(c.m)));
            if (c.c_x > 0)
                worst_rel = std::max(
                    worst_rel,
                    rel_err(*v.confidence, static_cast<long double>(c.c_xy) /
                                               static_cast<long double>(c.c_x)));
            if (c.c_x > 0 && c.c_y > 0)
                worst_rel = std::max(
                    worst_rel,
                    rel_err(*v.lift, static_cast<long double>(c.c_xy) * c.m /
                                         (static_cast<long double>(c.c_x) *
                                          c.c_y)));
            worst_rel = std::max(
                worst_rel, rel_err(v.hyper_confidence,
                                   oracle::hyper_cdf(c.c_xy - 1, c.c_x, c.c_y,
                                                     c.m)));
            worst_rel = std::max(
                worst_rel, rel_err(v.hyper_confidence_sub,
                                   oracle::hyper_tail_gt(c.c_xy, c.c_x, c.c_y,
                                                         c.m)));
            worst_rel = std::max(
                worst_rel,
                rel_err(v.fisher_p, oracle::hyper_tail_gt(c.c_xy - 1, c.c_x,
                                                          c.c_y, c.m)));
            const long long q =
                oracle::hyper_quantile(kDefaultDelta, c.c_x, c.c_y, c.m);
            if (v.hyper_lift.has_value() && std::isfinite(*v.hyper_lift))
                worst_rel = std::max(
                    worst_rel,
                    rel_err(*v.hyper_lift, static_cast<long double>(c.c_xy) /
                                               static_cast<long double>(q)));
            if (v.chi_square.has_value()) {
                const long double md = c.m;
                const long double e11 =
                    static_cast<long double>(c.c_x) * c.c_y / md;
                const long double e10 =
                    static_cast<long double>(c.c_x) * (md - c.c_y) / md;
                const long double e01 =
                    static_cast<long double>(md - c.c_x) * c.c_y / md;
                const long double e00 =
                    static_cast<long double>(md - c.c_x) * (md - c.c_y) / md;
                const long double o11 = c.c_xy;
                const long double o10 = c.c_x - c.c_xy;
                const long double o01 = c.c_y - c.c_xy;
                const long double o00 = md - o11 - o10 - o01;
                const long double want =
                    (o11 - e11) * (o11 - e11) / e11 +
                    (o10 - e10) * (o10 - e10) / e10 +
                    (o01 - e01) * (o01 - e01) / e01 +
                    (o00 - e00) * (o00 - e00) / e00;
                worst_rel = std::max(worst_rel, rel_err(*v.chi_square, want));
            }
            ++measure_checks;
        }
    }
    report(9, db_mismatches == 0 && worst_rel < 1e-9,
           fmt("1000 databases: %lld miner mismatches; %lld rules, max "
               "relative measure error %.3g (< 1e-9)",
               db_mismatches, measure_checks, worst_rel));
}

}  // namespace

int main() {
    criterion_1();
    criterion_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
    criterion_8();
    criterion_9();
    return failures == 0 ? 0 : 1;
}
