#pragma once

// Quest-style synthetic transaction generator with a logged ground-truth
// pattern set. Transactions are assembled from weighted source patterns;
// a per-pattern corruption level drops items on insertion, which makes
// mined rules fragments of the generating patterns.

#include <cstdint>
#include <string>
#include <vector>

#include "rulelab/mine.hpp"
#include "rulelab/txdb.hpp"

namespace rulelab {

struct GeneratorConfig {
    long long num_transactions = 100000;  // D
    double avg_transaction_size = 10.0;   // T
    double avg_pattern_size = 4.0;        // I
    long long num_patterns = 2000;        // L
    long long num_items = 1000;           // N
    double corruption_mean = 0.5;
    double corruption_sd = 0.1;
    /// Mean of the exponentially distributed fraction of items a pattern
    /// reuses from its predecessor.
    double correlation = 0.5;
    std::uint64_t seed = 0;

    void validate() const;
};

struct Pattern {
    Itemset items;
    double weight = 0.0;      // selection probability; weights sum to 1
    double corruption = 0.0;  // per-item drop probability in [0,1)
};

struct PatternLog {
    std::vector<Pattern> patterns;
};

/// Generates exactly D transactions over N items together with the full
/// pattern log. Deterministic under config.seed.
std::pair<TransactionDatabase, PatternLog> generate(const GeneratorConfig& config);

/// True iff antecedent + consequent is a subset of some logged pattern.
bool is_covered(const Rule& rule, const PatternLog& log);

/// JSON round trip: [{"items": [..], "weight": .., "corruption": ..}, ..].
std::string pattern_log_to_json(const PatternLog& log);
PatternLog pattern_log_from_json(const std::string& json_text);
PatternLog load_pattern_log(const std::string& path);
void save_pattern_log(const PatternLog& log, const std::string& path);

}  // namespace rulelab
