#pragma once

// Frequent itemset mining (depth-first vertical tid-list intersection)
// and candidate rule generation.

#include <vector>

#include "rulelab/measures.hpp"
#include "rulelab/txdb.hpp"

namespace rulelab {

struct FrequentItemset {
    Itemset itemset;
    long long count = 0;
};

struct Rule {
    Itemset antecedent;
    Itemset consequent;
    ContingencyCounts counts;
};

/// Exactly the itemsets with support >= minSupport (count >= the smallest
/// integer reaching minSupport * m), sorted by (size, lexicographic item
/// ids). Throws unless 0 < minSupport <= 1.
std::vector<FrequentItemset> frequent_itemsets(const TransactionDatabase& db,
                                               double min_support);

/// For every frequent itemset Z with |Z| >= 2 and every y in Z, the rule
/// Z \ {y} => {y} with exact contingency counts.
std::vector<Rule> rules_single_consequent(
    const TransactionDatabase& db,
    const std::vector<FrequentItemset>& frequent_sets);

/// All ordered item pairs i => j (i != j, both with nonzero count), with
/// counts from the full pair co-occurrence table. No support floor.
std::vector<Rule> all_pair_rules(const TransactionDatabase& db);

/// Absolute count threshold for a relative minimum support.
long long min_count_for(double min_support, std::size_t m);

}  // namespace rulelab
