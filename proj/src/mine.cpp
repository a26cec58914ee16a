#include "rulelab/mine.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <unordered_map>

namespace rulelab {

long long min_count_for(double min_support, std::size_t m) {
    if (!(min_support > 0.0 && min_support <= 1.0))
        throw std::invalid_argument("minSupport must be in (0,1]");
    // Smallest count whose support reaches the threshold; the epsilon
    // guards against products like 0.6*5 evaluating to 3.0000000000000004.
    return static_cast<long long>(
        std::ceil(min_support * static_cast<double>(m) - 1e-9));
}

namespace {

using TidList = std::vector<std::uint32_t>;

void mine_branch(const Itemset& prefix, long long prefix_count,
                 const std::vector<std::pair<ItemId, TidList>>& extensions,
                 long long min_count, std::vector<FrequentItemset>& out) {
    out.push_back({prefix, prefix_count});
    for (std::size_t k = 0; k < extensions.size(); ++k) {
        const auto& [item, tids] = extensions[k];
        Itemset child = prefix;
        child.push_back(item);
        std::vector<std::pair<ItemId, TidList>> child_ext;
        for (std::size_t j = k + 1; j < extensions.size(); ++j) {
            TidList inter;
            std::set_intersection(tids.begin(), tids.end(),
                                  extensions[j].second.begin(),
                                  extensions[j].second.end(),
                                  std::back_inserter(inter));
            if (static_cast<long long>(inter.size()) >= min_count)
                child_ext.emplace_back(extensions[j].first, std::move(inter));
        }
        mine_branch(child, static_cast<long long>(tids.size()), child_ext,
                    min_count, out);
    }
}

struct ItemsetHash {
    std::size_t operator()(const Itemset& items) const {
        std::size_t h = 1469598103934665603ull;
        for (ItemId i : items) {
            h ^= i;
            h *= 1099511628211ull;
        }
        return h;
    }
};

}  // namespace

std::vector<FrequentItemset> frequent_itemsets(const TransactionDatabase& db,
                                               double min_support) {
    const long long min_count = min_count_for(min_support, db.num_transactions());
    std::vector<std::pair<ItemId, TidList>> roots;
    for (ItemId i = 0; i < db.num_items(); ++i) {
        if (db.item_counts()[i] >= min_count)
            roots.emplace_back(i, db.tidlist(i));
    }
    std::vector<FrequentItemset> out;
    for (std::size_t k = 0; k < roots.size(); ++k) {
        Itemset prefix = {roots[k].first};
        std::vector<std::pair<ItemId, TidList>> ext;
        for (std::size_t j = k + 1; j < roots.size(); ++j) {
            TidList inter;
            std::set_intersection(roots[k].second.begin(), roots[k].second.end(),
                                  roots[j].second.begin(), roots[j].second.end(),
                                  std::back_inserter(inter));
            if (static_cast<long long>(inter.size()) >= min_count)
                ext.emplace_back(roots[j].first, std::move(inter));
        }
        mine_branch(prefix, static_cast<long long>(roots[k].second.size()), ext,
                    min_count, out);
    }
    std::sort(out.begin(), out.end(),
              [](const FrequentItemset& a, const FrequentItemset& b) {
                  if (a.itemset.size() != b.itemset.size())
                      return a.itemset.size() < b.itemset.size();
                  return a.itemset < b.itemset;
              });
    return out;
}

std::vector<Rule> rules_single_consequent(
    const TransactionDatabase& db,
    const std::vector<FrequentItemset>& frequent_sets) {
    std::unordered_map<Itemset, long long, ItemsetHash> counts;
    counts.reserve(frequent_sets.size() * 2);
    for (const auto& fs : frequent_sets) counts.emplace(fs.itemset, fs.count);

    const long long m = static_cast<long long>(db.num_transactions());
    std::vector<Rule> rules;
    for (const auto& fs : frequent_sets) {
        if (fs.itemset.size() < 2) continue;
        for (std::size_t k = 0; k < fs.itemset.size(); ++k) {
            const ItemId y = fs.itemset[k];
            Itemset antecedent;
            antecedent.reserve(fs.itemset.size() - 1);
            for (std::size_t j = 0; j < fs.itemset.size(); ++j)
                if (j != k) antecedent.push_back(fs.itemset[j]);
            const auto it = counts.find(antecedent);
            // Downward closure guarantees the antecedent is present.
            if (it == counts.end())
                throw std::logic_error("frequent set list violates closure");
            Rule rule;
            rule.antecedent = std::move(antecedent);
            rule.consequent = {y};
            rule.counts = {it->second, db.item_count(y), fs.count, m};
            rules.push_back(std::move(rule));
        }
    }
    return rules;
}

std::vector<Rule> all_pair_rules(const TransactionDatabase& db) {
    const std::size_t n = db.num_items();
    const long long m = static_cast<long long>(db.num_transactions());
    // Dense pair table; fine up to a few thousand items.
    std::vector<long long> pair_counts(n * n, 0);
    for (const Itemset& t : db.transactions()) {
        for (std::size_t a = 0; a < t.size(); ++a)
            for (std::size_t b = a + 1; b < t.size(); ++b)
                ++pair_counts[static_cast<std::size_t>(t[a]) * n + t[b]];
    }
    std::vector<Rule> rules;
    for (ItemId i = 0; i < n; ++i) {
        if (db.item_counts()[i] == 0) continue;
        for (ItemId j = 0; j < n; ++j) {
            if (j == i || db.item_counts()[j] == 0) continue;
            const long long c_ij =
                i < j ? pair_counts[static_cast<std::size_t>(i) * n + j]
                      : pair_counts[static_cast<std::size_t>(j) * n + i];
            Rule rule;
            rule.antecedent = {i};
            rule.consequent = {j};
            rule.counts = {db.item_counts()[i], db.item_counts()[j], c_ij, m};
            rules.push_back(std::move(rule));
        }
    }
    return rules;
}

}  // namespace rulelab
