#include "rulelab/questgen.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "rulelab/rng.hpp"

namespace rulelab {

void GeneratorConfig::validate() const {
    if (num_transactions < 1) throw std::invalid_argument("gen: D must be >= 1");
    if (!(avg_transaction_size >= 1.0))
        throw std::invalid_argument("gen: T must be >= 1");
    if (!(avg_pattern_size >= 1.0))
        throw std::invalid_argument("gen: I must be >= 1");
    if (num_patterns < 1) throw std::invalid_argument("gen: L must be >= 1");
    if (num_items < avg_pattern_size)
        throw std::invalid_argument("gen: N must be >= I");
    if (!(corruption_mean >= 0.0 && corruption_mean < 1.0))
        throw std::invalid_argument("gen: corruption mean must be in [0,1)");
    if (!(corruption_sd >= 0.0))
        throw std::invalid_argument("gen: corruption sd must be >= 0");
    if (!(correlation >= 0.0 && correlation <= 1.0))
        throw std::invalid_argument("gen: correlation must be in [0,1]");
}

namespace {

// Draws an index from a cumulative weight table.
std::size_t draw_index(const std::vector<double>& cumulative, Rng& rng) {
    const double u = rng.uniform() * cumulative.back();
    const auto it = std::upper_bound(cumulative.begin(), cumulative.end(), u);
    return std::min<std::size_t>(it - cumulative.begin(), cumulative.size() - 1);
}

}  // namespace

std::pair<TransactionDatabase, PatternLog> generate(const GeneratorConfig& config) {
    config.validate();
    Rng rng(config.seed);
    const auto n_items = static_cast<std::size_t>(config.num_items);
    const auto n_patterns = static_cast<std::size_t>(config.num_patterns);

    // Items are picked with exponentially distributed weights, so a
    // minority of popular items carries most pattern slots and a tail of
    // items never shows up at all.
    std::vector<double> item_cumulative(n_items);
    double acc = 0.0;
    for (std::size_t i = 0; i < n_items; ++i) {
        acc += rng.exponential();
        item_cumulative[i] = acc;
    }

    PatternLog log;
    log.patterns.resize(n_patterns);
    double weight_sum = 0.0;
    for (std::size_t k = 0; k < n_patterns; ++k) {
        Pattern& pattern = log.patterns[k];
        const auto size = std::min<long long>(
            std::max<long long>(1, rng.poisson(config.avg_pattern_size)),
            config.num_items);
        std::vector<ItemId> items;
        if (k > 0) {
            // Reuse a fraction of the previous pattern's items; the
            // fraction is exponential with mean = correlation, capped at 1.
            const double frac =
                std::min(1.0, rng.exponential() * config.correlation);
            const auto& prev = log.patterns[k - 1].items;
            auto n_reuse = std::min<std::size_t>(
                static_cast<std::size_t>(frac * static_cast<double>(size)),
                prev.size());
            std::vector<ItemId> pool = prev;
            for (std::size_t r = 0; r < n_reuse; ++r) {
                const auto pick = r + rng.uniform_below(pool.size() - r);
                std::swap(pool[r], pool[pick]);
                items.push_back(pool[r]);
            }
        }
        while (static_cast<long long>(items.size()) < size) {
            const auto candidate =
                static_cast<ItemId>(draw_index(item_cumulative, rng));
            if (std::find(items.begin(), items.end(), candidate) == items.end())
                items.push_back(candidate);
        }
        pattern.items = make_itemset(std::move(items));
        pattern.weight = rng.exponential();
        weight_sum += pattern.weight;
        pattern.corruption = std::clamp(
            config.corruption_mean + config.corruption_sd * rng.normal(), 0.0,
            1.0 - 1e-12);
    }
    std::vector<double> pattern_cumulative(n_patterns);
    acc = 0.0;
    for (std::size_t k = 0; k < n_patterns; ++k) {
        log.patterns[k].weight /= weight_sum;
        acc += log.patterns[k].weight;
        pattern_cumulative[k] = acc;
    }

    std::vector<Itemset> transactions;
    transactions.reserve(static_cast<std::size_t>(config.num_transactions));
    std::ptrdiff_t pending = -1;
    std::vector<ItemId> row, corrupted;
    for (long long tr = 0; tr < config.num_transactions; ++tr) {
        const long long target =
            std::max<long long>(1, rng.poisson(config.avg_transaction_size));
        row.clear();
        // Guard against pathological configs where corruption removes
        // nearly everything; 1000 draws fill any realistic budget.
        for (int attempts = 0;
             static_cast<long long>(row.size()) < target && attempts < 1000;
             ++attempts) {
            std::size_t idx;
            if (pending >= 0) {
                idx = static_cast<std::size_t>(pending);
                pending = -1;
            } else {
                idx = draw_index(pattern_cumulative, rng);
            }
            const Pattern& pattern = log.patterns[idx];
            corrupted.clear();
            for (ItemId item : pattern.items)
                if (rng.uniform() >= pattern.corruption) corrupted.push_back(item);
            if (corrupted.empty()) continue;
            if (!row.empty() &&
                static_cast<long long>(row.size() + corrupted.size()) > target) {
                // Oversized pattern: add it anyway half the time, else
                // carry it over to the next transaction.
                if (rng.uniform() < 0.5)
                    row.insert(row.end(), corrupted.begin(), corrupted.end());
                else
                    pending = static_cast<std::ptrdiff_t>(idx);
                break;
            }
            row.insert(row.end(), corrupted.begin(), corrupted.end());
        }
        transactions.push_back(make_itemset(row));
    }

    std::vector<std::string> labels(n_items);
    for (std::size_t i = 0; i < n_items; ++i) labels[i] = std::to_string(i);
    return {TransactionDatabase(ItemCatalog(std::move(labels)),
                                std::move(transactions)),
            std::move(log)};
}

bool is_covered(const Rule& rule, const PatternLog& log) {
    Itemset items = rule.antecedent;
    items.insert(items.end(), rule.consequent.begin(), rule.consequent.end());
    items = make_itemset(std::move(items));
    for (const Pattern& pattern : log.patterns) {
        if (std::includes(pattern.items.begin(), pattern.items.end(),
                          items.begin(), items.end()))
            return true;
    }
    return false;
}

std::string pattern_log_to_json(const PatternLog& log) {
    nlohmann::json j = nlohmann::json::array();
    for (const Pattern& pattern : log.patterns) {
        j.push_back({{"items", pattern.items},
                     {"weight", pattern.weight},
                     {"corruption", pattern.corruption}});
    }
    return j.dump();
}

PatternLog pattern_log_from_json(const std::string& json_text) {
    const auto j = nlohmann::json::parse(json_text);
    PatternLog log;
    for (const auto& entry : j) {
        Pattern pattern;
        pattern.items =
            make_itemset(entry.at("items").get<std::vector<ItemId>>());
        pattern.weight = entry.at("weight").get<double>();
        pattern.corruption = entry.at("corruption").get<double>();
        log.patterns.push_back(std::move(pattern));
    }
    return log;
}

PatternLog load_pattern_log(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return pattern_log_from_json(buf.str());
}

void save_pattern_log(const PatternLog& log, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write file: " + path);
    out << pattern_log_to_json(log) << '\n';
}

}  // namespace rulelab
