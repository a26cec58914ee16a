#include "rulelab/txdb.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace rulelab {

Itemset make_itemset(std::vector<ItemId> items) {
    std::sort(items.begin(), items.end());
    items.erase(std::unique(items.begin(), items.end()), items.end());
    return items;
}

ItemCatalog::ItemCatalog(std::vector<std::string> labels)
    : labels_(std::move(labels)) {
    for (ItemId id = 0; id < labels_.size(); ++id) {
        if (!index_.emplace(labels_[id], id).second)
            throw std::invalid_argument("duplicate item label: " + labels_[id]);
    }
}

ItemId ItemCatalog::intern(const std::string& label) {
    auto it = index_.find(label);
    if (it != index_.end()) return it->second;
    const ItemId id = static_cast<ItemId>(labels_.size());
    labels_.push_back(label);
    index_.emplace(label, id);
    return id;
}

ItemId ItemCatalog::id_of(const std::string& label) const {
    auto it = index_.find(label);
    if (it == index_.end())
        throw std::invalid_argument("unknown item label: " + label);
    return it->second;
}

TransactionDatabase::TransactionDatabase(ItemCatalog catalog,
                                         std::vector<Itemset> transactions)
    : catalog_(std::move(catalog)), transactions_(std::move(transactions)) {
    const std::size_t n = catalog_.size();
    item_counts_.assign(n, 0);
    tidlists_.assign(n, {});
    for (std::uint32_t tid = 0; tid < transactions_.size(); ++tid) {
        const Itemset& t = transactions_[tid];
        for (std::size_t k = 0; k < t.size(); ++k) {
            if (t[k] >= n)
                throw std::invalid_argument("transaction item id out of range");
            if (k > 0 && t[k] <= t[k - 1])
                throw std::invalid_argument("transaction items not sorted/unique");
            ++item_counts_[t[k]];
            tidlists_[t[k]].push_back(tid);
        }
    }
}

void TransactionDatabase::check_item(ItemId item) const {
    if (item >= catalog_.size())
        throw std::invalid_argument("item id out of range");
}

long long TransactionDatabase::item_count(ItemId item) const {
    check_item(item);
    return item_counts_[item];
}

const std::vector<std::uint32_t>& TransactionDatabase::tidlist(ItemId item) const {
    check_item(item);
    return tidlists_[item];
}

long long TransactionDatabase::count(const Itemset& itemset) const {
    if (itemset.empty()) return static_cast<long long>(transactions_.size());
    for (ItemId item : itemset) check_item(item);
    // Intersect vertical lists, shortest first.
    Itemset order = itemset;
    std::sort(order.begin(), order.end(), [this](ItemId a, ItemId b) {
        return tidlists_[a].size() < tidlists_[b].size();
    });
    std::vector<std::uint32_t> acc = tidlists_[order[0]];
    std::vector<std::uint32_t> next;
    for (std::size_t k = 1; k < order.size() && !acc.empty(); ++k) {
        const auto& other = tidlists_[order[k]];
        next.clear();
        std::set_intersection(acc.begin(), acc.end(), other.begin(), other.end(),
                              std::back_inserter(next));
        acc.swap(next);
    }
    return static_cast<long long>(acc.size());
}

double TransactionDatabase::support(const Itemset& itemset) const {
    if (transactions_.empty())
        throw std::logic_error("support undefined on empty database");
    return static_cast<double>(count(itemset)) /
           static_cast<double>(transactions_.size());
}

std::vector<ItemId> TransactionDatabase::items_by_frequency() const {
    std::vector<ItemId> order(catalog_.size());
    for (ItemId i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [this](ItemId a, ItemId b) {
        if (item_counts_[a] != item_counts_[b])
            return item_counts_[a] > item_counts_[b];
        return catalog_.label(a) < catalog_.label(b);
    });
    return order;
}

namespace {

std::vector<std::string> split_labels(const std::string& line) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : line) {
        if (c == ',' || c == ' ' || c == '\t' || c == '\r') {
            if (!cur.empty()) out.push_back(std::move(cur)), cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    if (!cur.empty()) out.push_back(std::move(cur));
    return out;
}

}  // namespace

TransactionDatabase read_basket(std::istream& in, const std::string& name,
                                ItemCatalog catalog, bool fixed_catalog) {
    std::vector<Itemset> transactions;
    std::string line;
    while (std::getline(in, line)) {
        const auto labels = split_labels(line);
        if (labels.empty()) continue;  // blank line
        std::vector<ItemId> ids;
        ids.reserve(labels.size());
        for (const auto& label : labels) {
            ids.push_back(fixed_catalog ? catalog.id_of(label)
                                        : catalog.intern(label));
        }
        transactions.push_back(make_itemset(std::move(ids)));
    }
    if (transactions.empty())
        throw std::runtime_error("basket file has no transactions: " + name);
    return TransactionDatabase(std::move(catalog), std::move(transactions));
}

TransactionDatabase read_basket(std::istream& in, const std::string& name) {
    return read_basket(in, name, ItemCatalog(), false);
}

namespace {

std::ifstream open_or_throw(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open file: " + path);
    return in;
}

}  // namespace

TransactionDatabase load_basket(const std::string& path) {
    auto in = open_or_throw(path);
    return read_basket(in, path);
}

TransactionDatabase load_basket(const std::string& path, ItemCatalog catalog) {
    auto in = open_or_throw(path);
    return read_basket(in, path, std::move(catalog), true);
}

void write_basket(const TransactionDatabase& db, std::ostream& out) {
    for (const Itemset& t : db.transactions()) {
        for (std::size_t k = 0; k < t.size(); ++k) {
            if (k > 0) out << ',';
            out << db.catalog().label(t[k]);
        }
        out << '\n';
    }
}

void save_basket(const TransactionDatabase& db, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write file: " + path);
    write_basket(db, out);
}

ItemCatalog load_catalog(const std::string& path) {
    auto in = open_or_throw(path);
    std::vector<std::string> labels;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        labels.push_back(line);
    }
    return ItemCatalog(std::move(labels));
}

void save_catalog(const ItemCatalog& catalog, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write file: " + path);
    for (const auto& label : catalog.labels()) out << label << '\n';
}

}  // namespace rulelab
