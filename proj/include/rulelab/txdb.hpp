#pragma once

// Transaction databases as immutable sparse binary incidence structures.
// Storage is kept both horizontally (transaction -> item ids) and
// vertically (item id -> sorted transaction ids); the vertical lists make
// exact support counting of arbitrary itemsets a sorted-list intersection.

#include <cstdint>
#include <iosfwd>
#include <string>
#include <unordered_map>
#include <vector>

namespace rulelab {

using ItemId = std::uint32_t;

/// Sorted, duplicate-free set of item ids.
using Itemset = std::vector<ItemId>;

/// Normalizes an arbitrary id list into a valid Itemset.
Itemset make_itemset(std::vector<ItemId> items);

class ItemCatalog {
public:
    ItemCatalog() = default;
    explicit ItemCatalog(std::vector<std::string> labels);

    /// Returns the id for a label, inserting it if unknown.
    ItemId intern(const std::string& label);

    /// Returns the id for a label or throws if it is unknown.
    ItemId id_of(const std::string& label) const;

    bool contains(const std::string& label) const {
        return index_.count(label) != 0;
    }

    const std::string& label(ItemId id) const { return labels_.at(id); }
    std::size_t size() const { return labels_.size(); }
    const std::vector<std::string>& labels() const { return labels_; }

private:
    std::vector<std::string> labels_;
    std::unordered_map<std::string, ItemId> index_;
};

class TransactionDatabase {
public:
    TransactionDatabase(ItemCatalog catalog,
                        std::vector<Itemset> transactions);

    const ItemCatalog& catalog() const { return catalog_; }
    std::size_t num_items() const { return catalog_.size(); }

    /// Number of transactions, including empty ones.
    std::size_t num_transactions() const { return transactions_.size(); }

    const std::vector<Itemset>& transactions() const { return transactions_; }

    /// Occurrence count of a single item.
    long long item_count(ItemId item) const;
    const std::vector<long long>& item_counts() const { return item_counts_; }

    /// Sorted list of transaction ids containing the item.
    const std::vector<std::uint32_t>& tidlist(ItemId item) const;

    /// Exact number of transactions containing every item of X.
    /// count({}) is the number of transactions.
    long long count(const Itemset& itemset) const;

    /// count(X) / m.
    double support(const Itemset& itemset) const;

    /// Item ids ordered by decreasing count, ties broken by label.
    std::vector<ItemId> items_by_frequency() const;

private:
    void check_item(ItemId item) const;

    ItemCatalog catalog_;
    std::vector<Itemset> transactions_;
    std::vector<long long> item_counts_;
    std::vector<std::vector<std::uint32_t>> tidlists_;
};

/// Loads a basket file: one transaction per line, labels separated by
/// commas and/or whitespace, duplicates within a line collapsed, blank
/// lines ignored. With a supplied catalog, unknown labels are an error;
/// otherwise the catalog is built in first-appearance order.
TransactionDatabase load_basket(const std::string& path);
TransactionDatabase load_basket(const std::string& path, ItemCatalog catalog);
TransactionDatabase read_basket(std::istream& in, const std::string& name);
TransactionDatabase read_basket(std::istream& in, const std::string& name,
                                ItemCatalog catalog, bool fixed_catalog);

/// Writes basket format. Empty transactions produce blank lines, which
/// the loader skips; only non-empty transactions survive a round trip.
void save_basket(const TransactionDatabase& db, const std::string& path);
void write_basket(const TransactionDatabase& db, std::ostream& out);

/// Catalog file: one label per line, line number - 1 = item id.
ItemCatalog load_catalog(const std::string& path);
void save_catalog(const ItemCatalog& catalog, const std::string& path);

}  // namespace rulelab
