#include "rulelab/simulate.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "rulelab/rng.hpp"

namespace rulelab {

IndependenceModel::IndependenceModel(double theta, double t,
                                     std::vector<double> lambda,
                                     ItemCatalog catalog)
    : theta_(theta), t_(t), lambda_(std::move(lambda)),
      catalog_(std::move(catalog)) {
    if (!(theta_ > 0.0)) throw std::invalid_argument("model: theta must be > 0");
    if (!(t_ > 0.0)) throw std::invalid_argument("model: t must be > 0");
    if (lambda_.size() != catalog_.size())
        throw std::invalid_argument("model: lambda size != catalog size");
    for (double l : lambda_) {
        if (!(l >= 0.0)) throw std::invalid_argument("model: lambda must be >= 0");
        if (l / (theta_ * t_) > 1.0)
            throw std::invalid_argument("model: item probability exceeds 1");
    }
}

IndependenceModel fit(const TransactionDatabase& db, double t) {
    if (!(t > 0.0)) throw std::invalid_argument("fit: t must be > 0");
    const double m = static_cast<double>(db.num_transactions());
    if (m == 0.0) throw std::invalid_argument("fit: database is empty");
    std::vector<double> lambda(db.num_items());
    for (ItemId i = 0; i < db.num_items(); ++i)
        lambda[i] = static_cast<double>(db.item_counts()[i]);
    return IndependenceModel(m / t, t, std::move(lambda), db.catalog());
}

TransactionDatabase simulate(const IndependenceModel& model, Seed seed) {
    Rng rng(seed.value);
    const long long m = rng.poisson(model.theta_t());
    const std::size_t n = model.catalog().size();

    // Row sampling walks a unit-rate exponential clock across the item
    // axis, where item i occupies an interval of length -log(1-p_i).
    // The chance of at least one arrival in an interval is exactly p_i,
    // and disjoint intervals are independent, so each row costs
    // O(expected row size) draws instead of O(n).
    std::vector<ItemId> always;          // p == 1
    std::vector<ItemId> bernoulli_items; // 0 < p < 1
    std::vector<double> cuts;            // prefix sums of -log(1-p)
    double total = 0.0;
    for (ItemId i = 0; i < n; ++i) {
        const double p = model.item_probability(i);
        if (p >= 1.0) {
            always.push_back(i);
        } else if (p > 0.0) {
            bernoulli_items.push_back(i);
            total += -std::log1p(-p);
            cuts.push_back(total);
        }
    }

    std::vector<Itemset> transactions;
    transactions.reserve(static_cast<std::size_t>(m));
    std::vector<ItemId> row;
    for (long long r = 0; r < m; ++r) {
        row = always;
        double pos = rng.exponential();
        while (pos < total) {
            const auto it = std::upper_bound(cuts.begin(), cuts.end(), pos);
            row.push_back(bernoulli_items[it - cuts.begin()]);
            pos = cuts[it - cuts.begin()] + rng.exponential();
        }
        transactions.push_back(make_itemset(row));
    }
    return TransactionDatabase(model.catalog(), std::move(transactions));
}

double poisson_pmf(long long k, double mu) {
    if (k < 0 || !(mu >= 0.0))
        throw std::invalid_argument("poisson_pmf: negative input");
    if (mu == 0.0) return k == 0 ? 1.0 : 0.0;
    const double kd = static_cast<double>(k);
    return std::exp(kd * std::log(mu) - mu - std::lgamma(kd + 1.0));
}

std::string model_to_json(const IndependenceModel& model) {
    nlohmann::json j;
    j["theta"] = model.theta();
    j["t"] = model.t();
    j["lambda"] = model.lambda();
    j["labels"] = model.catalog().labels();
    return j.dump(2);
}

IndependenceModel model_from_json(const std::string& json_text) {
    const auto j = nlohmann::json::parse(json_text);
    return IndependenceModel(
        j.at("theta").get<double>(), j.at("t").get<double>(),
        j.at("lambda").get<std::vector<double>>(),
        ItemCatalog(j.at("labels").get<std::vector<std::string>>()));
}

IndependenceModel load_model(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return model_from_json(buf.str());
}

void save_model(const IndependenceModel& model, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write file: " + path);
    out << model_to_json(model) << '\n';
}

}  // namespace rulelab
