#pragma once

// Independence model for transaction data: transactions arrive following
// a homogeneous Poisson process with intensity theta over an interval of
// length t, and each transaction contains item i independently with
// probability p_i = lambda_i / (theta t). Simulating the model yields an
// association-free null database with marginals comparable to the fitted
// database.

#include <cstdint>
#include <string>
#include <vector>

#include "rulelab/txdb.hpp"

namespace rulelab {

struct Seed {
    std::uint64_t value = 0;
};

class IndependenceModel {
public:
    /// lambda[i] is the expected occurrence count of item i over the
    /// whole interval t. Throws unless theta > 0, t > 0, every
    /// lambda >= 0 and every derived p = lambda/(theta t) <= 1.
    IndependenceModel(double theta, double t, std::vector<double> lambda,
                      ItemCatalog catalog);

    double theta() const { return theta_; }
    double t() const { return t_; }
    double theta_t() const { return theta_ * t_; }
    const std::vector<double>& lambda() const { return lambda_; }
    const ItemCatalog& catalog() const { return catalog_; }

    /// Success probability of item i per transaction.
    double item_probability(ItemId i) const { return lambda_[i] / theta_t(); }

private:
    double theta_;
    double t_;
    std::vector<double> lambda_;
    ItemCatalog catalog_;
};

/// theta = m/t, lambda_i = observed count c_i.
IndependenceModel fit(const TransactionDatabase& db, double t);

/// Draws m ~ Poisson(theta t), then fills each transaction by independent
/// Bernoulli trials per item. Deterministic under the seed.
TransactionDatabase simulate(const IndependenceModel& model, Seed seed);

/// e^(-mu) mu^k / k!, computed in log space.
double poisson_pmf(long long k, double mu);

/// JSON round trip: {"theta": .., "t": .., "lambda": [..], "labels": [..]}.
std::string model_to_json(const IndependenceModel& model);
IndependenceModel model_from_json(const std::string& json_text);
IndependenceModel load_model(const std::string& path);
void save_model(const IndependenceModel& model, const std::string& path);

}  // namespace rulelab
