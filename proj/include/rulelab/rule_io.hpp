#pragma once

// Rule CSV: antecedent (labels joined by '&'), consequent, cX, cY, cXY, m,
// plus one column per requested measure. Undefined measures are empty
// fields; probabilities carry 12 significant digits.

#include <iosfwd>
#include <string>
#include <vector>

#include "rulelab/mine.hpp"

namespace rulelab {

void write_rules_csv(std::ostream& out, const ItemCatalog& catalog,
                     const std::vector<Rule>& rules,
                     const std::vector<std::string>& measures,
                     double delta = kDefaultDelta);
void save_rules_csv(const std::string& path, const ItemCatalog& catalog,
                    const std::vector<Rule>& rules,
                    const std::vector<std::string>& measures,
                    double delta = kDefaultDelta);

struct LabeledRule {
    std::vector<std::string> antecedent;
    std::vector<std::string> consequent;
    ContingencyCounts counts;
};

/// Reads the count columns back; measure columns are ignored since every
/// measure is recomputable from the counts.
std::vector<LabeledRule> read_rules_csv(std::istream& in);
std::vector<LabeledRule> load_rules_csv(const std::string& path);

/// Converts label-based rules to id-based ones via a catalog.
std::vector<Rule> resolve_rules(const std::vector<LabeledRule>& labeled,
                                const ItemCatalog& catalog);

/// Formats a value with 12 significant digits, '.' decimal separator.
std::string format_number(double value);

}  // namespace rulelab
