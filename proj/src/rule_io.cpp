#include "rulelab/rule_io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace rulelab {

std::string format_number(double value) {
    if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", value);
    return buf;
}

namespace {

std::string join_labels(const ItemCatalog& catalog, const Itemset& items) {
    std::string out;
    for (std::size_t k = 0; k < items.size(); ++k) {
        if (k > 0) out.push_back('&');
        out += catalog.label(items[k]);
    }
    return out;
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    out.push_back(cur);
    return out;
}

}  // namespace

void write_rules_csv(std::ostream& out, const ItemCatalog& catalog,
                     const std::vector<Rule>& rules,
                     const std::vector<std::string>& measures, double delta) {
    out << "antecedent,consequent,cX,cY,cXY,m";
    for (const auto& name : measures) out << ',' << name;
    out << '\n';
    for (const Rule& rule : rules) {
        out << join_labels(catalog, rule.antecedent) << ','
            << join_labels(catalog, rule.consequent) << ',' << rule.counts.c_x
            << ',' << rule.counts.c_y << ',' << rule.counts.c_xy << ','
            << rule.counts.m;
        for (const auto& name : measures) {
            out << ',';
            if (const auto value = compute_measure(name, rule.counts, delta))
                out << format_number(*value);
        }
        out << '\n';
    }
}

void save_rules_csv(const std::string& path, const ItemCatalog& catalog,
                    const std::vector<Rule>& rules,
                    const std::vector<std::string>& measures, double delta) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write file: " + path);
    write_rules_csv(out, catalog, rules, measures, delta);
}

std::vector<LabeledRule> read_rules_csv(std::istream& in) {
    std::string line;
    if (!std::getline(in, line))
        throw std::runtime_error("rule CSV: missing header");
    std::vector<LabeledRule> out;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        const auto fields = split(line, ',');
        if (fields.size() < 6)
            throw std::runtime_error("rule CSV: expected at least 6 columns");
        LabeledRule rule;
        rule.antecedent = split(fields[0], '&');
        rule.consequent = split(fields[1], '&');
        rule.counts.c_x = std::stoll(fields[2]);
        rule.counts.c_y = std::stoll(fields[3]);
        rule.counts.c_xy = std::stoll(fields[4]);
        rule.counts.m = std::stoll(fields[5]);
        rule.counts.validate();
        out.push_back(std::move(rule));
    }
    return out;
}

std::vector<LabeledRule> load_rules_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open file: " + path);
    return read_rules_csv(in);
}

std::vector<Rule> resolve_rules(const std::vector<LabeledRule>& labeled,
                                const ItemCatalog& catalog) {
    std::vector<Rule> out;
    out.reserve(labeled.size());
    for (const LabeledRule& lr : labeled) {
        Rule rule;
        for (const auto& label : lr.antecedent)
            rule.antecedent.push_back(catalog.id_of(label));
        for (const auto& label : lr.consequent)
            rule.consequent.push_back(catalog.id_of(label));
        rule.antecedent = make_itemset(std::move(rule.antecedent));
        rule.consequent = make_itemset(std::move(rule.consequent));
        rule.counts = lr.counts;
        out.push_back(std::move(rule));
    }
    return out;
}

}  // namespace rulelab
