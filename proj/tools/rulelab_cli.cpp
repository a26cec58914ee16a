// Command line front end for mining, simulation, generation and the
// evaluation protocols. Every command is deterministic given its flags;
// randomized commands print the effective seed to standard error.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "rulelab/evaluate.hpp"
#include "rulelab/mine.hpp"
#include "rulelab/questgen.hpp"
#include "rulelab/rule_io.hpp"
#include "rulelab/simulate.hpp"

namespace {

using namespace rulelab;

std::ofstream open_out(const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write file: " + path);
    return out;
}

TransactionDatabase load_db(const std::string& input,
                            const std::string& catalog_path) {
    if (!catalog_path.empty())
        return load_basket(input, load_catalog(catalog_path));
    return load_basket(input);
}

std::vector<std::string> checked_measures(std::vector<std::string> measures) {
    if (measures.empty()) return measure_names();
    for (const auto& name : measures)
        compute_measure(name, {1, 1, 1, 1});  // throws on unknown names
    return measures;
}

int run(int argc, char** argv) {
    CLI::App app{"association rule mining with probabilistic interest measures"};
    app.require_subcommand(1);

    // mine ----------------------------------------------------------------
    auto* mine = app.add_subcommand(
        "mine", "mine single-consequent rules above a minimum support");
    std::string mine_input, mine_catalog, mine_out = "-";
    double mine_min_support = 0.001, mine_delta = kDefaultDelta;
    std::vector<std::string> mine_measures;
    bool mine_all_pairs = false;
    mine->add_option("--input", mine_input, "basket file")
        ->required()
        ->envname("RULELAB_INPUT");
    mine->add_option("--catalog", mine_catalog, "fixed catalog file")
        ->envname("RULELAB_CATALOG");
    mine->add_option("--min-support", mine_min_support,
                     "relative minimum support")
        ->envname("RULELAB_MIN_SUPPORT");
    mine->add_option("--delta", mine_delta, "hyper-lift quantile level")
        ->envname("RULELAB_DELTA");
    mine->add_option("--measure", mine_measures,
                     "measure column(s); default: all");
    mine->add_flag("--all-pairs", mine_all_pairs,
                   "emit all ordered item pairs instead (no support floor)");
    mine->add_option("--out", mine_out, "output CSV ('-' = stdout)");

    // simulate ------------------------------------------------------------
    auto* sim = app.add_subcommand(
        "simulate", "fit the independence model and simulate a null database");
    std::string sim_input, sim_catalog, sim_model_in, sim_model_out,
        sim_out = "-";
    double sim_t = 30.0;
    std::uint64_t sim_seed = 0;
    sim->add_option("--input", sim_input, "basket file to fit");
    sim->add_option("--catalog", sim_catalog, "fixed catalog file");
    sim->add_option("--model", sim_model_in,
                    "model JSON to simulate from (instead of fitting)");
    sim->add_option("--t", sim_t, "observation length (time units)")
        ->envname("RULELAB_T");
    sim->add_option("--seed", sim_seed, "RNG seed")->envname("RULELAB_SEED");
    sim->add_option("--model-out", sim_model_out, "write fitted model JSON");
    sim->add_option("--out", sim_out, "output basket file ('-' = stdout)");

    // gen -----------------------------------------------------------------
    auto* gen = app.add_subcommand(
        "gen", "generate a synthetic database with a ground-truth pattern log");
    GeneratorConfig config;
    std::string gen_out = "-", gen_pattern_out;
    gen->add_option("--transactions", config.num_transactions, "D");
    gen->add_option("--avg-size", config.avg_transaction_size, "T");
    gen->add_option("--avg-pattern-size", config.avg_pattern_size, "I");
    gen->add_option("--patterns", config.num_patterns, "L");
    gen->add_option("--items", config.num_items, "N");
    gen->add_option("--corruption", config.corruption_mean,
                    "mean corruption level");
    gen->add_option("--corruption-sd", config.corruption_sd,
                    "corruption level s.d.");
    gen->add_option("--correlation", config.correlation,
                    "pattern-to-pattern item reuse");
    gen->add_option("--seed", config.seed, "RNG seed")->envname("RULELAB_SEED");
    gen->add_option("--out", gen_out, "output basket file ('-' = stdout)");
    gen->add_option("--pattern-out", gen_pattern_out, "pattern log JSON");

    // eval ----------------------------------------------------------------
    auto* eval = app.add_subcommand(
        "eval", "threshold sweep over real and null rule sets");
    std::string eval_real, eval_null, eval_measure = "lift", eval_out = "-";
    std::vector<double> eval_grid;
    double eval_delta = kDefaultDelta;
    bool eval_json = false;
    eval->add_option("--real", eval_real, "real-side rule CSV")->required();
    eval->add_option("--null", eval_null, "null-side rule CSV")->required();
    eval->add_option("--measure", eval_measure, "measure to sweep");
    eval->add_option("--grid", eval_grid, "thresholds; default per measure");
    eval->add_option("--delta", eval_delta, "hyper-lift quantile level")
        ->envname("RULELAB_DELTA");
    eval->add_flag("--json", eval_json, "emit JSON instead of CSV");
    eval->add_option("--out", eval_out, "output file ('-' = stdout)");

    // pn ------------------------------------------------------------------
    auto* pn = app.add_subcommand(
        "pn", "PN graph of accepted rules against generator ground truth");
    std::string pn_rules, pn_patterns, pn_catalog, pn_measure = "lift",
                pn_out = "-";
    std::vector<double> pn_grid;
    double pn_delta = kDefaultDelta;
    bool pn_json = false;
    pn->add_option("--rules", pn_rules, "rule CSV")->required();
    pn->add_option("--patterns", pn_patterns, "pattern log JSON")->required();
    pn->add_option("--catalog", pn_catalog,
                   "catalog mapping rule labels to item ids; default: labels "
                   "are decimal ids (as written by gen)");
    pn->add_option("--measure", pn_measure, "measure to sweep");
    pn->add_option("--grid", pn_grid, "thresholds; default per measure");
    pn->add_option("--delta", pn_delta, "hyper-lift quantile level")
        ->envname("RULELAB_DELTA");
    pn->add_flag("--json", pn_json, "emit JSON instead of CSV");
    pn->add_option("--out", pn_out, "output file ('-' = stdout)");

    // measure -------------------------------------------------------------
    auto* measure = app.add_subcommand(
        "measure", "all measures for one contingency quadruple");
    ContingencyCounts counts;
    double measure_delta = kDefaultDelta;
    measure->add_option("--cx", counts.c_x, "antecedent count")->required();
    measure->add_option("--cy", counts.c_y, "consequent count")->required();
    measure->add_option("--cxy", counts.c_xy, "co-occurrence count")->required();
    measure->add_option("--m", counts.m, "database size")->required();
    measure->add_option("--delta", measure_delta, "hyper-lift quantile level")
        ->envname("RULELAB_DELTA");

    CLI11_PARSE(app, argc, argv);

    const auto with_output = [](const std::string& path, auto&& fn) {
        if (path == "-") {
            fn(std::cout);
        } else {
            auto out = open_out(path);
            fn(out);
        }
    };

    if (mine->parsed()) {
        const auto db = load_db(mine_input, mine_catalog);
        std::vector<Rule> rules;
        if (mine_all_pairs) {
            rules = all_pair_rules(db);
        } else {
            rules = rules_single_consequent(
                db, frequent_itemsets(db, mine_min_support));
        }
        const auto measures = checked_measures(mine_measures);
        with_output(mine_out, [&](std::ostream& out) {
            write_rules_csv(out, db.catalog(), rules, measures, mine_delta);
        });
    } else if (sim->parsed()) {
        std::optional<IndependenceModel> model;
        if (!sim_model_in.empty()) {
            model = load_model(sim_model_in);
        } else if (!sim_input.empty()) {
            model = fit(load_db(sim_input, sim_catalog), sim_t);
        } else {
            throw std::runtime_error("simulate: need --input or --model");
        }
        if (!sim_model_out.empty()) save_model(*model, sim_model_out);
        std::cerr << "seed: " << sim_seed << '\n';
        const auto db = simulate(*model, Seed{sim_seed});
        with_output(sim_out, [&](std::ostream& out) { write_basket(db, out); });
    } else if (gen->parsed()) {
        std::cerr << "seed: " << config.seed << '\n';
        const auto [db, log] = generate(config);
        if (!gen_pattern_out.empty()) save_pattern_log(log, gen_pattern_out);
        with_output(gen_out, [&](std::ostream& out) { write_basket(db, out); });
    } else if (eval->parsed()) {
        // The sweep only needs counts, so each file gets its own catalog.
        const auto load_side = [](const std::string& path) {
            const auto labeled = load_rules_csv(path);
            ItemCatalog catalog;
            for (const auto& lr : labeled) {
                for (const auto& l : lr.antecedent) catalog.intern(l);
                for (const auto& l : lr.consequent) catalog.intern(l);
            }
            return resolve_rules(labeled, catalog);
        };
        const auto real_rules = load_side(eval_real);
        const auto null_rules = load_side(eval_null);
        const auto grid =
            eval_grid.empty() ? default_grid(eval_measure) : eval_grid;
        const auto curve =
            sweep(real_rules, null_rules, eval_measure, grid, eval_delta);
        with_output(eval_out, [&](std::ostream& out) {
            if (eval_json)
                out << sweep_to_json(curve) << '\n';
            else
                write_sweep_csv(out, curve);
        });
    } else if (pn->parsed()) {
        const auto log = load_pattern_log(pn_patterns);
        ItemCatalog catalog;
        if (!pn_catalog.empty()) {
            catalog = load_catalog(pn_catalog);
        } else {
            // gen labels items by their decimal id.
            ItemId max_id = 0;
            for (const auto& pattern : log.patterns)
                for (ItemId i : pattern.items) max_id = std::max(max_id, i);
            for (ItemId i = 0; i <= max_id; ++i)
                catalog.intern(std::to_string(i));
            for (const auto& lr : load_rules_csv(pn_rules)) {
                for (const auto& l : lr.antecedent) catalog.intern(l);
                for (const auto& l : lr.consequent) catalog.intern(l);
            }
        }
        const auto rules = resolve_rules(load_rules_csv(pn_rules), catalog);
        const auto grid = pn_grid.empty() ? default_grid(pn_measure) : pn_grid;
        const auto points = pn_graph(rules, log, pn_measure, grid, pn_delta);
        with_output(pn_out, [&](std::ostream& out) {
            if (pn_json)
                out << pn_to_json(points) << '\n';
            else
                write_pn_csv(out, points);
        });
    } else if (measure->parsed()) {
        counts.validate();
        const auto v = compute_measures(counts, measure_delta);
        const auto print = [](const char* name, const std::optional<double>& x) {
            std::cout << name << ": " << (x ? format_number(*x) : "undefined")
                      << '\n';
        };
        print("support", v.support);
        print("confidence", v.confidence);
        print("lift", v.lift);
        print("hyper_lift", v.hyper_lift);
        print("hyper_confidence", v.hyper_confidence);
        print("hyper_confidence_sub", v.hyper_confidence_sub);
        print("chi_square", v.chi_square);
        print("fisher_p", v.fisher_p);
        std::cout << "expected_count: " << format_number(expected_count(counts))
                  << '\n';
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
