#include "collin/cli.hpp"

#include "collin/csv.hpp"
#include "collin/errors.hpp"
#include "collin/pipeline.hpp"
#include "collin/report.hpp"
#include "collin/simulation.hpp"
#include "collin/tables.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdint>
#include <optional>

namespace collin {

using nlohmann::json;

namespace {

struct DiagnoseArgs {
    std::string csv;
    std::string response = "y";
    double alpha = kDefaultAlpha;
    double threshold = kDefaultThreshold;
};

struct SelectArgs : DiagnoseArgs {
    std::string rule;
    std::string direction = "backward";
};

struct SimulateArgs {
    std::string design;
    std::size_t n = 0;
    double gamma = 0.0;
    std::uint64_t seed = 0;
    std::string measure = "vif";
    std::optional<std::size_t> max_predictors;
    double threshold = kDefaultThreshold;
    std::size_t replicates = 1;
    std::string x32 = "product";
};

struct ExampleArgs {
    std::size_t n = 50;
    std::uint64_t seed = 0;
    double alpha = kDefaultAlpha;
    std::string x32 = "product";
};

json diagnose_config(const std::string& command, const DiagnoseArgs& a) {
    return {{"command", command},
            {"csv", a.csv},
            {"response", a.response},
            {"alpha", a.alpha},
            {"threshold", a.threshold}};
}

ReportDocument build_report(const Dataset& data, double alpha, double threshold) {
    ReportDocument doc;
    const auto fit = fit_ols(data);
    doc.fit = summarize(fit);
    doc.collinearity = diagnose(data, threshold);
    doc.decisions = decision_table(fit, alpha);
    return doc;
}

void emit(std::ostream& out, const json& j) { out << j.dump(2) << '\n'; }

X32Form x32_form(const std::string& s) {
    return s == "additive" ? X32Form::Additive : X32Form::Product;
}

std::size_t default_max_predictors(Design design, std::size_t n) {
    const std::size_t cap = n >= 2 ? n - 2 : 0;
    switch (design) {
        case Design::IndependentNormals: return std::min<std::size_t>(39, cap);
        case Design::GammaCorrelated: return cap;
        case Design::ExampleModel: return design_constants::kExamplePredictors;
    }
    return cap;
}

json median_threshold(const std::vector<ExperimentResult>& runs, Measure measure, std::size_t n) {
    if (runs.empty()) return nullptr;
    std::vector<double> ks;  // NE counts as n
    for (const auto& r : runs) {
        const auto k = r.threshold_k_for(measure);
        ks.push_back(static_cast<double>(k ? *k : n));
    }
    std::sort(ks.begin(), ks.end());
    const auto m = ks.size();
    return m % 2 ? ks[m / 2] : 0.5 * (ks[m / 2 - 1] + ks[m / 2]);
}

}  // namespace

int cli_dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Multicollinearity diagnostics with the size-adjusted VIF", "collin"};
    app.require_subcommand(1);

    DiagnoseArgs diag;
    auto* diagnose_cmd = app.add_subcommand("diagnose", "Fit OLS and report VIF, aVIF and the decision table");
    diagnose_cmd->add_option("csv", diag.csv, "Input CSV with a header row")->required();
    diagnose_cmd->add_option("--response", diag.response, "Name of the response column")->required();
    diagnose_cmd->add_option("--alpha", diag.alpha, "Significance level")->check(CLI::Range(0.0, 1.0));
    diagnose_cmd->add_option("--threshold", diag.threshold, "VIF/aVIF flag threshold");

    SelectArgs sel;
    auto* select_cmd = app.add_subcommand("select", "Stepwise variable selection");
    select_cmd->add_option("csv", sel.csv, "Input CSV with a header row")->required();
    select_cmd->add_option("--response", sel.response, "Name of the response column");
    select_cmd->add_option("--rule", sel.rule, "Decision rule")
        ->required()
        ->check(CLI::IsMember({"classic", "adjusted"}));
    select_cmd->add_option("--direction", sel.direction, "Selection direction")
        ->check(CLI::IsMember({"backward", "forward"}));
    select_cmd->add_option("--alpha", sel.alpha, "Significance level")->check(CLI::Range(0.0, 1.0));
    select_cmd->add_option("--threshold", sel.threshold, "VIF/aVIF flag threshold");

    SimulateArgs sim;
    auto* simulate_cmd = app.add_subcommand("simulate", "Find the k at which the max VIF/aVIF exceeds the threshold");
    simulate_cmd->add_option("--design", sim.design, "Simulation design")
        ->required()
        ->check(CLI::IsMember({"indep", "gamma", "example"}));
    simulate_cmd->add_option("--n", sim.n, "Observations")->required();
    simulate_cmd->add_option("--gamma", sim.gamma, "Correlation parameter (gamma design)");
    simulate_cmd->add_option("--seed", sim.seed, "RNG seed")->required();
    simulate_cmd->add_option("--measure", sim.measure, "Measure compared to the threshold")
        ->check(CLI::IsMember({"vif", "avif"}));
    simulate_cmd->add_option("--max-predictors", sim.max_predictors, "Largest model size minus one");
    simulate_cmd->add_option("--threshold", sim.threshold, "Threshold");
    simulate_cmd->add_option("--replicates", sim.replicates, "Replicates with derived sub-seeds")
        ->check(CLI::PositiveNumber);
    simulate_cmd->add_option("--x32", sim.x32, "Form of the engineered X32 column (example design)")
        ->check(CLI::IsMember({"product", "additive"}));

    std::string what;
    auto* tables_cmd = app.add_subcommand("tables", "Print an adjustment-factor grid");
    tables_cmd->add_option("--what", what, "Grid to print")
        ->required()
        ->check(CLI::IsMember({"a", "b", "sqrt-a"}));

    std::size_t fig_n = 0;
    std::uint64_t fig_seed = 0;
    std::optional<std::size_t> fig_max;
    auto* figures_cmd = app.add_subcommand("figures", "Max VIF and aVIF series for independent predictors (CSV)");
    figures_cmd->add_option("--n", fig_n, "Observations")->required();
    figures_cmd->add_option("--seed", fig_seed, "RNG seed")->required();
    figures_cmd->add_option("--max-predictors", fig_max, "Predictors generated (default 39)");

    ExampleArgs ex;
    auto* example_cmd = app.add_subcommand("example", "Run the 35-coefficient worked example end to end");
    example_cmd->add_option("--n", ex.n, "Observations (> 35)");
    example_cmd->add_option("--seed", ex.seed, "RNG seed")->required();
    example_cmd->add_option("--alpha", ex.alpha, "Significance level")->check(CLI::Range(0.0, 1.0));
    example_cmd->add_option("--x32", ex.x32, "Form of the engineered X32 column")
        ->check(CLI::IsMember({"product", "additive"}));

    std::vector<const char*> argv;
    argv.reserve(args.size());
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::Success&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "collin: " << e.what() << '\n';
        return kExitUsage;
    }

    try {
        if (*diagnose_cmd) {
            const auto data = load_csv(diag.csv, diag.response);
            auto doc = build_report(data, diag.alpha, diag.threshold);
            doc.provenance = make_provenance("diagnose", diagnose_config("diagnose", diag));
            emit(out, to_json(doc));
        } else if (*select_cmd) {
            const auto data = load_csv(sel.csv, sel.response);
            auto doc = build_report(data, sel.alpha, sel.threshold);
            const auto rule = *parse_rule(sel.rule);
            const auto trace = sel.direction == "forward" ? forward_select(data, rule, sel.alpha)
                                                          : backward_eliminate(data, rule, sel.alpha);
            doc.selection = summarize(trace);
            auto config = diagnose_config("select", sel);
            config["rule"] = sel.rule;
            config["direction"] = sel.direction;
            doc.provenance = make_provenance("select", config);
            emit(out, to_json(doc));
        } else if (*simulate_cmd) {
            ExperimentConfig cfg;
            cfg.design = *parse_design(sim.design);
            cfg.n = sim.n;
            cfg.gamma = sim.gamma;
            cfg.seed = sim.seed;
            cfg.measure = *parse_measure(sim.measure);
            cfg.threshold = sim.threshold;
            cfg.max_predictors = sim.max_predictors.value_or(default_max_predictors(cfg.design, cfg.n));
            cfg.x32_form = x32_form(sim.x32);
            json doc;
            if (sim.replicates == 1) {
                doc = to_json(find_threshold_k(cfg));
            } else {
                const auto runs = run_replicates(cfg, sim.replicates);
                json list = json::array();
                for (const auto& r : runs) list.push_back(to_json(r));
                doc = {{"config", to_json(cfg)},
                       {"replicates", std::move(list)},
                       {"median_threshold_k_vif", median_threshold(runs, Measure::VIF, cfg.n)},
                       {"median_threshold_k_avif", median_threshold(runs, Measure::AVIF, cfg.n)}};
            }
            const auto prov = make_provenance("simulate", to_json(cfg), cfg.seed);
            doc["provenance"] = {{"tool_version", prov.tool_version},
                                 {"command", prov.command},
                                 {"config_hash", prov.config_hash},
                                 {"seed", *prov.seed}};
            emit(out, doc);
        } else if (*tables_cmd) {
            out << format_grid(*parse_grid_kind(what));
        } else if (*figures_cmd) {
            ExperimentConfig cfg;
            cfg.design = Design::IndependentNormals;
            cfg.n = fig_n;
            cfg.seed = fig_seed;
            cfg.max_predictors = fig_max.value_or(default_max_predictors(cfg.design, fig_n));
            write_series_csv(out, run_figure_experiment(cfg).vif);
        } else if (*example_cmd) {
            const auto pipeline = run_example_pipeline(ex.n, ex.seed, ex.alpha, x32_form(ex.x32));
            auto doc = to_json(pipeline);
            const json config = {{"command", "example"},
                                 {"n", ex.n},
                                 {"seed", ex.seed},
                                 {"alpha", ex.alpha},
                                 {"x32", ex.x32}};
            const auto prov = make_provenance("example", config, ex.seed);
            doc["provenance"] = {{"tool_version", prov.tool_version},
                                 {"command", prov.command},
                                 {"config_hash", prov.config_hash},
                                 {"seed", *prov.seed}};
            emit(out, doc);
        }
    } catch (const Error& e) {
        err << "collin: " << e.what() << '\n';
        return kExitData;
    }
    return kExitOk;
}

}  // namespace collin
