#include "collin/report.hpp"

#include <cmath>
#include <cstdio>
#include <limits>

namespace collin {

using nlohmann::json;

namespace {

json num(double v) {
    if (std::isfinite(v)) return v;
    if (std::isnan(v)) return "nan";
    return v > 0 ? "inf" : "-inf";
}

double get_num(const json& j) {
    if (j.is_number()) return j.get<double>();
    const auto s = j.get<std::string>();
    if (s == "inf") return std::numeric_limits<double>::infinity();
    if (s == "-inf") return -std::numeric_limits<double>::infinity();
    if (s == "nan") return std::numeric_limits<double>::quiet_NaN();
    throw json::type_error::create(302, "expected a number, got '" + s + "'", &j);
}

json to_json(const CoefTest& t) {
    return {{"name", t.name},
            {"estimate", num(t.estimate)},
            {"std_error", num(t.std_error)},
            {"t_exp", num(t.t_exp)},
            {"p_value", num(t.p_value)}};
}

CoefTest coef_from_json(const json& j) {
    return {j.at("name").get<std::string>(), get_num(j.at("estimate")),
            get_num(j.at("std_error")), get_num(j.at("t_exp")), get_num(j.at("p_value"))};
}

json to_json(const DecisionRecord& r) {
    return {{"column", r.column},
            {"t_exp", num(r.t_exp)},
            {"t_crit", num(r.t_crit)},
            {"at_crit", num(r.at_crit)},
            {"reject_classic", r.reject_classic},
            {"reject_adjusted", r.reject_adjusted},
            {"option", std::string(to_string(r.option))}};
}

Option option_from(const std::string& s) {
    if (s == "a") return Option::A;
    if (s == "c") return Option::C;
    return Option::B;
}

DecisionRecord decision_from_json(const json& j) {
    DecisionRecord r;
    r.column = j.at("column").get<std::string>();
    r.t_exp = get_num(j.at("t_exp"));
    r.t_crit = get_num(j.at("t_crit"));
    r.at_crit = get_num(j.at("at_crit"));
    r.reject_classic = j.at("reject_classic").get<bool>();
    r.reject_adjusted = j.at("reject_adjusted").get<bool>();
    r.option = option_from(j.at("option").get<std::string>());
    return r;
}

std::vector<DecisionRecord> decisions_from_json(const json& j) {
    std::vector<DecisionRecord> out;
    for (const auto& e : j) out.push_back(decision_from_json(e));
    return out;
}

json to_json(const ColumnValues& v) {
    json out = json::object();
    for (std::size_t i = 0; i < v.size(); ++i) out[v.names[i]] = num(v.values[i]);
    return out;
}

// Objects come back key-sorted, so column order travels separately.
ColumnValues column_values_from_json(const json& j, const std::vector<std::string>& order) {
    ColumnValues v;
    for (const auto& name : order) {
        v.names.push_back(name);
        v.values.push_back(get_num(j.at(name)));
    }
    return v;
}

FitSummary fit_from_json(const json& j) {
    FitSummary f;
    f.n = j.at("n").get<std::size_t>();
    f.k = j.at("k").get<std::size_t>();
    f.df_resid = j.at("df_resid").get<std::size_t>();
    for (const auto& c : j.at("coefficients")) f.coefficients.push_back(coef_from_json(c));
    f.scr = get_num(j.at("scr"));
    f.sigma_hat = get_num(j.at("sigma_hat"));
    f.r2 = get_num(j.at("r2"));
    f.adj_r2 = get_num(j.at("adj_r2"));
    f.aic = get_num(j.at("aic"));
    f.f_stat = get_num(j.at("f_stat"));
    f.f_p_value = get_num(j.at("f_p_value"));
    return f;
}

CollinearityReport collinearity_from_json(const json& j) {
    CollinearityReport r;
    const auto order = j.at("columns").get<std::vector<std::string>>();
    r.vif = column_values_from_json(j.at("vif"), order);
    r.avif = column_values_from_json(j.at("avif"), order);
    r.weight_a = get_num(j.at("weight_a"));
    r.condition_number = get_num(j.at("condition_number"));
    r.corr_det = get_num(j.at("corr_det"));
    r.n = j.at("n").get<std::size_t>();
    r.k = j.at("k").get<std::size_t>();
    r.threshold = get_num(j.at("threshold"));
    r.vif_flags = j.at("vif_flags").get<std::vector<std::string>>();
    r.avif_flags = j.at("avif_flags").get<std::vector<std::string>>();
    r.size_driven_flags = j.at("size_driven_flags").get<std::vector<std::string>>();
    return r;
}

SelectionSummary selection_from_json(const json& j) {
    SelectionSummary s;
    s.direction = j.at("direction").get<std::string>();
    s.rule = j.at("rule").get<std::string>();
    s.alpha = get_num(j.at("alpha"));
    for (const auto& e : j.at("steps"))
        s.steps.push_back({e.at("column").get<std::string>(), get_num(e.at("t_exp")),
                           get_num(e.at("t_crit")), get_num(e.at("at_crit")),
                           e.at("k_after").get<std::size_t>()});
    s.retained = j.at("retained").get<std::vector<std::string>>();
    s.final_fit = fit_from_json(j.at("final_fit"));
    s.final_decisions = decisions_from_json(j.at("final_decisions"));
    s.annotation_alpha = get_num(j.at("annotation_alpha"));
    s.annotation_decisions = decisions_from_json(j.at("annotation_decisions"));
    return s;
}

}  // namespace

FitSummary summarize(const OlsFit& fit) {
    return {fit.n,   fit.k,      fit.df_resid, fit.coef_tests, fit.scr,      fit.sigma_hat,
            fit.r2,  fit.adj_r2, fit.aic,      fit.f_stat,     fit.f_p_value};
}

SelectionSummary summarize(const SelectionTrace& trace) {
    SelectionSummary s;
    s.direction = trace.direction == Direction::Backward ? "backward" : "forward";
    s.rule = std::string(to_string(trace.rule));
    s.alpha = trace.alpha;
    s.steps = trace.steps;
    s.retained = trace.retained;
    s.final_fit = summarize(trace.final_fit);
    s.final_decisions = decision_table(trace.final_fit, trace.alpha);
    s.annotation_decisions = decision_table(trace.final_fit, s.annotation_alpha);
    return s;
}

std::string fnv1a_hex(const std::string& text) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : text) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

Provenance make_provenance(std::string command, const json& config,
                           std::optional<std::uint64_t> seed) {
    Provenance p;
    p.command = std::move(command);
    p.seed = seed;
    p.config_hash = fnv1a_hex(config.dump());
    return p;
}

json to_json(const FitSummary& f) {
    json coefs = json::array();
    for (const auto& c : f.coefficients) coefs.push_back(to_json(c));
    return {{"n", f.n},
            {"k", f.k},
            {"df_resid", f.df_resid},
            {"coefficients", std::move(coefs)},
            {"scr", num(f.scr)},
            {"sigma_hat", num(f.sigma_hat)},
            {"r2", num(f.r2)},
            {"adj_r2", num(f.adj_r2)},
            {"aic", num(f.aic)},
            {"f_stat", num(f.f_stat)},
            {"f_p_value", num(f.f_p_value)}};
}

json to_json(const CollinearityReport& r) {
    return {{"columns", r.vif.names},
            {"vif", to_json(r.vif)},
            {"avif", to_json(r.avif)},
            {"weight_a", num(r.weight_a)},
            {"condition_number", num(r.condition_number)},
            {"corr_det", num(r.corr_det)},
            {"n", r.n},
            {"k", r.k},
            {"threshold", num(r.threshold)},
            {"vif_flags", r.vif_flags},
            {"avif_flags", r.avif_flags},
            {"size_driven_flags", r.size_driven_flags}};
}

json to_json(const std::vector<DecisionRecord>& records) {
    json out = json::array();
    for (const auto& r : records) out.push_back(to_json(r));
    return out;
}

json to_json(const SelectionSummary& s) {
    json steps = json::array();
    for (const auto& st : s.steps)
        steps.push_back({{"column", st.column},
                         {"t_exp", num(st.t_exp)},
                         {"t_crit", num(st.t_crit)},
                         {"at_crit", num(st.at_crit)},
                         {"k_after", st.k_after}});
    return {{"direction", s.direction},
            {"rule", s.rule},
            {"alpha", num(s.alpha)},
            {"steps", std::move(steps)},
            {"retained", s.retained},
            {"final_fit", to_json(s.final_fit)},
            {"final_decisions", to_json(s.final_decisions)},
            {"annotation_alpha", num(s.annotation_alpha)},
            {"annotation_decisions", to_json(s.annotation_decisions)}};
}

json to_json(const ModelComparison& c) {
    json models = json::array();
    for (const auto& m : c.models)
        models.push_back({{"label", m.label},
                          {"k", m.k},
                          {"r2", num(m.r2)},
                          {"adj_r2", num(m.adj_r2)},
                          {"aic", num(m.aic)},
                          {"rank_adj_r2", m.rank_adj_r2},
                          {"rank_aic", m.rank_aic}});
    return {{"models", std::move(models)},
            {"ranking", c.ranking},
            {"criteria_agree", c.criteria_agree},
            {"tie", c.tie}};
}

json to_json(const ReportDocument& doc) {
    json prov = {{"tool_version", doc.provenance.tool_version},
                 {"command", doc.provenance.command},
                 {"config_hash", doc.provenance.config_hash},
                 {"seed", doc.provenance.seed ? json(*doc.provenance.seed) : json(nullptr)}};
    json out = {{"fit", to_json(doc.fit)},
                {"collinearity", to_json(doc.collinearity)},
                {"decisions", to_json(doc.decisions)},
                {"provenance", std::move(prov)}};
    out["selection"] = doc.selection ? to_json(*doc.selection) : json(nullptr);
    return out;
}

ReportDocument report_from_json(const json& j) {
    ReportDocument doc;
    doc.fit = fit_from_json(j.at("fit"));
    doc.collinearity = collinearity_from_json(j.at("collinearity"));
    doc.decisions = decisions_from_json(j.at("decisions"));
    if (!j.at("selection").is_null()) doc.selection = selection_from_json(j.at("selection"));
    const auto& p = j.at("provenance");
    doc.provenance.tool_version = p.at("tool_version").get<std::string>();
    doc.provenance.command = p.at("command").get<std::string>();
    doc.provenance.config_hash = p.at("config_hash").get<std::string>();
    if (!p.at("seed").is_null()) doc.provenance.seed = p.at("seed").get<std::uint64_t>();
    return doc;
}

json to_json(const ExperimentConfig& c) {
    return {{"design", std::string(to_string(c.design))},
            {"n", c.n},
            {"max_predictors", c.max_predictors},
            {"gamma", num(c.gamma)},
            {"seed", c.seed},
            {"threshold", num(c.threshold)},
            {"measure", std::string(to_string(c.measure))},
            {"stop_at_exceedance", c.stop_at_exceedance},
            {"x32_form", c.x32_form == X32Form::Product ? "product" : "additive"}};
}

json to_json(const ExperimentResult& r) {
    json series = json::array();
    for (const auto& pt : r.series)
        series.push_back({{"k", pt.k}, {"max_vif", num(pt.max_vif)}, {"max_avif", num(pt.max_avif)}});
    const auto opt = [](std::optional<std::size_t> v) { return v ? json(*v) : json(nullptr); };
    return {{"config", to_json(r.config)},
            {"seed", r.config.seed},
            {"series", std::move(series)},
            {"threshold_k", opt(r.threshold_k)},
            {"threshold_k_vif", opt(r.threshold_k_for(Measure::VIF))},
            {"threshold_k_avif", opt(r.threshold_k_for(Measure::AVIF))}};
}

json to_json(const ExamplePipeline& p) {
    const auto& ex = p.example;
    json truth = json::array();
    for (Eigen::Index i = 0; i < ex.true_coefficients.size(); ++i) truth.push_back(ex.true_coefficients(i));
    return {{"design", {{"means", ex.means}, {"sds", ex.sds}, {"true_coefficients", std::move(truth)}}},
            {"initial", to_json(summarize(p.initial))},
            {"collinearity", to_json(p.collinearity)},
            {"decisions", to_json(p.decisions)},
            {"elimination", to_json(summarize(p.classic))},
            {"stepwise", to_json(summarize(p.adjusted))},
            {"comparison", to_json(p.comparison)}};
}

}  // namespace collin
