#include "collin/selection.hpp"

#include "collin/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace collin {

std::string_view to_string(Rule rule) {
    return rule == Rule::Classic ? "classic" : "adjusted";
}

std::optional<Rule> parse_rule(std::string_view text) {
    if (text == "classic") return Rule::Classic;
    if (text == "adjusted") return Rule::Adjusted;
    return std::nullopt;
}

bool passes(const DecisionRecord& record, Rule rule) {
    return rule == Rule::Classic ? record.reject_classic : record.reject_adjusted;
}

namespace {

SelectionStep make_step(const DecisionRecord& r, std::size_t k_after) {
    return {r.column, r.t_exp, r.t_crit, r.at_crit, k_after};
}

std::vector<std::string> names_of(const Dataset& data, const std::vector<std::size_t>& idx) {
    std::vector<std::string> out;
    out.reserve(idx.size());
    for (auto i : idx) out.push_back(data.names()[i]);
    return out;
}

}  // namespace

SelectionTrace backward_eliminate(const Dataset& data, Rule rule, double alpha) {
    SelectionTrace trace;
    trace.direction = Direction::Backward;
    trace.rule = rule;
    trace.alpha = alpha;

    std::vector<std::size_t> active(data.predictors());
    std::iota(active.begin(), active.end(), std::size_t{0});
    for (;;) {
        auto fit = fit_ols(data.select(active));
        const auto table = decision_table(fit, alpha);
        std::optional<std::size_t> worst;  // position within active
        for (std::size_t i = 1; i < table.size(); ++i) {
            if (passes(table[i], rule)) continue;
            if (!worst || table[i].t_exp < table[*worst + 1].t_exp) worst = i - 1;
        }
        if (!worst) {
            trace.final_fit = std::move(fit);
            break;
        }
        trace.steps.push_back(make_step(table[*worst + 1], fit.k - 1));
        active.erase(active.begin() + static_cast<std::ptrdiff_t>(*worst));
    }
    trace.retained = names_of(data, active);
    return trace;
}

SelectionTrace forward_select(const Dataset& data, Rule rule, double alpha) {
    SelectionTrace trace;
    trace.direction = Direction::Forward;
    trace.rule = rule;
    trace.alpha = alpha;

    std::vector<std::size_t> active;
    std::vector<bool> used(data.predictors(), false);
    for (;;) {
        const std::size_t k_next = active.size() + 2;
        if (data.n() <= k_next) break;

        struct Best {
            std::size_t candidate;
            DecisionRecord record;
        };
        std::optional<Best> best;
        for (std::size_t c = 0; c < data.predictors(); ++c) {
            if (used[c]) continue;
            auto trial = active;
            trial.insert(std::upper_bound(trial.begin(), trial.end(), c), c);
            const auto table = decision_table(fit_ols(data.select(trial)), alpha);
            const auto pos = static_cast<std::size_t>(
                std::find(trial.begin(), trial.end(), c) - trial.begin());
            const auto& rec = table[pos + 1];
            if (!passes(rec, rule)) continue;
            bool others_pass = true;
            for (std::size_t i = 1; i < table.size() && others_pass; ++i)
                if (i != pos + 1 && !passes(table[i], rule)) others_pass = false;
            if (!others_pass) continue;
            if (!best || rec.t_exp > best->record.t_exp) best = Best{c, rec};
        }
        if (!best) break;
        used[best->candidate] = true;
        active.insert(std::upper_bound(active.begin(), active.end(), best->candidate),
                      best->candidate);
        trace.steps.push_back(make_step(best->record, k_next));
    }
    trace.final_fit = fit_ols(data.select(active));
    trace.retained = names_of(data, active);
    return trace;
}

ModelComparison compare_models(const std::vector<OlsFit>& fits,
                               const std::vector<std::string>& labels) {
    ModelComparison cmp;
    if (fits.empty()) return cmp;
    const auto& y = fits.front().response;
    for (const auto& f : fits)
        if (f.response.size() != y.size() || f.response != y) throw MixedResponse();

    const auto m = fits.size();
    for (std::size_t i = 0; i < m; ++i) {
        ModelSummary s;
        s.label = i < labels.size() ? labels[i] : "model " + std::to_string(i + 1);
        s.k = fits[i].k;
        s.r2 = fits[i].r2;
        s.adj_r2 = fits[i].adj_r2;
        s.aic = fits[i].aic;
        cmp.models.push_back(std::move(s));
    }
    // Competition ranking: 1 + number of strictly better models.
    for (auto& s : cmp.models) {
        s.rank_adj_r2 = 1;
        s.rank_aic = 1;
        for (const auto& o : cmp.models) {
            if (o.adj_r2 > s.adj_r2) ++s.rank_adj_r2;
            if (o.aic < s.aic) ++s.rank_aic;
        }
    }
    cmp.ranking.resize(m);
    std::iota(cmp.ranking.begin(), cmp.ranking.end(), std::size_t{0});
    std::stable_sort(cmp.ranking.begin(), cmp.ranking.end(), [&](std::size_t a, std::size_t b) {
        const auto& x = cmp.models[a];
        const auto& z = cmp.models[b];
        if (x.adj_r2 != z.adj_r2) return x.adj_r2 > z.adj_r2;
        return x.aic < z.aic;
    });

    cmp.criteria_agree = std::any_of(cmp.models.begin(), cmp.models.end(), [](const auto& s) {
        return s.rank_adj_r2 == 1 && s.rank_aic == 1;
    });
    if (m >= 2) {
        const auto& first = cmp.models[cmp.ranking[0]];
        const auto& second = cmp.models[cmp.ranking[1]];
        cmp.tie = first.adj_r2 == second.adj_r2 && first.aic == second.aic;
    }
    return cmp;
}

}  // namespace collin
