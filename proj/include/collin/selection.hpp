#pragma once

#include "collin/dataset.hpp"
#include "collin/inference.hpp"
#include "collin/ols.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace collin {

/// Which critical value a coefficient must beat to stay in (or enter) the model.
enum class Rule { Classic, Adjusted };

std::string_view to_string(Rule rule);
std::optional<Rule> parse_rule(std::string_view text);

/// True when the record rejects H0 under the given rule.
bool passes(const DecisionRecord& record, Rule rule);

enum class Direction { Backward, Forward };

struct SelectionStep {
    std::string column;  // removed (backward) or added (forward)
    double t_exp = 0.0;
    double t_crit = 0.0;
    double at_crit = 0.0;
    std::size_t k_after = 0;

    bool operator==(const SelectionStep&) const = default;
};

struct SelectionTrace {
    Direction direction = Direction::Backward;
    Rule rule = Rule::Classic;
    double alpha = kDefaultAlpha;
    std::vector<SelectionStep> steps;
    std::vector<std::string> retained;  // final predictors in dataset order
    OlsFit final_fit;
};

/// Repeatedly refit and drop the single non-intercept coefficient with the
/// smallest t_exp among those failing the rule (ties go to the lower column
/// index) until every retained coefficient passes. The intercept is never dropped.
SelectionTrace backward_eliminate(const Dataset& data, Rule rule, double alpha = kDefaultAlpha);

/// Start from the intercept-only model. At each step refit with every unused
/// candidate and add the one with the largest t_exp among refits where the
/// candidate passes the rule and every coefficient already in the model still
/// passes. Stops when no candidate qualifies or the model would reach n = k.
SelectionTrace forward_select(const Dataset& data, Rule rule, double alpha = kDefaultAlpha);

struct ModelSummary {
    std::string label;
    std::size_t k = 0;
    double r2 = 0.0;
    double adj_r2 = 0.0;
    double aic = 0.0;
    std::size_t rank_adj_r2 = 0;  // 1 = best
    std::size_t rank_aic = 0;

    bool operator==(const ModelSummary&) const = default;
};

struct ModelComparison {
    std::vector<ModelSummary> models;  // input order
    std::vector<std::size_t> ranking;  // indices, by adj_r2 desc then aic asc
    bool criteria_agree = true;        // same best model under both criteria
    bool tie = false;                  // top two indistinguishable on both criteria

    bool operator==(const ModelComparison&) const = default;
};

/// Throws MixedResponse when the fits were estimated on different responses.
ModelComparison compare_models(const std::vector<OlsFit>& fits,
                               const std::vector<std::string>& labels = {});

}  // namespace collin
