#pragma once

#include "collin/ols.hpp"

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace collin {

inline constexpr double kDefaultAlpha = 0.05;

/// Quantile of Student's t with df degrees of freedom, via the inverse
/// regularized incomplete beta function. Throws InvalidProbability unless
/// 0 < p < 1.
double t_quantile(double df, double p);

/// Outcome of testing H0: beta_j = 0 under both decision rules.
///   A: rejected by the classic rule (and therefore by the adjusted one)
///   B: rejected by neither
///   C: rejected only once the critical value is scaled by sqrt(a(n, k))
enum class Option { A, B, C };

std::string_view to_string(Option option);

struct DecisionRecord {
    std::string column;
    double t_exp = 0.0;
    double t_crit = 0.0;   // t_{n-k}(1 - alpha/2)
    double at_crit = 0.0;  // sqrt(a(n, k)) * t_crit
    bool reject_classic = false;
    bool reject_adjusted = false;
    Option option = Option::B;

    bool operator==(const DecisionRecord&) const = default;
};

/// Rejection uses strict inequalities; t_exp equal to a threshold does not reject.
DecisionRecord decide(double t_exp, std::size_t n, std::size_t k, double alpha = kDefaultAlpha);

/// One record per coefficient, intercept first.
std::vector<DecisionRecord> decision_table(const OlsFit& fit, double alpha = kDefaultAlpha);

}  // namespace collin
