#include "collin/inference.hpp"

#include "collin/collinearity.hpp"
#include "collin/errors.hpp"

#include <boost/math/special_functions/beta.hpp>

#include <algorithm>
#include <cmath>

namespace collin {

double t_quantile(double df, double p) {
    if (!(p > 0.0 && p < 1.0))
        throw InvalidProbability("probability must lie in (0, 1), got " + std::to_string(p));
    if (!(df > 0.0)) throw InvalidDesign("degrees of freedom must be positive");
    if (p == 0.5) return 0.0;
    // P(|T| > t) = I_{df/(df+t^2)}(df/2, 1/2), so invert for the two-sided tail.
    const double tail = 2.0 * std::min(p, 1.0 - p);
    const double x = boost::math::ibeta_inv(df / 2.0, 0.5, tail);
    const double t = std::sqrt(df * (1.0 - x) / x);
    return p > 0.5 ? t : -t;
}

std::string_view to_string(Option option) {
    switch (option) {
        case Option::A: return "a";
        case Option::B: return "b";
        case Option::C: return "c";
    }
    return "?";
}

namespace {

DecisionRecord classify(double t_exp, double df, double sqrt_a, double alpha) {
    if (!(alpha > 0.0 && alpha < 1.0))
        throw InvalidProbability("alpha must lie in (0, 1), got " + std::to_string(alpha));
    if (!(t_exp >= 0.0)) throw InvalidDesign("t_exp must be non-negative");
    DecisionRecord r;
    r.t_exp = t_exp;
    r.t_crit = t_quantile(df, 1.0 - alpha / 2.0);
    r.at_crit = sqrt_a * r.t_crit;
    r.reject_classic = t_exp > r.t_crit;
    r.reject_adjusted = t_exp > r.at_crit;
    if (r.reject_classic)
        r.option = Option::A;
    else if (r.reject_adjusted)
        r.option = Option::C;
    else
        r.option = Option::B;
    return r;
}

}  // namespace

DecisionRecord decide(double t_exp, std::size_t n, std::size_t k, double alpha) {
    if (n <= k)
        throw InvalidDesign("decision rule needs n > k (n=" + std::to_string(n) + ", k=" +
                            std::to_string(k) + ")");
    const auto factors = adjustment_factors(n, k);
    return classify(t_exp, static_cast<double>(n - k), factors.sqrt_a, alpha);
}

std::vector<DecisionRecord> decision_table(const OlsFit& fit, double alpha) {
    // An intercept-only fit (k = 1) has no size correction to apply.
    const double sqrt_a = fit.k >= 2 ? adjustment_factors(fit.n, fit.k).sqrt_a : 1.0;
    const auto df = static_cast<double>(fit.df_resid);
    std::vector<DecisionRecord> table;
    table.reserve(fit.coef_tests.size());
    for (const auto& test : fit.coef_tests) {
        auto r = classify(test.t_exp, df, sqrt_a, alpha);
        r.column = test.name;
        table.push_back(std::move(r));
    }
    return table;
}

}  // namespace collin
