#include "collin/pipeline.hpp"

namespace collin {

ExamplePipeline run_example_pipeline(std::size_t n, std::uint64_t seed, double alpha,
                                     X32Form form) {
    ExamplePipeline p{gen_example_dataset(n, seed, form), {}, {}, {}, {}, {}, {}};
    const auto& data = p.example.data;
    p.initial = fit_ols(data);
    p.collinearity = diagnose(data);
    p.decisions = decision_table(p.initial, alpha);
    p.classic = backward_eliminate(data, Rule::Classic, alpha);
    p.adjusted = backward_eliminate(data, Rule::Adjusted, alpha);
    p.comparison = compare_models({p.initial, p.classic.final_fit, p.adjusted.final_fit},
                                  {"initial", "elimination", "stepwise"});
    return p;
}

}  // namespace collin
