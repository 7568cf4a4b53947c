#pragma once

#include "collin/collinearity.hpp"
#include "collin/inference.hpp"
#include "collin/selection.hpp"
#include "collin/simulation.hpp"

#include <cstddef>
#include <cstdint>
#include <vector>

namespace collin {

/// The worked example end to end: generate the 35-coefficient design, fit
/// it, then reduce it by backward elimination under each decision rule and
/// compare the three fits.
struct ExamplePipeline {
    ExampleData example;
    OlsFit initial;
    CollinearityReport collinearity;
    std::vector<DecisionRecord> decisions;
    SelectionTrace classic;
    SelectionTrace adjusted;
    ModelComparison comparison;  // initial, classic elimination, adjusted stepwise
};

ExamplePipeline run_example_pipeline(std::size_t n, std::uint64_t seed,
                                     double alpha = kDefaultAlpha,
                                     X32Form form = X32Form::Product);

}  // namespace collin
