#pragma once

#include "collin/collinearity.hpp"
#include "collin/inference.hpp"
#include "collin/ols.hpp"
#include "collin/pipeline.hpp"
#include "collin/selection.hpp"
#include "collin/simulation.hpp"

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace collin {

inline constexpr const char* kToolVersion = "0.1.0";

/// Significance level at which selection reports are additionally annotated.
inline constexpr double kAnnotationAlpha = 0.10;

struct FitSummary {
    std::size_t n = 0;
    std::size_t k = 0;
    std::size_t df_resid = 0;
    std::vector<CoefTest> coefficients;
    double scr = 0.0;
    double sigma_hat = 0.0;
    double r2 = 0.0;
    double adj_r2 = 0.0;
    double aic = 0.0;
    double f_stat = 0.0;
    double f_p_value = 1.0;

    bool operator==(const FitSummary&) const = default;
};

FitSummary summarize(const OlsFit& fit);

struct SelectionSummary {
    std::string direction;
    std::string rule;
    double alpha = kDefaultAlpha;
    std::vector<SelectionStep> steps;
    std::vector<std::string> retained;
    FitSummary final_fit;
    std::vector<DecisionRecord> final_decisions;
    /// Same final fit judged at kAnnotationAlpha.
    std::vector<DecisionRecord> annotation_decisions;
    double annotation_alpha = kAnnotationAlpha;

    bool operator==(const SelectionSummary&) const = default;
};

SelectionSummary summarize(const SelectionTrace& trace);

struct Provenance {
    std::string tool_version = kToolVersion;
    std::string command;
    std::optional<std::uint64_t> seed;
    std::string config_hash;  // FNV-1a 64 of the canonical config JSON, hex

    bool operator==(const Provenance&) const = default;
};

/// Everything `diagnose` and `select` print.
struct ReportDocument {
    FitSummary fit;
    CollinearityReport collinearity;
    std::vector<DecisionRecord> decisions;
    std::optional<SelectionSummary> selection;
    Provenance provenance;

    bool operator==(const ReportDocument&) const = default;
};

/// Stamps provenance with the hash of `config`.
Provenance make_provenance(std::string command, const nlohmann::json& config,
                           std::optional<std::uint64_t> seed = std::nullopt);

std::string fnv1a_hex(const std::string& text);

// Non-finite doubles are written as the strings "inf", "-inf" and "nan" so
// every document survives a dump/parse cycle unchanged.
nlohmann::json to_json(const ReportDocument& doc);
ReportDocument report_from_json(const nlohmann::json& j);

nlohmann::json to_json(const FitSummary& fit);
nlohmann::json to_json(const CollinearityReport& report);
nlohmann::json to_json(const std::vector<DecisionRecord>& records);
nlohmann::json to_json(const SelectionSummary& selection);
nlohmann::json to_json(const ModelComparison& comparison);
nlohmann::json to_json(const ExperimentConfig& config);
nlohmann::json to_json(const ExperimentResult& result);
nlohmann::json to_json(const ExamplePipeline& pipeline);

}  // namespace collin
