#pragma once

#include "collin/collinearity.hpp"
#include "collin/dataset.hpp"

#include <Eigen/Dense>

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

namespace collin {

enum class Design { IndependentNormals, GammaCorrelated, ExampleModel };
enum class Measure { VIF, AVIF };

std::string_view to_string(Design design);
std::string_view to_string(Measure measure);
std::optional<Design> parse_design(std::string_view text);  // indep | gamma | example
std::optional<Measure> parse_measure(std::string_view text);  // vif | avif

/// Sampling constants of the three designs.
namespace design_constants {
/// Independent normals: column mean and variance (not sd).
inline constexpr std::array<double, 6> kIndepMeans{-5, -3, -1, 1, 3, 5};
inline constexpr std::array<double, 3> kIndepVariances{1, 9, 15};
/// Gamma-correlated latents: one (mean, sd) pair shared by every latent column.
inline constexpr std::array<double, 4> kLatentParams{2, 3, 4, 5};
/// Example model: base column means and sds, coefficient set, noise sd.
inline constexpr std::array<double, 11> kExampleMeans{-10, -8, -6, -4, -2, 0, 2, 4, 6, 8, 10};
inline constexpr std::array<double, 5> kExampleSds{1, 2, 3, 4, 5};
inline constexpr std::array<double, 9> kExampleBetas{-7, -5, -3, -1, 0, 1, 3, 5, 7};
inline constexpr std::array<double, 4> kPerturbationSds{2, 3, 2, 3};
inline constexpr double kExampleNoiseSd = 7.0;
inline constexpr std::size_t kExampleBase = 30;
inline constexpr std::size_t kExamplePredictors = 34;
}  // namespace design_constants

/// Independent RNG streams derived from one seed, one per role, so that
/// changing one dimension (say the number of columns) never shifts another.
namespace stream {
inline constexpr std::uint64_t kPredictors = 0;
inline constexpr std::uint64_t kResponse = 1;
inline constexpr std::uint64_t kCoefficients = 2;
}  // namespace stream

/// p independent normal columns; each column draws its mean from {+-1, +-3, +-5}
/// and its variance from {1, 9, 15}. Columns are generated one after another,
/// so the first q columns of a p-column draw equal a q-column draw. The
/// response is the column sum plus standard normal noise.
Dataset gen_independent_normals(std::size_t n, std::size_t p, std::uint64_t seed);

/// Predictors X_i = sqrt(1 - gamma^2) M_i + gamma M_j for i = 2..j, where the
/// latent M columns are N(mu, sigma) with a single (mu, sigma) drawn from
/// {2, 3, 4, 5}^2 per seed. Any two of X_2..X_{j-1} correlate at gamma^2 in
/// expectation. The response (column sum plus noise) only fills the shape.
Dataset gen_gamma_correlated(std::size_t n, std::size_t j, double gamma, std::uint64_t seed);

enum class X32Form {
    Product,   // 4 X2 - 3 X3 * X5 + p1
    Additive,  // 4 X2 - 3 X3 + X5 + p1
};

struct ExampleData {
    Dataset data;                        // predictors X2..X35, response y
    Eigen::VectorXd true_coefficients;   // 35 entries, intercept first
    std::vector<double> means;           // of X2..X31
    std::vector<double> sds;             // of X2..X31
    std::array<Eigen::VectorXd, 4> perturbations;  // p1..p4
};

/// 30 independent base predictors plus four engineered near-collinear ones:
///   X32 = 4 X2 - 3 X3 X5 + p1   X33 = X7 - X8 - p2
///   X34 = 5 X10 - 3 X13 - p3    X35 = X15 + X17 + p4
/// and y = X beta + u, u ~ N(0, 7^2), beta drawn from {-7, -5, ..., 7}.
ExampleData gen_example_dataset(std::size_t n, std::uint64_t seed,
                                X32Form form = X32Form::Product);

struct ExperimentConfig {
    Design design = Design::IndependentNormals;
    std::size_t n = 50;
    std::size_t max_predictors = 39;
    double gamma = 0.0;
    std::uint64_t seed = 0;
    double threshold = kDefaultThreshold;
    Measure measure = Measure::VIF;
    /// Stop the sweep at the first exceedance of `measure`. Since aVIF < VIF,
    /// stopping on AVIF still yields both thresholds.
    bool stop_at_exceedance = false;
    X32Form x32_form = X32Form::Product;
};

/// Throws InvalidDims / InvalidGamma on an invalid configuration.
void validate(const ExperimentConfig& config);

struct SeriesPoint {
    std::size_t k = 0;
    double max_vif = 0.0;
    double max_avif = 0.0;
};

struct ExperimentResult {
    ExperimentConfig config;
    std::vector<SeriesPoint> series;  // ascending k
    /// Smallest k whose maximum `config.measure` exceeds the threshold; empty
    /// when no k < n does.
    std::optional<std::size_t> threshold_k;

    std::optional<std::size_t> threshold_k_for(Measure measure) const;
};

/// Sweeps k = 3 .. min(max_predictors + 1, n - 1), computing the maximum VIF
/// and aVIF of the model with the first k - 1 predictors of the design.
ExperimentResult find_threshold_k(const ExperimentConfig& config);

struct FigureSeries {
    ExperimentResult vif;
    ExperimentResult avif;
};

/// One full sweep reported under both measures.
FigureSeries run_figure_experiment(ExperimentConfig config);

/// find_threshold_k for replicates 0..count-1, replicate i seeded with
/// mix_seed(config.seed, i). Runs on worker_count() threads; the output is
/// identical for any thread count.
std::vector<ExperimentResult> run_replicates(const ExperimentConfig& config, std::size_t count);

}  // namespace collin
