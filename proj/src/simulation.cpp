#include "collin/simulation.hpp"

#include "collin/errors.hpp"
#include "collin/parallel.hpp"
#include "collin/rng.hpp"

#include <algorithm>
#include <cmath>
#include <span>
#include <string>

namespace collin {

namespace dc = design_constants;

std::string_view to_string(Design design) {
    switch (design) {
        case Design::IndependentNormals: return "indep";
        case Design::GammaCorrelated: return "gamma";
        case Design::ExampleModel: return "example";
    }
    return "?";
}

std::string_view to_string(Measure measure) {
    return measure == Measure::VIF ? "vif" : "avif";
}

std::optional<Design> parse_design(std::string_view text) {
    if (text == "indep") return Design::IndependentNormals;
    if (text == "gamma") return Design::GammaCorrelated;
    if (text == "example") return Design::ExampleModel;
    return std::nullopt;
}

std::optional<Measure> parse_measure(std::string_view text) {
    if (text == "vif") return Measure::VIF;
    if (text == "avif") return Measure::AVIF;
    return std::nullopt;
}

namespace {

template <std::size_t N>
double pick(SplitMix64& rng, const std::array<double, N>& values) {
    return rng.choice(std::span<const double>(values));
}

SplitMix64 stream_for(std::uint64_t seed, std::uint64_t role) {
    return SplitMix64(mix_seed(seed, role));
}

Eigen::VectorXd normal_column(SplitMix64& rng, std::size_t n, double mean, double sd) {
    Eigen::VectorXd v(static_cast<Eigen::Index>(n));
    for (auto& x : v) x = rng.normal(mean, sd);
    return v;
}

Eigen::VectorXd sum_plus_noise(const Eigen::MatrixXd& columns, std::uint64_t seed) {
    auto rng = stream_for(seed, stream::kResponse);
    Eigen::VectorXd y = columns.rowwise().sum();
    for (auto& v : y) v += rng.normal();
    return y;
}

/// Latent columns M_2..M_{last} of the gamma-correlated design.
class LatentPool {
public:
    LatentPool(std::size_t n, std::size_t last, std::uint64_t seed) {
        auto rng = stream_for(seed, stream::kPredictors);
        const double mean = pick(rng, dc::kLatentParams);
        const double sd = pick(rng, dc::kLatentParams);
        latent_.resize(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(last - 1));
        for (Eigen::Index c = 0; c < latent_.cols(); ++c)
            latent_.col(c) = normal_column(rng, n, mean, sd);
    }

    /// Predictors X_2..X_j sharing latent M_j.
    Eigen::MatrixXd design(std::size_t j, double gamma) const {
        const auto count = static_cast<Eigen::Index>(j - 1);
        const double own = std::sqrt(1.0 - gamma * gamma);
        Eigen::MatrixXd x = own * latent_.leftCols(count);
        x.colwise() += gamma * latent_.col(count - 1);
        return x;
    }

private:
    Eigen::MatrixXd latent_;
};

void check_gamma(double gamma) {
    if (!(gamma >= 0.0 && gamma < 1.0))
        throw InvalidGamma("gamma must lie in [0, 1), got " + std::to_string(gamma));
}

}  // namespace

Dataset gen_independent_normals(std::size_t n, std::size_t p, std::uint64_t seed) {
    if (p < 1 || n <= p + 1)
        throw InvalidDims("independent normals need n > p + 1 and p >= 1 (n=" + std::to_string(n) +
                          ", p=" + std::to_string(p) + ")");
    auto rng = stream_for(seed, stream::kPredictors);
    Eigen::MatrixXd x(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(p));
    for (Eigen::Index c = 0; c < x.cols(); ++c) {
        const double mean = pick(rng, dc::kIndepMeans);
        const double variance = pick(rng, dc::kIndepVariances);
        x.col(c) = normal_column(rng, n, mean, std::sqrt(variance));
    }
    auto y = sum_plus_noise(x, seed);
    return Dataset(std::move(y), std::move(x), default_names(p));
}

Dataset gen_gamma_correlated(std::size_t n, std::size_t j, double gamma, std::uint64_t seed) {
    check_gamma(gamma);
    if (j < 3 || n <= j)
        throw InvalidDims("gamma-correlated design needs n > j >= 3 (n=" + std::to_string(n) +
                          ", j=" + std::to_string(j) + ")");
    LatentPool pool(n, j, seed);
    Eigen::MatrixXd x = pool.design(j, gamma);
    auto y = sum_plus_noise(x, seed);
    return Dataset(std::move(y), std::move(x), default_names(j - 1));
}

ExampleData gen_example_dataset(std::size_t n, std::uint64_t seed, X32Form form) {
    if (n <= dc::kExamplePredictors + 1)
        throw InvalidDims("example design needs n > 35, got n=" + std::to_string(n));
    auto rng = stream_for(seed, stream::kPredictors);
    const auto rows = static_cast<Eigen::Index>(n);
    Eigen::MatrixXd x(rows, static_cast<Eigen::Index>(dc::kExamplePredictors));
    std::vector<double> means, sds;
    for (std::size_t c = 0; c < dc::kExampleBase; ++c) {
        means.push_back(pick(rng, dc::kExampleMeans));
        sds.push_back(pick(rng, dc::kExampleSds));
        x.col(static_cast<Eigen::Index>(c)) = normal_column(rng, n, means.back(), sds.back());
    }
    std::array<Eigen::VectorXd, 4> p;
    for (std::size_t i = 0; i < p.size(); ++i) p[i] = normal_column(rng, n, 0.0, dc::kPerturbationSds[i]);

    // X_m lives in column m - 2.
    auto col = [&](int m) { return x.col(m - 2); };
    if (form == X32Form::Product)
        col(32) = 4.0 * col(2) - 3.0 * col(3).cwiseProduct(col(5)) + p[0];
    else
        col(32) = 4.0 * col(2) - 3.0 * col(3) + col(5) + p[0];
    col(33) = col(7) - col(8) - p[1];
    col(34) = 5.0 * col(10) - 3.0 * col(13) - p[2];
    col(35) = col(15) + col(17) + p[3];

    auto beta_rng = stream_for(seed, stream::kCoefficients);
    Eigen::VectorXd beta(static_cast<Eigen::Index>(dc::kExamplePredictors + 1));
    for (auto& b : beta) b = pick(beta_rng, dc::kExampleBetas);

    auto noise_rng = stream_for(seed, stream::kResponse);
    Eigen::VectorXd y = (x * beta.tail(x.cols())).array() + beta(0);
    for (auto& v : y) v += noise_rng.normal(0.0, dc::kExampleNoiseSd);

    Dataset data(std::move(y), x, default_names(dc::kExamplePredictors));
    return ExampleData{std::move(data), std::move(beta), std::move(means), std::move(sds),
                       std::move(p)};
}

void validate(const ExperimentConfig& config) {
    if (config.n <= 3) throw InvalidDims("n must exceed 3");
    if (config.max_predictors < 2 || config.max_predictors >= config.n)
        throw InvalidDims("max_predictors must lie in [2, n) (got " +
                          std::to_string(config.max_predictors) + " with n=" +
                          std::to_string(config.n) + ")");
    if (config.design == Design::GammaCorrelated) check_gamma(config.gamma);
    if (config.design == Design::ExampleModel) {
        if (config.n <= dc::kExamplePredictors + 1)
            throw InvalidDims("example design needs n > 35");
        if (config.max_predictors > dc::kExamplePredictors)
            throw InvalidDims("example design has 34 predictors");
    }
}

std::optional<std::size_t> ExperimentResult::threshold_k_for(Measure measure) const {
    for (const auto& pt : series) {
        const double v = measure == Measure::VIF ? pt.max_vif : pt.max_avif;
        if (v > config.threshold) return pt.k;
    }
    return std::nullopt;
}

ExperimentResult find_threshold_k(const ExperimentConfig& config) {
    validate(config);
    ExperimentResult result;
    result.config = config;
    const std::size_t last_k = std::min(config.max_predictors + 1, config.n - 1);

    std::optional<Dataset> fixed;
    std::optional<LatentPool> pool;
    switch (config.design) {
        case Design::IndependentNormals:
            fixed = gen_independent_normals(config.n, last_k - 1, config.seed);
            break;
        case Design::GammaCorrelated:
            pool.emplace(config.n, last_k, config.seed);
            break;
        case Design::ExampleModel:
            fixed = gen_example_dataset(config.n, config.seed, config.x32_form).data;
            break;
    }

    for (std::size_t k = 3; k <= last_k; ++k) {
        const Dataset model = pool ? Dataset(Eigen::VectorXd::Zero(static_cast<Eigen::Index>(config.n)),
                                             pool->design(k, config.gamma), default_names(k - 1))
                                   : fixed->first_predictors(k - 1);
        const double max_vif = vif_all(model).max();
        SeriesPoint pt{k, max_vif, adjustment_factors(config.n, k).a * max_vif};
        result.series.push_back(pt);
        const double v = config.measure == Measure::VIF ? pt.max_vif : pt.max_avif;
        if (v > config.threshold) {
            if (!result.threshold_k) result.threshold_k = k;
            if (config.stop_at_exceedance) break;
        }
    }
    return result;
}

FigureSeries run_figure_experiment(ExperimentConfig config) {
    config.stop_at_exceedance = false;
    config.measure = Measure::VIF;
    FigureSeries out{find_threshold_k(config), {}};
    out.avif = out.vif;
    out.avif.config.measure = Measure::AVIF;
    out.avif.threshold_k = out.avif.threshold_k_for(Measure::AVIF);
    return out;
}

std::vector<ExperimentResult> run_replicates(const ExperimentConfig& config, std::size_t count) {
    validate(config);
    std::vector<ExperimentResult> results(count);
    parallel_for(count, [&](std::size_t i) {
        auto cfg = config;
        cfg.seed = mix_seed(config.seed, i);
        results[i] = find_threshold_k(cfg);
    });
    return results;
}

}  // namespace collin
