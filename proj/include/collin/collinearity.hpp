#pragma once

#include "collin/dataset.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace collin {

inline constexpr double kDefaultThreshold = 10.0;

/// R^2_j at or above 1 - kExactCollinearityTol is reported as exact collinearity.
inline constexpr double kExactCollinearityTol = 1e-12;

/// lambda_min / lambda_max below this makes the condition number infinite.
inline constexpr double kNearSingularRatio = 1e-14;

/// One value per predictor, in the dataset's column order.
struct ColumnValues {
    std::vector<std::string> names;
    std::vector<double> values;

    std::size_t size() const noexcept { return values.size(); }
    double operator[](std::size_t i) const { return values[i]; }
    /// Lookup by label; throws std::out_of_range.
    double at(const std::string& name) const;
    double max() const;

    bool operator==(const ColumnValues&) const = default;
};

/// Weights that correct the VIF for model size:
///   a = (n - k + 1) / (n - 1),  sqrt_a = sqrt(a),  b = 1 / sqrt(a).
struct AdjustmentFactors {
    double a = 1.0;
    double sqrt_a = 1.0;
    double b = 1.0;
};

/// Throws InvalidDesign unless n >= k >= 2. (A model needs n > k; the n == k
/// corner is accepted so the full published grid can be tabulated.)
AdjustmentFactors adjustment_factors(std::size_t n, std::size_t k);

/// VIF(j) = 1 / (1 - R^2_j), R^2_j from regressing predictor j on the remaining
/// predictors plus an intercept. With one predictor the auxiliary regression is
/// intercept-only and VIF = 1.
ColumnValues vif_all(const Dataset& data);

/// a(n, k) * VIF(j).
ColumnValues avif_all(const Dataset& data);
ColumnValues avif_from_vif(const ColumnValues& vif, std::size_t n, std::size_t k);

/// sqrt(lambda_max / lambda_min) of X'X after scaling every column of the
/// intercept-augmented design to unit length. +inf when near singular.
double condition_number(const Dataset& data);

/// Determinant of the predictors' sample correlation matrix.
double correlation_det(const Dataset& data);

struct CollinearityReport {
    ColumnValues vif;
    ColumnValues avif;
    double weight_a = 1.0;
    double condition_number = 1.0;
    double corr_det = 1.0;
    std::size_t n = 0;
    std::size_t k = 0;
    double threshold = kDefaultThreshold;
    std::vector<std::string> vif_flags;   // VIF > threshold
    std::vector<std::string> avif_flags;  // aVIF > threshold
    /// Flagged by the VIF but not by the aVIF: high only because of model size.
    std::vector<std::string> size_driven_flags;

    bool operator==(const CollinearityReport&) const = default;
};

CollinearityReport diagnose(const Dataset& data, double threshold = kDefaultThreshold);

}  // namespace collin
