#include "collin/collinearity.hpp"

#include "collin/errors.hpp"
#include "collin/ols.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace collin {

double ColumnValues::at(const std::string& name) const {
    auto it = std::find(names.begin(), names.end(), name);
    if (it == names.end()) throw std::out_of_range("no column named '" + name + "'");
    return values[static_cast<std::size_t>(it - names.begin())];
}

double ColumnValues::max() const {
    if (values.empty()) return std::numeric_limits<double>::quiet_NaN();
    return *std::max_element(values.begin(), values.end());
}

AdjustmentFactors adjustment_factors(std::size_t n, std::size_t k) {
    // n == k is still a positive weight and fills the corner of the published grid.
    if (k < 2 || n < k)
        throw InvalidDesign("adjustment factors need n >= k >= 2 (n=" + std::to_string(n) +
                            ", k=" + std::to_string(k) + ")");
    AdjustmentFactors f;
    f.a = static_cast<double>(n - k + 1) / static_cast<double>(n - 1);
    f.sqrt_a = std::sqrt(f.a);
    f.b = 1.0 / f.sqrt_a;
    return f;
}

namespace {

void require_predictors(const Dataset& data) {
    if (data.predictors() == 0) throw InvalidDesign("at least one predictor is required");
}

}  // namespace

ColumnValues vif_all(const Dataset& data) {
    require_predictors(data);
    const auto p = static_cast<Eigen::Index>(data.predictors());
    const auto n = static_cast<Eigen::Index>(data.n());
    const auto& cols = data.columns();

    ColumnValues out;
    out.names = data.names();
    out.values.assign(static_cast<std::size_t>(p), 1.0);

    Eigen::MatrixXd aux(n, p);  // [1 | every predictor except j]
    aux.col(0).setOnes();
    for (Eigen::Index j = 0; j < p; ++j) {
        const auto& name = data.names()[static_cast<std::size_t>(j)];
        const Eigen::VectorXd target = cols.col(j);
        const double tss = (target.array() - target.mean()).matrix().squaredNorm();
        if (tss == 0.0) throw ConstantColumn(name);
        if (p == 1) continue;  // intercept-only auxiliary regression: R^2 = 0

        if (j > 0) aux.block(0, 1, n, j) = cols.leftCols(j);
        if (j < p - 1) aux.block(0, 1 + j, n, p - 1 - j) = cols.rightCols(p - 1 - j);
        const double scr = residual_sum_of_squares(aux, target);
        const double r2 = 1.0 - scr / tss;
        if (r2 >= 1.0 - kExactCollinearityTol) throw ExactCollinearity(name);
        out.values[static_cast<std::size_t>(j)] = tss / scr;
    }
    return out;
}

ColumnValues avif_from_vif(const ColumnValues& vif, std::size_t n, std::size_t k) {
    const double a = adjustment_factors(n, k).a;
    ColumnValues out = vif;
    for (auto& v : out.values) v *= a;
    return out;
}

ColumnValues avif_all(const Dataset& data) {
    return avif_from_vif(vif_all(data), data.n(), data.k());
}

double condition_number(const Dataset& data) {
    if (data.n() == 0) throw EmptyDesign();
    Eigen::MatrixXd x = data.design();
    for (Eigen::Index j = 0; j < x.cols(); ++j) {
        const double norm = x.col(j).norm();
        if (norm == 0.0) return std::numeric_limits<double>::infinity();
        x.col(j) /= norm;
    }
    const Eigen::MatrixXd cross = x.transpose() * x;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(cross, Eigen::EigenvaluesOnly);
    const auto& lambda = eig.eigenvalues();  // ascending
    const double lmin = lambda(0);
    const double lmax = lambda(lambda.size() - 1);
    if (!(lmin > kNearSingularRatio * lmax)) return std::numeric_limits<double>::infinity();
    return std::sqrt(lmax / lmin);
}

double correlation_det(const Dataset& data) {
    require_predictors(data);
    Eigen::MatrixXd z = data.columns();
    for (Eigen::Index j = 0; j < z.cols(); ++j) {
        z.col(j).array() -= z.col(j).mean();
        const double norm = z.col(j).norm();
        if (norm == 0.0) throw ConstantColumn(data.names()[static_cast<std::size_t>(j)]);
        z.col(j) /= norm;
    }
    Eigen::MatrixXd corr = z.transpose() * z;
    corr.diagonal().setOnes();
    return corr.partialPivLu().determinant();
}

CollinearityReport diagnose(const Dataset& data, double threshold) {
    CollinearityReport r;
    r.n = data.n();
    r.k = data.k();
    r.threshold = threshold;
    r.weight_a = adjustment_factors(r.n, r.k).a;
    r.vif = vif_all(data);
    r.avif = avif_from_vif(r.vif, r.n, r.k);
    r.condition_number = condition_number(data);
    r.corr_det = correlation_det(data);
    for (std::size_t j = 0; j < r.vif.size(); ++j) {
        const bool by_vif = r.vif[j] > threshold;
        const bool by_avif = r.avif[j] > threshold;
        if (by_vif) r.vif_flags.push_back(r.vif.names[j]);
        if (by_avif) r.avif_flags.push_back(r.vif.names[j]);
        if (by_vif && !by_avif) r.size_driven_flags.push_back(r.vif.names[j]);
    }
    return r;
}

}  // namespace collin
