#pragma once

#include "collin/dataset.hpp"

#include <Eigen/Dense>

#include <cstddef>
#include <string>
#include <vector>

namespace collin {

inline constexpr const char* kInterceptName = "(Intercept)";

/// Relative tolerance on the pivots of the column-pivoted QR below which the
/// design is treated as rank deficient.
inline constexpr double kRankTolerance = 1e-10;

struct CoefTest {
    std::string name;
    double estimate = 0.0;
    double std_error = 0.0;
    double t_exp = 0.0;    // |estimate| / std_error
    double p_value = 1.0;  // two-sided, Student t with n - k df

    bool operator==(const CoefTest&) const = default;
};

struct FitStatistics {
    double r2 = 0.0;
    double adj_r2 = 0.0;
    double aic = 0.0;
    double f_stat = 0.0;
    double f_p_value = 1.0;
};

struct OlsFit {
    std::size_t n = 0;
    std::size_t k = 0;  // coefficients including intercept
    std::size_t df_resid = 0;
    std::vector<std::string> names;  // intercept first
    Eigen::VectorXd coefficients;
    Eigen::VectorXd std_errors;
    Eigen::VectorXd response;
    Eigen::VectorXd residuals;
    double scr = 0.0;
    double tss = 0.0;
    double sigma_hat = 0.0;
    double r2 = 0.0;
    double adj_r2 = 0.0;
    double aic = 0.0;
    double f_stat = 0.0;
    double f_p_value = 1.0;
    std::vector<CoefTest> coef_tests;
};

/// Least squares with an intercept column prepended, solved by column-pivoted
/// Householder QR. Throws RankDeficient naming the columns the pivoting pushed
/// past the numerical rank, and DegenerateResponse when y is constant.
OlsFit fit_ols(const Dataset& data);

/// R^2 on centered TSS, adjusted R^2, Gaussian-likelihood AIC
/// n ln(2 pi) + n ln(SCR/n) + n + 2 (k + 1), and the global F test.
FitStatistics fit_statistics(const OlsFit& fit, const Dataset& data);

/// Residual sum of squares of regressing target on design. Used by the
/// auxiliary regressions, where a full OlsFit would be wasted work.
double residual_sum_of_squares(const Eigen::MatrixXd& design, const Eigen::VectorXd& target);

/// Two-sided p-value of a Student t statistic.
double t_two_sided_p(double t, double df);

}  // namespace collin
