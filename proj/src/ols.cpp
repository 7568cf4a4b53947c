#include "collin/ols.hpp"

#include "collin/errors.hpp"

#include <boost/math/special_functions/beta.hpp>

#include <algorithm>
#include <cmath>
#include <numbers>

namespace collin {

namespace {

Eigen::ColPivHouseholderQR<Eigen::MatrixXd> decompose(const Eigen::MatrixXd& x) {
    Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(x.rows(), x.cols());
    qr.setThreshold(kRankTolerance);
    qr.compute(x);
    return qr;
}

}  // namespace

double t_two_sided_p(double t, double df) {
    if (!std::isfinite(t)) return 0.0;
    const double t2 = t * t;
    return boost::math::ibeta(df / 2.0, 0.5, df / (df + t2));
}

OlsFit fit_ols(const Dataset& data) {
    const Eigen::MatrixXd x = data.design();
    const auto& y = data.response();
    const auto n = data.n();
    const auto k = data.k();

    std::vector<std::string> names;
    names.reserve(k);
    names.emplace_back(kInterceptName);
    names.insert(names.end(), data.names().begin(), data.names().end());

    auto qr = decompose(x);
    const auto rank = static_cast<std::size_t>(qr.rank());
    if (rank < k) {
        std::vector<std::string> dependent;
        const auto& perm = qr.colsPermutation().indices();
        for (auto i = static_cast<Eigen::Index>(rank); i < perm.size(); ++i)
            dependent.push_back(names[static_cast<std::size_t>(perm(i))]);
        throw RankDeficient(std::move(dependent), rank);
    }

    OlsFit fit;
    fit.n = n;
    fit.k = k;
    fit.df_resid = n - k;
    fit.names = std::move(names);
    fit.coefficients = qr.solve(y);
    fit.response = y;
    fit.residuals = y - x * fit.coefficients;
    fit.scr = fit.residuals.squaredNorm();
    fit.tss = (y.array() - y.mean()).matrix().squaredNorm();
    fit.sigma_hat = std::sqrt(fit.scr / static_cast<double>(fit.df_resid));

    // diag((X'X)^-1) = squared row norms of R^-1, mapped back through the pivots.
    const auto kk = static_cast<Eigen::Index>(k);
    const Eigen::MatrixXd r = qr.matrixR().topLeftCorner(kk, kk).triangularView<Eigen::Upper>();
    const Eigen::MatrixXd r_inv =
        r.triangularView<Eigen::Upper>().solve(Eigen::MatrixXd::Identity(kk, kk));
    fit.std_errors.resize(kk);
    const auto& perm = qr.colsPermutation().indices();
    for (Eigen::Index i = 0; i < kk; ++i)
        fit.std_errors(perm(i)) = fit.sigma_hat * r_inv.row(i).norm();

    fit.coef_tests.reserve(k);
    const auto df = static_cast<double>(fit.df_resid);
    for (std::size_t j = 0; j < k; ++j) {
        const auto jj = static_cast<Eigen::Index>(j);
        CoefTest test;
        test.name = fit.names[j];
        test.estimate = fit.coefficients(jj);
        test.std_error = fit.std_errors(jj);
        test.t_exp = std::abs(test.estimate) / test.std_error;
        if (std::isnan(test.t_exp)) test.t_exp = 0.0;  // 0/0 on an exact fit
        test.p_value = t_two_sided_p(test.t_exp, df);
        fit.coef_tests.push_back(std::move(test));
    }

    const auto stats = fit_statistics(fit, data);
    fit.r2 = stats.r2;
    fit.adj_r2 = stats.adj_r2;
    fit.aic = stats.aic;
    fit.f_stat = stats.f_stat;
    fit.f_p_value = stats.f_p_value;
    return fit;
}

FitStatistics fit_statistics(const OlsFit& fit, const Dataset& data) {
    const auto& y = data.response();
    const double tss = (y.array() - y.mean()).matrix().squaredNorm();
    if (tss == 0.0) throw DegenerateResponse();

    const auto n = static_cast<double>(data.n());
    const auto k = static_cast<double>(data.k());
    FitStatistics s;
    s.r2 = std::clamp(1.0 - fit.scr / tss, 0.0, 1.0);
    s.adj_r2 = 1.0 - (n - 1.0) / (n - k) * (1.0 - s.r2);
    s.aic = n * std::log(2.0 * std::numbers::pi) + n * std::log(fit.scr / n) + n + 2.0 * (k + 1.0);
    if (data.k() >= 2) {
        const double d1 = k - 1.0;
        const double d2 = n - k;
        const double explained = std::max(tss - fit.scr, 0.0);
        s.f_stat = (explained / d1) / (fit.scr / d2);
        // P(F > f) = I_{d2 / (d2 + d1 f)}(d2/2, d1/2)
        s.f_p_value = std::isfinite(s.f_stat)
                          ? boost::math::ibeta(d2 / 2.0, d1 / 2.0, d2 / (d2 + d1 * s.f_stat))
                          : 0.0;
    }
    return s;
}

double residual_sum_of_squares(const Eigen::MatrixXd& design, const Eigen::VectorXd& target) {
    auto qr = decompose(design);
    const Eigen::VectorXd coef = qr.solve(target);
    return (target - design * coef).squaredNorm();
}

}  // namespace collin
