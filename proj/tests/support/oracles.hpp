#pragma once
// Reference computations for the test suites. Deliberately naive and written
// against plain std::vector so they share no numerical code with the library.

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <numbers>
#include <random>
#include <stdexcept>
#include <utility>
#include <vector>

namespace oracle {

using Mat = std::vector<std::vector<double>>;
using Vec = std::vector<double>;

inline Mat from_eigen(const Eigen::MatrixXd& m) {
    Mat out(m.rows(), Vec(m.cols()));
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j) out[i][j] = m(i, j);
    return out;
}

inline Vec from_eigen(const Eigen::VectorXd& v) { return Vec(v.data(), v.data() + v.size()); }

inline Mat with_intercept(const Mat& cols) {
    Mat out;
    out.reserve(cols.size());
    for (const auto& row : cols) {
        Vec r{1.0};
        r.insert(r.end(), row.begin(), row.end());
        out.push_back(std::move(r));
    }
    return out;
}

inline Mat cross(const Mat& x) {
    const std::size_t p = x.front().size();
    Mat g(p, Vec(p, 0.0));
    for (const auto& row : x)
        for (std::size_t i = 0; i < p; ++i)
            for (std::size_t j = 0; j < p; ++j) g[i][j] += row[i] * row[j];
    return g;
}

/// Gaussian elimination with partial pivoting on a copy of A.
inline Vec solve(Mat a, Vec b) {
    const std::size_t n = a.size();
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        for (std::size_t r = c + 1; r < n; ++r)
            if (std::fabs(a[r][c]) > std::fabs(a[piv][c])) piv = r;
        if (a[piv][c] == 0.0) throw std::runtime_error("oracle: singular system");
        std::swap(a[c], a[piv]);
        std::swap(b[c], b[piv]);
        for (std::size_t r = c + 1; r < n; ++r) {
            const double f = a[r][c] / a[c][c];
            for (std::size_t j = c; j < n; ++j) a[r][j] -= f * a[c][j];
            b[r] -= f * b[c];
        }
    }
    Vec x(n);
    for (std::size_t i = n; i-- > 0;) {
        double s = b[i];
        for (std::size_t j = i + 1; j < n; ++j) s -= a[i][j] * x[j];
        x[i] = s / a[i][i];
    }
    return x;
}

/// Gauss-Jordan inverse.
inline Mat inverse(Mat a) {
    const std::size_t n = a.size();
    Mat inv(n, Vec(n, 0.0));
    for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1.0;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        for (std::size_t r = c + 1; r < n; ++r)
            if (std::fabs(a[r][c]) > std::fabs(a[piv][c])) piv = r;
        std::swap(a[c], a[piv]);
        std::swap(inv[c], inv[piv]);
        const double d = a[c][c];
        for (std::size_t j = 0; j < n; ++j) {
            a[c][j] /= d;
            inv[c][j] /= d;
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == c) continue;
            const double f = a[r][c];
            for (std::size_t j = 0; j < n; ++j) {
                a[r][j] -= f * a[c][j];
                inv[r][j] -= f * inv[c][j];
            }
        }
    }
    return inv;
}

struct Ols {
    Vec beta;
    Vec se;
    double scr = 0.0;
};

/// Normal equations (X'X) b = X'y; X already holds the intercept column.
inline Ols normal_equations(const Mat& x, const Vec& y) {
    const std::size_t n = x.size(), p = x.front().size();
    const Mat g = cross(x);
    Vec xty(p, 0.0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < p; ++j) xty[j] += x[i][j] * y[i];
    Ols out;
    out.beta = solve(g, xty);
    for (std::size_t i = 0; i < n; ++i) {
        double fit = 0.0;
        for (std::size_t j = 0; j < p; ++j) fit += x[i][j] * out.beta[j];
        out.scr += (y[i] - fit) * (y[i] - fit);
    }
    const double s2 = out.scr / static_cast<double>(n - p);
    const Mat ginv = inverse(g);
    for (std::size_t j = 0; j < p; ++j) out.se.push_back(std::sqrt(s2 * ginv[j][j]));
    return out;
}

inline Mat correlation(const Mat& cols) {
    const std::size_t n = cols.size(), p = cols.front().size();
    Vec mean(p, 0.0), sd(p, 0.0);
    for (const auto& row : cols)
        for (std::size_t j = 0; j < p; ++j) mean[j] += row[j] / static_cast<double>(n);
    Mat c(p, Vec(p, 0.0));
    for (const auto& row : cols)
        for (std::size_t i = 0; i < p; ++i)
            for (std::size_t j = 0; j < p; ++j) c[i][j] += (row[i] - mean[i]) * (row[j] - mean[j]);
    for (std::size_t j = 0; j < p; ++j) sd[j] = std::sqrt(c[j][j]);
    for (std::size_t i = 0; i < p; ++i)
        for (std::size_t j = 0; j < p; ++j) c[i][j] /= sd[i] * sd[j];
    return c;
}

/// VIFs as the diagonal of the inverse correlation matrix.
inline Vec vif(const Mat& cols) {
    const Mat inv = inverse(correlation(cols));
    Vec out;
    for (std::size_t j = 0; j < inv.size(); ++j) out.push_back(inv[j][j]);
    return out;
}

/// Laplace cofactor expansion along the first row. Exponential, so only for
/// the small matrices the tests use.
inline double det_cofactor(const Mat& a) {
    const std::size_t n = a.size();
    if (n == 1) return a[0][0];
    if (n == 2) return a[0][0] * a[1][1] - a[0][1] * a[1][0];
    double det = 0.0;
    for (std::size_t c = 0; c < n; ++c) {
        Mat minor;
        for (std::size_t r = 1; r < n; ++r) {
            Vec row;
            for (std::size_t j = 0; j < n; ++j)
                if (j != c) row.push_back(a[r][j]);
            minor.push_back(std::move(row));
        }
        det += (c % 2 ? -1.0 : 1.0) * a[0][c] * det_cofactor(minor);
    }
    return det;
}

/// sigma_max / sigma_min of the unit-length-scaled matrix.
inline double condition_svd(const Mat& x) {
    Eigen::MatrixXd m(x.size(), x.front().size());
    for (std::size_t i = 0; i < x.size(); ++i)
        for (std::size_t j = 0; j < x[i].size(); ++j) m(i, j) = x[i][j];
    for (Eigen::Index j = 0; j < m.cols(); ++j) m.col(j) /= m.col(j).norm();
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(m);
    const auto& s = svd.singularValues();
    return s(0) / s(s.size() - 1);
}

inline double t_density(double t, double df) {
    const double c = std::lgamma((df + 1) / 2) - std::lgamma(df / 2) - 0.5 * std::log(df * std::numbers::pi);
    return std::exp(c - (df + 1) / 2 * std::log1p(t * t / df));
}

inline double simpson(const std::function<double(double)>& f, double a, double b, double fa,
                      double fm, double fb, double whole, double eps, int depth) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    const double flm = f(lm), frm = f(rm);
    const double left = (m - a) / 6 * (fa + 4 * flm + fm);
    const double right = (b - m) / 6 * (fm + 4 * frm + fb);
    if (depth <= 0 || std::fabs(left + right - whole) <= 15 * eps)
        return left + right + (left + right - whole) / 15;
    return simpson(f, a, m, fa, flm, fm, left, eps / 2, depth - 1) +
           simpson(f, m, b, fm, frm, fb, right, eps / 2, depth - 1);
}

inline double integrate(const std::function<double(double)>& f, double a, double b, double eps) {
    const double fa = f(a), fb = f(b), fm = f(0.5 * (a + b));
    return simpson(f, a, b, fa, fm, fb, (b - a) / 6 * (fa + 4 * fm + fb), eps, 50);
}

inline double t_cdf(double t, double df) {
    if (t == 0.0) return 0.5;
    const double half = integrate([df](double x) { return t_density(x, df); }, 0.0, std::fabs(t), 1e-14);
    return t > 0 ? 0.5 + half : 0.5 - half;
}

/// Bisection on the quadrature CDF.
inline double t_quantile(double df, double p) {
    double lo = 0.0, hi = 1.0;
    const double target = p < 0.5 ? 1.0 - p : p;
    while (t_cdf(hi, df) < target) hi *= 2;
    for (int i = 0; i < 200 && hi - lo > 1e-12; ++i) {
        const double mid = 0.5 * (lo + hi);
        (t_cdf(mid, df) < target ? lo : hi) = mid;
    }
    const double t = 0.5 * (lo + hi);
    return p < 0.5 ? -t : t;
}

/// Kolmogorov-Smirnov distance of a sample from Uniform(0, 1).
inline double ks_uniform(Vec sample) {
    std::sort(sample.begin(), sample.end());
    const double m = static_cast<double>(sample.size());
    double d = 0.0;
    for (std::size_t i = 0; i < sample.size(); ++i) {
        d = std::max(d, (i + 1) / m - sample[i]);
        d = std::max(d, sample[i] - i / m);
    }
    return d;
}

/// Random predictor matrix with mild correlation, from a std engine.
inline Eigen::MatrixXd random_columns(std::mt19937_64& rng, std::size_t n, std::size_t p) {
    std::normal_distribution<double> z;
    std::uniform_real_distribution<double> u(-0.6, 0.6);
    Eigen::MatrixXd x(n, p);
    for (std::size_t j = 0; j < p; ++j)
        for (std::size_t i = 0; i < n; ++i) x(i, j) = z(rng);
    // mix columns so the VIFs are not all near 1
    for (std::size_t j = 1; j < p; ++j) x.col(j) += u(rng) * x.col(j - 1);
    for (std::size_t j = 0; j < p; ++j) x.col(j) = x.col(j) * (1.0 + 3.0 * (u(rng) + 0.6)) + Eigen::VectorXd::Constant(n, 5.0 * u(rng));
    return x;
}

}  // namespace oracle
