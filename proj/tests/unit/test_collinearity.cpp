#include <catch_amalgamated.hpp>

#include "fixtures.hpp"
#include "oracles.hpp"

#include <collin/collinearity.hpp>
#include <collin/errors.hpp>
#include <collin/ols.hpp>

#include <cmath>
#include <limits>

using namespace collin;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace {

// Zero-mean, mutually orthogonal +-1 columns (Walsh functions on `rows`
// points, rows a power of two, cols < rows).
Eigen::MatrixXd walsh(Eigen::Index cols, Eigen::Index rows = 8) {
    Eigen::MatrixXd w(rows, cols);
    for (Eigen::Index i = 0; i < rows; ++i)
        for (Eigen::Index j = 0; j < cols; ++j) {
            const int bits = static_cast<int>(i & (j + 1));
            w(i, j) = (__builtin_popcount(bits) % 2) ? -1.0 : 1.0;
        }
    return w;
}

Dataset with_noise_response(const Eigen::MatrixXd& x, std::uint64_t seed = 5) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> z;
    Eigen::VectorXd y(x.rows());
    for (Eigen::Index i = 0; i < y.size(); ++i) y(i) = z(rng);
    return {y, x, default_names(static_cast<std::size_t>(x.cols()))};
}

}  // namespace

TEST_CASE("adjustment factors") {
    CHECK_THAT(adjustment_factors(15, 3).a, WithinAbs(0.929, 0.001));
    CHECK_THAT(adjustment_factors(50, 35).a, WithinAbs(16.0 / 49.0, 1e-15));
    const auto two = adjustment_factors(80, 2);
    CHECK(two.a == 1.0);
    CHECK(two.b == 1.0);
    const auto f = adjustment_factors(40, 9);
    CHECK_THAT(f.sqrt_a * f.sqrt_a, WithinRel(f.a, 1e-15));
    CHECK_THAT(f.b * f.sqrt_a, WithinRel(1.0, 1e-15));
    CHECK_THAT(adjustment_factors(15, 15).a, WithinAbs(1.0 / 14.0, 1e-15));
    CHECK_THROWS_AS(adjustment_factors(10, 11), InvalidDesign);
    CHECK_THROWS_AS(adjustment_factors(10, 1), InvalidDesign);
}

TEST_CASE("adjustment factor monotonicity over the grid") {
    for (std::size_t n = 15; n <= 200; n += 5)
        for (std::size_t k = 3; k <= 15; ++k) {
            const double a = adjustment_factors(n, k).a;
            CHECK(a > 0.0);
            CHECK(a <= 1.0);
            if (n + 5 <= 200) CHECK(adjustment_factors(n + 5, k).a > a);
            if (k < 15) CHECK(adjustment_factors(n, k + 1).a < a);
        }
}

TEST_CASE("VIF closed forms") {
    SECTION("single predictor") {
        std::mt19937_64 rng(2);
        const auto d = fixture::random_dataset(rng, 20, 1);
        CHECK(vif_all(d)[0] == 1.0);
        CHECK(avif_all(d)[0] == 1.0);
    }
    SECTION("two predictors with correlation 0.8") {
        // Build exact sample correlation 0.8 from two orthogonal zero-mean columns.
        const Eigen::MatrixXd w = walsh(2);
        Eigen::MatrixXd x(8, 2);
        x.col(0) = w.col(0);
        x.col(1) = 0.8 * w.col(0) + 0.6 * w.col(1);
        const auto v = vif_all(with_noise_response(x));
        CHECK_THAT(v[0], WithinAbs(1.0 / 0.36, 1e-10));
        CHECK_THAT(v[1], WithinAbs(1.0 / 0.36, 1e-10));
        CHECK_THAT(correlation_det(with_noise_response(x)), WithinAbs(0.36, 1e-12));
    }
    SECTION("vif 5 at n=25, k=5") {
        ColumnValues v{{"a"}, {5.0}};
        CHECK_THAT(avif_from_vif(v, 25, 5)[0], WithinAbs(4.375, 1e-14));
    }
}

TEST_CASE("vif_all matches the inverse correlation diagonal") {
    std::mt19937_64 rng(30);
    for (int rep = 0; rep < 40; ++rep) {
        const std::size_t n = 20 + rng() % 81, p = 2 + rng() % 10;
        const auto d = fixture::random_dataset(rng, n, p);
        const auto v = vif_all(d);
        const auto ref = oracle::vif(oracle::from_eigen(d.columns()));
        for (std::size_t j = 0; j < p; ++j) CHECK_THAT(v[j], WithinRel(ref[j], 1e-8));
    }
}

TEST_CASE("aVIF identities") {
    std::mt19937_64 rng(99);
    for (int rep = 0; rep < 60; ++rep) {
        const std::size_t n = 15 + rng() % 60, p = 2 + rng() % 10;
        const auto d = fixture::random_dataset(rng, n, p);
        const auto v = vif_all(d);
        const auto av = avif_all(d);
        const double a = adjustment_factors(n, p + 1).a;
        const double gap = static_cast<double>(p - 1) / static_cast<double>(n - 1);
        for (std::size_t j = 0; j < p; ++j) {
            CHECK(av[j] == v[j] * a);
            CHECK(av[j] < v[j]);
            CHECK(av[j] >= a);
            CHECK_THAT(v[j] - av[j], WithinRel(gap * v[j], 1e-12));
        }
    }
}

TEST_CASE("orthogonal design sits at the minimum") {
    const auto d = with_noise_response(walsh(5));
    const auto r = diagnose(d);
    for (std::size_t j = 0; j < 5; ++j) {
        CHECK_THAT(r.vif[j], WithinAbs(1.0, 1e-12));
        CHECK_THAT(r.avif[j], WithinAbs(r.weight_a, 1e-12));
    }
    CHECK_THAT(r.condition_number, WithinAbs(1.0, 1e-12));
    CHECK_THAT(r.corr_det, WithinAbs(1.0, 1e-12));
    CHECK(r.vif_flags.empty());
    CHECK(r.avif_flags.empty());
}

TEST_CASE("scale and origin invariance") {
    std::mt19937_64 rng(8);
    const auto d = fixture::random_dataset(rng, 40, 6);
    const auto base = vif_all(d);
    Eigen::MatrixXd x = d.columns();
    x.col(2) = -250.0 * x.col(2).array() + 1e3;
    x.col(4) = 1e-3 * x.col(4).array() - 7.0;
    const auto moved = vif_all(Dataset(d.response(), x, d.names()));
    for (std::size_t j = 0; j < 6; ++j) CHECK_THAT(moved[j], WithinRel(base[j], 1e-8));
}

TEST_CASE("condition number") {
    std::mt19937_64 rng(40);
    for (int rep = 0; rep < 20; ++rep) {
        const auto d = fixture::random_dataset(rng, 40, 4);
        const double ref = oracle::condition_svd(oracle::from_eigen(d.design()));
        CHECK_THAT(condition_number(d), WithinRel(ref, 1e-8));
        CHECK(condition_number(d) >= 1.0);
    }
    auto d = fixture::random_dataset(rng, 30, 3);
    d = d.append(d.columns().col(0), "copy");
    CHECK(condition_number(d) == std::numeric_limits<double>::infinity());
}

TEST_CASE("correlation determinant") {
    std::mt19937_64 rng(50);
    const auto d = fixture::random_dataset(rng, 50, 8);
    const double ref = oracle::det_cofactor(oracle::correlation(oracle::from_eigen(d.columns())));
    CHECK_THAT(correlation_det(d), WithinAbs(ref, 1e-10));
    CHECK(correlation_det(d.first_predictors(1)) == 1.0);
}

TEST_CASE("monotonicity when a column is added") {
    std::mt19937_64 rng(60);
    for (int rep = 0; rep < 40; ++rep) {
        const std::size_t n = 25 + rng() % 50, p = 2 + rng() % 8;
        const auto full = fixture::random_dataset(rng, n, p + 1);
        const auto small = full.first_predictors(p);
        CHECK(vif_all(full).max() >= vif_all(small).max() * (1 - 1e-12));
        CHECK(condition_number(full) >= condition_number(small) * (1 - 1e-12));
        CHECK(correlation_det(full) < correlation_det(small));
        CHECK(fit_ols(full).scr <= fit_ols(small).scr * (1 + 1e-12));
    }
}

TEST_CASE("degenerate columns") {
    std::mt19937_64 rng(70);
    const auto d = fixture::random_dataset(rng, 30, 3);
    const auto exact = d.append(d.columns().col(0) + 2.0 * d.columns().col(2), "combo");
    CHECK_THROWS_AS(vif_all(exact), ExactCollinearity);
    const auto flat = d.append(Eigen::VectorXd::Constant(30, 3.0), "flat");
    CHECK_THROWS_AS(vif_all(flat), ConstantColumn);
    CHECK_THROWS_AS(correlation_det(flat), ConstantColumn);
    CHECK_THROWS_AS(vif_all(d.first_predictors(0)), InvalidDesign);
}

TEST_CASE("size-driven flags separate VIF and aVIF") {
    // Columns 0 and 1 correlate with r^2 = 14/15, so their VIF is exactly 15;
    // the other 18 are orthogonal. a(32, 21) = 12/31 puts the aVIF near 5.8.
    Eigen::MatrixXd x = walsh(20, 32);
    const double r = std::sqrt(14.0 / 15.0);
    x.col(1) = r * x.col(0) + std::sqrt(1 - r * r) * x.col(1);
    const auto rep = diagnose(with_noise_response(x));
    CHECK_THAT(rep.vif.at("X2"), WithinRel(15.0, 1e-10));
    CHECK_THAT(rep.vif.at("X3"), WithinRel(15.0, 1e-10));
    CHECK(rep.vif_flags == std::vector<std::string>{"X2", "X3"});
    CHECK(rep.avif_flags.empty());
    CHECK(rep.size_driven_flags == rep.vif_flags);
    CHECK(diagnose(with_noise_response(x), 5.0).avif_flags == rep.vif_flags);
}
