#include <catch_amalgamated.hpp>

#include <collin/dataset.hpp>
#include <collin/errors.hpp>

#include <limits>

using namespace collin;

namespace {

Dataset small() {
    Eigen::VectorXd y(5);
    y << 1, 2, 3, 4, 6;
    Eigen::MatrixXd x(5, 2);
    x << 1, 0, 2, 1, 3, 0, 4, 1, 5, 3;
    return {y, x, {"a", "b"}};
}

}  // namespace

TEST_CASE("dataset shape and design") {
    const auto d = small();
    CHECK(d.n() == 5);
    CHECK(d.predictors() == 2);
    CHECK(d.k() == 3);
    const auto x = d.design();
    CHECK(x.cols() == 3);
    CHECK(x.col(0).isOnes());
    CHECK(x(4, 2) == 3.0);
    CHECK(d.index_of("b") == 1);
    CHECK_THROWS_AS(d.index_of("zzz"), std::out_of_range);
}

TEST_CASE("dataset select, drop, append") {
    const auto d = small();
    const auto dropped = d.drop(0);
    CHECK(dropped.names() == std::vector<std::string>{"b"});
    CHECK(dropped.columns().col(0) == d.columns().col(1));
    const auto grown = dropped.append(d.columns().col(0), "a2");
    CHECK(grown.names() == std::vector<std::string>{"b", "a2"});
    const std::vector<std::size_t> order{1, 0};
    CHECK(d.select(order).names() == std::vector<std::string>{"b", "a"});
    CHECK(d.first_predictors(1).names() == std::vector<std::string>{"a"});
    CHECK(d.first_predictors(0).k() == 1);
}

TEST_CASE("dataset invariants") {
    Eigen::VectorXd y = Eigen::VectorXd::LinSpaced(4, 0, 3);
    Eigen::MatrixXd x = Eigen::MatrixXd::Random(4, 2);
    CHECK_THROWS_AS(Dataset(y, x, {"a", "a"}), InvalidDataset);
    CHECK_THROWS_AS(Dataset(y, x, {"a"}), DimensionMismatch);
    CHECK_THROWS_AS(Dataset(y.head(3), x, {"a", "b"}), DimensionMismatch);
    CHECK_THROWS_AS(Dataset(y.head(3), x.topRows(3), {"a", "b"}), TooFewRows);
    x(1, 1) = std::numeric_limits<double>::quiet_NaN();
    CHECK_THROWS_AS(Dataset(y, x, {"a", "b"}), InvalidDataset);
}

TEST_CASE("default names follow coefficient numbering") {
    CHECK(default_names(3) == std::vector<std::string>{"X2", "X3", "X4"});
}
