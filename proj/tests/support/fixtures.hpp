#pragma once

#include "oracles.hpp"

#include <collin/dataset.hpp>

#include <random>

namespace fixture {

/// y = 1 + sum_j (j % 3 - 1) * x_j + N(0, 1) on oracle::random_columns.
inline collin::Dataset random_dataset(std::mt19937_64& rng, std::size_t n, std::size_t p) {
    Eigen::MatrixXd x = oracle::random_columns(rng, n, p);
    std::normal_distribution<double> z;
    Eigen::VectorXd y = Eigen::VectorXd::Ones(static_cast<Eigen::Index>(n));
    for (std::size_t j = 0; j < p; ++j)
        y += static_cast<double>(static_cast<int>(j % 3) - 1) * x.col(static_cast<Eigen::Index>(j));
    for (Eigen::Index i = 0; i < y.size(); ++i) y(i) += z(rng);
    return {y, x, collin::default_names(p)};
}

}  // namespace fixture
