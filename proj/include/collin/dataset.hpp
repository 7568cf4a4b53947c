#pragma once

#include <Eigen/Dense>

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace collin {

/// Response vector plus named predictor columns. The intercept is implicit and
/// never stored, so k() == predictors() + 1.
///
/// A Dataset with zero predictors (intercept-only model) is representable so
/// stepwise procedures can reach it; the collinearity measures reject it.
class Dataset {
public:
    Dataset(Eigen::VectorXd response, Eigen::MatrixXd columns, std::vector<std::string> names);

    const Eigen::VectorXd& response() const noexcept { return response_; }
    const Eigen::MatrixXd& columns() const noexcept { return columns_; }
    const std::vector<std::string>& names() const noexcept { return names_; }

    std::size_t n() const noexcept { return static_cast<std::size_t>(response_.size()); }
    std::size_t predictors() const noexcept { return names_.size(); }
    std::size_t k() const noexcept { return predictors() + 1; }

    /// Index of a predictor by label; throws std::out_of_range if absent.
    std::size_t index_of(const std::string& name) const;

    /// Dataset keeping only the given predictor indices, in the given order.
    Dataset select(std::span<const std::size_t> indices) const;
    Dataset drop(std::size_t index) const;
    Dataset append(const Eigen::VectorXd& column, std::string name) const;
    Dataset first_predictors(std::size_t count) const;

    /// Intercept-augmented design [1 | columns].
    Eigen::MatrixXd design() const;

private:
    Eigen::VectorXd response_;
    Eigen::MatrixXd columns_;
    std::vector<std::string> names_;
};

/// Default labels X2, X3, ... matching the coefficient numbering where the
/// intercept is coefficient 1.
std::vector<std::string> default_names(std::size_t count);

}  // namespace collin
