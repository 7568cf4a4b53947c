#include "collin/dataset.hpp"

#include "collin/errors.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <unordered_set>

namespace collin {

Dataset::Dataset(Eigen::VectorXd response, Eigen::MatrixXd columns, std::vector<std::string> names)
    : response_(std::move(response)), columns_(std::move(columns)), names_(std::move(names)) {
    if (columns_.cols() == 0) columns_.resize(response_.size(), 0);
    if (columns_.rows() != response_.size())
        throw DimensionMismatch("predictor rows (" + std::to_string(columns_.rows()) +
                                ") differ from response length (" +
                                std::to_string(response_.size()) + ")");
    if (static_cast<std::size_t>(columns_.cols()) != names_.size())
        throw DimensionMismatch("got " + std::to_string(names_.size()) + " names for " +
                                std::to_string(columns_.cols()) + " columns");
    if (!response_.allFinite()) throw InvalidDataset("response contains non-finite values");
    for (Eigen::Index j = 0; j < columns_.cols(); ++j)
        if (!columns_.col(j).allFinite())
            throw InvalidDataset("column '" + names_[j] + "' contains non-finite values");
    std::unordered_set<std::string> seen;
    for (const auto& name : names_)
        if (!seen.insert(name).second) throw InvalidDataset("duplicate column name '" + name + "'");
    if (n() <= k()) throw TooFewRows(n(), k());
}

std::size_t Dataset::index_of(const std::string& name) const {
    auto it = std::find(names_.begin(), names_.end(), name);
    if (it == names_.end()) throw std::out_of_range("no predictor named '" + name + "'");
    return static_cast<std::size_t>(it - names_.begin());
}

Dataset Dataset::select(std::span<const std::size_t> indices) const {
    Eigen::MatrixXd cols(columns_.rows(), static_cast<Eigen::Index>(indices.size()));
    std::vector<std::string> names;
    names.reserve(indices.size());
    for (std::size_t i = 0; i < indices.size(); ++i) {
        if (indices[i] >= predictors()) throw std::out_of_range("predictor index out of range");
        cols.col(static_cast<Eigen::Index>(i)) = columns_.col(static_cast<Eigen::Index>(indices[i]));
        names.push_back(names_[indices[i]]);
    }
    return Dataset(response_, std::move(cols), std::move(names));
}

Dataset Dataset::drop(std::size_t index) const {
    std::vector<std::size_t> keep;
    for (std::size_t j = 0; j < predictors(); ++j)
        if (j != index) keep.push_back(j);
    return select(keep);
}

Dataset Dataset::append(const Eigen::VectorXd& column, std::string name) const {
    Eigen::MatrixXd cols(columns_.rows(), columns_.cols() + 1);
    cols.leftCols(columns_.cols()) = columns_;
    cols.col(columns_.cols()) = column;
    auto names = names_;
    names.push_back(std::move(name));
    return Dataset(response_, std::move(cols), std::move(names));
}

Dataset Dataset::first_predictors(std::size_t count) const {
    std::vector<std::size_t> idx(std::min(count, predictors()));
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    return select(idx);
}

Eigen::MatrixXd Dataset::design() const {
    Eigen::MatrixXd x(columns_.rows(), columns_.cols() + 1);
    x.col(0).setOnes();
    x.rightCols(columns_.cols()) = columns_;
    return x;
}

std::vector<std::string> default_names(std::size_t count) {
    std::vector<std::string> names;
    names.reserve(count);
    for (std::size_t j = 0; j < count; ++j) names.push_back("X" + std::to_string(j + 2));
    return names;
}

}  // namespace collin
