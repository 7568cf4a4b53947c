#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace collin {

/// Base class for every error raised by the library. Everything derived from
/// it is a data problem (bad input, degenerate design), never a programming bug.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DimensionMismatch : public Error {
public:
    using Error::Error;
};

/// Dataset violates one of its invariants (non-finite value, duplicate name, n <= k).
class InvalidDataset : public Error {
public:
    using Error::Error;
};

class RankDeficient : public Error {
public:
    RankDeficient(std::vector<std::string> columns, std::size_t rank);
    const std::vector<std::string>& columns() const noexcept { return columns_; }
    std::size_t rank() const noexcept { return rank_; }

private:
    std::vector<std::string> columns_;
    std::size_t rank_;
};

class DegenerateResponse : public Error {
public:
    DegenerateResponse() : Error("response has zero total sum of squares") {}
};

class ExactCollinearity : public Error {
public:
    explicit ExactCollinearity(std::string column)
        : Error("column '" + column + "' is an exact linear combination of the others"),
          column_(std::move(column)) {}
    const std::string& column() const noexcept { return column_; }

private:
    std::string column_;
};

class ConstantColumn : public Error {
public:
    explicit ConstantColumn(std::string column)
        : Error("column '" + column + "' has zero sample variance"), column_(std::move(column)) {}
    const std::string& column() const noexcept { return column_; }

private:
    std::string column_;
};

class InvalidDesign : public Error {
public:
    using Error::Error;
};

class EmptyDesign : public Error {
public:
    EmptyDesign() : Error("design matrix is empty") {}
};

class InvalidProbability : public Error {
public:
    using Error::Error;
};

class InvalidDims : public Error {
public:
    using Error::Error;
};

class InvalidGamma : public Error {
public:
    using Error::Error;
};

class MixedResponse : public Error {
public:
    MixedResponse() : Error("fits being compared do not share the same response") {}
};

/// CSV problems carry a 1-based location; col is 0 when the whole line is at fault.
class ParseError : public Error {
public:
    ParseError(std::string what, std::size_t line, std::size_t col = 0);
    std::size_t line() const noexcept { return line_; }
    std::size_t col() const noexcept { return col_; }

private:
    std::size_t line_;
    std::size_t col_;
};

class NonNumericCell : public ParseError {
public:
    NonNumericCell(const std::string& cell, std::size_t line, std::size_t col);
};

class MissingResponse : public Error {
public:
    explicit MissingResponse(const std::string& name)
        : Error("response column '" + name + "' not found in header") {}
};

class TooFewRows : public Error {
public:
    TooFewRows(std::size_t n, std::size_t k)
        : Error("need more observations than coefficients (n=" + std::to_string(n) +
                ", k=" + std::to_string(k) + ")") {}
};

}  // namespace collin
