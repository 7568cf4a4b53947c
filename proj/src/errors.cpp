#include "collin/errors.hpp"

namespace collin {

namespace {

std::string join(const std::vector<std::string>& items) {
    std::string out;
    for (const auto& s : items) {
        if (!out.empty()) out += ", ";
        out += s;
    }
    return out;
}

std::string location(std::size_t line, std::size_t col) {
    std::string out = "line " + std::to_string(line);
    if (col != 0) out += ", column " + std::to_string(col);
    return out;
}

}  // namespace

RankDeficient::RankDeficient(std::vector<std::string> columns, std::size_t rank)
    : Error("design is rank deficient (rank " + std::to_string(rank) +
            "); dependent columns: " + join(columns)),
      columns_(std::move(columns)),
      rank_(rank) {}

ParseError::ParseError(std::string what, std::size_t line, std::size_t col)
    : Error(location(line, col) + ": " + what), line_(line), col_(col) {}

NonNumericCell::NonNumericCell(const std::string& cell, std::size_t line, std::size_t col)
    : ParseError("non-numeric cell '" + cell + "'", line, col) {}

}  // namespace collin
