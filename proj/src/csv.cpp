#include "collin/csv.hpp"

#include "collin/errors.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <limits>
#include <optional>
#include <string_view>
#include <vector>

namespace collin {

namespace {

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

std::vector<std::string> split_fields(std::string_view line) {
    std::vector<std::string> fields;
    std::size_t start = 0;
    for (;;) {
        const auto comma = line.find(',', start);
        auto field = trim(line.substr(start, comma == std::string_view::npos ? line.npos : comma - start));
        if (field.size() >= 2 && field.front() == '"' && field.back() == '"')
            field = field.substr(1, field.size() - 2);
        fields.emplace_back(field);
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return fields;
}

std::optional<double> parse_number(std::string_view text) {
    if (!text.empty() && text.front() == '+') text.remove_prefix(1);
    double value = 0.0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size() || !std::isfinite(value))
        return std::nullopt;
    return value;
}

}  // namespace

Dataset parse_csv(std::istream& in, const std::string& response_column) {
    std::string line;
    std::size_t line_no = 0;
    std::vector<std::string> header;
    while (std::getline(in, line)) {
        ++line_no;
        if (line_no == 1 && line.starts_with("\xEF\xBB\xBF")) line.erase(0, 3);
        if (!trim(line).empty()) {
            header = split_fields(line);
            break;
        }
    }
    if (header.empty()) throw ParseError("missing header row", line_no == 0 ? 1 : line_no);

    std::size_t response_idx = header.size();
    for (std::size_t c = 0; c < header.size(); ++c) {
        if (header[c].empty()) throw ParseError("empty column name", line_no, c + 1);
        if (header[c] == response_column) response_idx = c;
    }
    if (response_idx == header.size()) throw MissingResponse(response_column);

    std::vector<std::vector<double>> rows;
    std::optional<std::size_t> blank_at;
    while (std::getline(in, line)) {
        ++line_no;
        if (trim(line).empty()) {
            if (!blank_at) blank_at = line_no;
            continue;
        }
        if (blank_at) throw ParseError("blank line inside data", *blank_at);
        const auto fields = split_fields(line);
        if (fields.size() != header.size())
            throw ParseError("expected " + std::to_string(header.size()) + " fields, found " +
                                 std::to_string(fields.size()),
                             line_no, std::min(fields.size(), header.size()) + 1);
        std::vector<double> row;
        row.reserve(fields.size());
        for (std::size_t c = 0; c < fields.size(); ++c) {
            const auto value = parse_number(fields[c]);
            if (!value) throw NonNumericCell(fields[c], line_no, c + 1);
            row.push_back(*value);
        }
        rows.push_back(std::move(row));
    }

    const auto n = rows.size();
    const auto p = header.size() - 1;
    if (n <= p + 1) throw TooFewRows(n, p + 1);

    Eigen::VectorXd y(static_cast<Eigen::Index>(n));
    Eigen::MatrixXd x(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(p));
    std::vector<std::string> names;
    for (std::size_t c = 0; c < header.size(); ++c)
        if (c != response_idx) names.push_back(header[c]);
    for (std::size_t i = 0; i < n; ++i) {
        Eigen::Index out_col = 0;
        for (std::size_t c = 0; c < header.size(); ++c) {
            if (c == response_idx)
                y(static_cast<Eigen::Index>(i)) = rows[i][c];
            else
                x(static_cast<Eigen::Index>(i), out_col++) = rows[i][c];
        }
    }
    return Dataset(std::move(y), std::move(x), std::move(names));
}

Dataset load_csv(const std::filesystem::path& path, const std::string& response_column) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open '" + path.string() + "'");
    return parse_csv(in, response_column);
}

void write_series_csv(std::ostream& out, const ExperimentResult& result) {
    out << "k,max_vif,max_avif\n";
    out << std::setprecision(std::numeric_limits<double>::max_digits10);
    for (const auto& pt : result.series) out << pt.k << ',' << pt.max_vif << ',' << pt.max_avif << '\n';
}

}  // namespace collin
