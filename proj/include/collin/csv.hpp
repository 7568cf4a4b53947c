#pragma once

#include "collin/dataset.hpp"
#include "collin/simulation.hpp"

#include <filesystem>
#include <istream>
#include <ostream>
#include <string>

namespace collin {

/// Reads a comma-separated file with a header row. The named column becomes
/// the response, every other column a predictor in header order. Blank lines
/// at the end of the file are ignored; anything else that is not a finite
/// number raises NonNumericCell with its 1-based line and column.
Dataset load_csv(const std::filesystem::path& path, const std::string& response_column);
Dataset parse_csv(std::istream& in, const std::string& response_column);

/// Writes `k,max_vif,max_avif` rows for every point of the sweep.
void write_series_csv(std::ostream& out, const ExperimentResult& result);

}  // namespace collin
