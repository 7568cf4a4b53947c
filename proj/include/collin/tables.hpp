#pragma once

#include <optional>
#include <string>
#include <string_view>

namespace collin {

enum class GridKind { A, B, SqrtA };

std::optional<GridKind> parse_grid_kind(std::string_view text);  // a | b | sqrt-a

/// Aligned plain-text grid of an adjustment factor for
/// n = 15, 20, ..., 200 (rows) and k = 3, ..., 15 (columns), three decimals.
std::string format_grid(GridKind kind);

}  // namespace collin
