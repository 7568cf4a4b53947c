#include "collin/tables.hpp"

#include "collin/collinearity.hpp"

#include <cstdio>

namespace collin {

std::optional<GridKind> parse_grid_kind(std::string_view text) {
    if (text == "a") return GridKind::A;
    if (text == "b") return GridKind::B;
    if (text == "sqrt-a") return GridKind::SqrtA;
    return std::nullopt;
}

std::string format_grid(GridKind kind) {
    std::string out;
    char cell[32];
    std::snprintf(cell, sizeof cell, "%6s", "n\\k");
    out += cell;
    for (int k = 3; k <= 15; ++k) {
        std::snprintf(cell, sizeof cell, " %6d", k);
        out += cell;
    }
    out += '\n';
    for (int n = 15; n <= 200; n += 5) {
        std::snprintf(cell, sizeof cell, "%6d", n);
        out += cell;
        for (int k = 3; k <= 15; ++k) {
            const auto f = adjustment_factors(static_cast<std::size_t>(n), static_cast<std::size_t>(k));
            const double v = kind == GridKind::A ? f.a : kind == GridKind::B ? f.b : f.sqrt_a;
            std::snprintf(cell, sizeof cell, " %6.3f", v);
            out += cell;
        }
        out += '\n';
    }
    return out;
}

}  // namespace collin
