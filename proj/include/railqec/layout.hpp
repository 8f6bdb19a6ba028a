#pragma once

#include <sstream>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "railqec/surface_code.hpp"

namespace railqec {

enum class Rail { Data, Check };
enum class Species { Data, Check };

inline std::string species_name(Species s) { return s == Species::Data ? "data" : "check"; }

struct RailPosition {
    Rail rail = Rail::Data;
    int slot = 0;  // 1-based position along the rail
    bool operator==(const RailPosition&) const = default;
};

struct LayoutMap {
    std::unordered_map<int, RailPosition> positions;  // qubit id -> rail slot
    Species shuttled = Species::Check;

    int slot_of(int qubit) const { return positions.at(qubit).slot; }
    Rail rail_of(int qubit) const { return positions.at(qubit).rail; }
};

// Data-qubit rail order: a boustrophedon over the anti-diagonals of the grid,
// starting at the top-left corner (0, d-1) and ending at (d-1, 0). Along the
// anti-diagonal D = x + (d-1-y), cells are taken top-to-bottom when D is even
// and bottom-to-top when D is odd. Reproduces the d=5 snake figure exactly.
inline std::vector<GridCoord> snake_order(int d) {
    if (d < 3 || d % 2 == 0)
        throw std::invalid_argument("snake_order requires odd d >= 3");
    std::vector<GridCoord> out;
    for (int diag = 0; diag <= 2 * (d - 1); diag++) {
        std::vector<GridCoord> cells;
        for (int y = d - 1; y >= 0; y--) {
            int x = diag - (d - 1 - y);
            if (x >= 0 && x < d) cells.push_back({x, y});
        }
        if (diag % 2 == 1) std::reverse(cells.begin(), cells.end());
        out.insert(out.end(), cells.begin(), cells.end());
    }
    return out;
}

// Check-qubit rail order: the same boustrophedon run over plaquette anchors
// with diagonal index a + (d-2-b). Slots then cover, for every check, exactly
// the data-slot window it must sweep; reproduces the d=5 mirrored-snake figure.
inline std::vector<std::pair<int, int>> mirrored_snake_order(int d) {
    if (d < 3 || d % 2 == 0)
        throw std::invalid_argument("mirrored_snake_order requires odd d >= 3");
    auto anchors = detail::plaquette_anchors(d);
    std::vector<std::pair<int, int>> out;
    for (int diag = -1; diag <= 2 * d - 3; diag++) {
        std::vector<std::pair<int, int>> cells;
        for (auto [a, b] : anchors)
            if (a + (d - 2 - b) == diag) cells.push_back({a, b});
        std::sort(cells.begin(), cells.end(),
                  [](auto& l, auto& r) { return l.second > r.second; });
        if (((diag % 2) + 2) % 2 == 1) std::reverse(cells.begin(), cells.end());
        out.insert(out.end(), cells.begin(), cells.end());
    }
    return out;
}

inline LayoutMap assign_rails(const SurfaceCode& code, Species shuttled) {
    LayoutMap layout;
    layout.shuttled = shuttled;

    auto data = snake_order(code.distance);
    for (size_t i = 0; i < data.size(); i++)
        layout.positions[code.data_id(data[i].x, data[i].y)] = {Rail::Data,
                                                                static_cast<int>(i) + 1};

    auto checks = mirrored_snake_order(code.distance);
    std::unordered_map<int64_t, int> anchor_to_index;
    for (size_t i = 0; i < code.plaquettes.size(); i++) {
        const auto& p = code.plaquettes[i];
        anchor_to_index[(int64_t(p.a) << 32) ^ (uint32_t)p.b] = static_cast<int>(i);
    }
    for (size_t i = 0; i < checks.size(); i++) {
        auto [a, b] = checks[i];
        int idx = anchor_to_index.at((int64_t(a) << 32) ^ (uint32_t)b);
        layout.positions[code.check_id(idx)] = {Rail::Check, static_cast<int>(i) + 1};
    }
    return layout;
}

// Tanner-graph two-coloring must equal the rail assignment: all data on one
// rail, all checks on the other, slots contiguous from 1 and unique.
inline bool validate_bipartite(const LayoutMap& layout, const SurfaceCode& code) {
    if (static_cast<int>(layout.positions.size()) != code.num_qubits()) return false;
    std::vector<bool> data_seen(code.num_data() + 1, false);
    std::vector<bool> check_seen(code.num_checks() + 1, false);
    for (const auto& [qubit, pos] : layout.positions) {
        bool is_data = qubit < code.num_data();
        if (is_data != (pos.rail == Rail::Data)) return false;
        auto& seen = is_data ? data_seen : check_seen;
        if (pos.slot < 1 || pos.slot >= static_cast<int>(seen.size())) return false;
        if (seen[pos.slot]) return false;
        seen[pos.slot] = true;
    }
    return true;
}

// Per-qubit line: `qubit-id, species, rail, slot, grid-x, grid-y`.
// Check qubits report their plaquette anchor as the grid position.
inline std::string export_layout_text(const LayoutMap& layout, const SurfaceCode& code) {
    std::ostringstream out;
    std::vector<int> ids;
    for (const auto& [q, pos] : layout.positions) ids.push_back(q);
    std::sort(ids.begin(), ids.end());
    for (int q : ids) {
        const auto& pos = layout.positions.at(q);
        bool is_data = q < code.num_data();
        int gx, gy;
        if (is_data) {
            auto g = code.data_coord(q);
            gx = g.x;
            gy = g.y;
        } else {
            const auto& p = code.plaquette_of_check(q);
            gx = p.a;
            gy = p.b;
        }
        out << q << ", " << (is_data ? "data" : "check") << ", "
            << (pos.rail == Rail::Data ? "data-rail" : "check-rail") << ", " << pos.slot << ", "
            << gx << ", " << gy << "\n";
    }
    return out.str();
}

}  // namespace railqec
