#pragma once

#include <algorithm>
#include <array>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "railqec/pauli.hpp"

namespace railqec {

enum class CodeVariant { CSS, XZZX };

inline std::string variant_name(CodeVariant v) { return v == CodeVariant::CSS ? "CSS" : "XZZX"; }

// Plaquette corner, looking at the lattice with (0,0) bottom-left.
enum class Corner { NW = 0, NE = 1, SW = 2, SE = 3 };

// Shading class of a plaquette. For CSS, light plaquettes carry the X
// stabilizers and dark ones the Z stabilizers; for XZZX the classes select
// the two extraction-order patterns.
enum class PlaquetteColor { Light, Dark };

struct GridCoord {
    int x = 0, y = 0;
    bool operator==(const GridCoord&) const = default;
    auto operator<=>(const GridCoord&) const = default;
};

// A plaquette is identified by its bottom-left data corner (a, b); boundary
// plaquettes hang off the lattice with a or b equal to -1 or d-1.
struct Plaquette {
    int a = 0, b = 0;
    PlaquetteColor color = PlaquetteColor::Light;
    // corners present on the lattice, with the Pauli the stabilizer applies
    std::vector<std::pair<Corner, GridCoord>> corners;
    PauliString stabilizer;  // over data-qubit ids

    int weight() const { return static_cast<int>(corners.size()); }
    bool is_bulk() const { return weight() == 4; }
};

class SurfaceCode {
  public:
    CodeVariant variant = CodeVariant::CSS;
    int distance = 0;
    std::vector<Plaquette> plaquettes;  // canonical order, one per stabilizer
    PauliString logical_v;              // vertical representative (left column)
    PauliString logical_h;              // horizontal representative (top row)

    int num_data() const { return distance * distance; }
    int num_checks() const { return distance * distance - 1; }

    // data qubit ids are 0..d^2-1, row-major from the bottom-left
    int data_id(int x, int y) const { return y * distance + x; }
    GridCoord data_coord(int id) const { return {id % distance, id / distance}; }

    // check qubit ids follow the data block: d^2 .. 2d^2-2
    int check_id(int plaquette_index) const { return num_data() + plaquette_index; }
    int num_qubits() const { return num_data() + num_checks(); }

    const Plaquette& plaquette_of_check(int check) const {
        return plaquettes.at(check - num_data());
    }
};

namespace detail {

inline Pauli stabilizer_pauli(CodeVariant variant, const Plaquette& p, Corner c) {
    if (variant == CodeVariant::XZZX)
        return (c == Corner::NW || c == Corner::SE) ? Pauli::X : Pauli::Z;
    return p.color == PlaquetteColor::Light ? Pauli::X : Pauli::Z;
}

inline PlaquetteColor plaquette_color(int a, int b) {
    return ((a + b) % 2 + 2) % 2 == 0 ? PlaquetteColor::Light : PlaquetteColor::Dark;
}

// Enumerate all plaquette anchors of the distance-d lattice: (d-1)^2 bulk
// plus 2(d-1) boundary, following the checkerboard of the d=5 figures.
inline std::vector<std::pair<int, int>> plaquette_anchors(int d) {
    std::vector<std::pair<int, int>> out;
    for (int a = 0; a < d - 1; a++)
        for (int b = 0; b < d - 1; b++) out.push_back({a, b});
    for (int a = 0; a < d - 1; a += 2) out.push_back({a, d - 1});   // top
    for (int a = 1; a < d - 1; a += 2) out.push_back({a, -1});      // bottom
    for (int b = 0; b < d - 1; b += 2) out.push_back({-1, b});      // left
    for (int b = 1; b < d - 1; b += 2) out.push_back({d - 1, b});   // right
    return out;
}

inline std::vector<std::pair<Corner, GridCoord>> corners_on_lattice(int a, int b, int d) {
    static constexpr std::array<std::pair<Corner, std::pair<int, int>>, 4> offsets = {{
        {Corner::NW, {0, 1}},
        {Corner::NE, {1, 1}},
        {Corner::SW, {0, 0}},
        {Corner::SE, {1, 0}},
    }};
    std::vector<std::pair<Corner, GridCoord>> out;
    for (auto [c, off] : offsets) {
        int x = a + off.first, y = b + off.second;
        if (x >= 0 && x < d && y >= 0 && y < d) out.push_back({c, {x, y}});
    }
    return out;
}

// Per-qubit Pauli of the minimum-weight logical representatives. For CSS the
// vertical logical is an X column and the horizontal a Z row; for XZZX both
// alternate X/Z with the site parity fixing which.
inline Pauli logical_site_pauli(CodeVariant variant, bool vertical, int x, int y) {
    if (variant == CodeVariant::CSS) return vertical ? Pauli::X : Pauli::Z;
    if (vertical) return (x + y) % 2 == 0 ? Pauli::Z : Pauli::X;
    return (x + y) % 2 == 0 ? Pauli::X : Pauli::Z;
}

}  // namespace detail

inline SurfaceCode build_code(CodeVariant variant, int d) {
    if (d < 3 || d % 2 == 0)
        throw std::invalid_argument("code distance must be an odd integer >= 3");

    SurfaceCode code;
    code.variant = variant;
    code.distance = d;

    for (auto [a, b] : detail::plaquette_anchors(d)) {
        Plaquette p;
        p.a = a;
        p.b = b;
        p.color = detail::plaquette_color(a, b);
        p.corners = detail::corners_on_lattice(a, b, d);
        for (auto [corner, g] : p.corners)
            p.stabilizer.set(code.data_id(g.x, g.y), detail::stabilizer_pauli(variant, p, corner));
        code.plaquettes.push_back(std::move(p));
    }

    for (int y = 0; y < d; y++)
        code.logical_v.set(code.data_id(0, y), detail::logical_site_pauli(variant, true, 0, y));
    for (int x = 0; x < d; x++)
        code.logical_h.set(code.data_id(x, d - 1),
                           detail::logical_site_pauli(variant, false, x, d - 1));
    return code;
}

// All pairwise commutations, stabilizer independence (rank d^2-1), and the
// logical-operator relations.
inline bool verify_stabilizer_group(const SurfaceCode& code) {
    const int n = code.num_data();
    if (static_cast<int>(code.plaquettes.size()) != n - 1) return false;

    std::vector<SymplecticRow> rows;
    for (const auto& p : code.plaquettes) rows.push_back(to_symplectic(p.stabilizer, n));

    for (size_t i = 0; i < rows.size(); i++)
        for (size_t j = i + 1; j < rows.size(); j++)
            if (rows[i].sym_product(rows[j])) return false;

    if (symplectic_rank(rows) != n - 1) return false;

    SymplecticRow lv = to_symplectic(code.logical_v, n);
    SymplecticRow lh = to_symplectic(code.logical_h, n);
    if (code.logical_v.weight() != code.distance || code.logical_h.weight() != code.distance)
        return false;
    if (lv.sym_product(lh) != 1) return false;
    for (const auto& r : rows)
        if (r.sym_product(lv) || r.sym_product(lh)) return false;

    // logicals must lie outside the stabilizer group
    auto in_group = [&](const SymplecticRow& cand) {
        auto extended = rows;
        extended.push_back(cand);
        return symplectic_rank(extended) == n - 1;
    };
    if (in_group(lv) || in_group(lh)) return false;
    return true;
}

// Minimum weight over the nontrivial logical cosets, by Gray-code walk over
// the full stabilizer group. Exact, so only sensible for d <= 5.
inline int code_distance_bruteforce(const SurfaceCode& code) {
    if (code.distance > 5)
        throw std::invalid_argument("brute-force distance search is limited to d <= 5");
    const int n = code.num_data();
    if (n > 64) throw std::logic_error("single-word masks require n <= 64");

    auto mask_of = [&](const PauliString& p) {
        uint64_t x = 0, z = 0;
        for (auto [q, op] : p.support()) {
            if (op == Pauli::X || op == Pauli::Y) x |= uint64_t(1) << q;
            if (op == Pauli::Z || op == Pauli::Y) z |= uint64_t(1) << q;
        }
        return std::pair<uint64_t, uint64_t>(x, z);
    };

    std::vector<std::pair<uint64_t, uint64_t>> gens;
    for (const auto& p : code.plaquettes) gens.push_back(mask_of(p.stabilizer));
    const int k = static_cast<int>(gens.size());

    auto lv = mask_of(code.logical_v);
    auto lh = mask_of(code.logical_h);
    std::array<std::pair<uint64_t, uint64_t>, 3> cosets = {
        lv, lh, {lv.first ^ lh.first, lv.second ^ lh.second}};

    int best = n + 1;
    for (auto [ox, oz] : cosets) {
        uint64_t x = ox, z = oz;
        best = std::min(best, __builtin_popcountll(x | z));
        for (uint64_t i = 1; i < (uint64_t(1) << k); i++) {
            int flip = __builtin_ctzll(i);  // Gray-code: generator toggled at step i
            x ^= gens[flip].first;
            z ^= gens[flip].second;
            best = std::min(best, __builtin_popcountll(x | z));
        }
    }
    return best;
}

// One record per line: data qubits, then stabilizers, then logicals.
inline std::string export_code_text(const SurfaceCode& code) {
    std::ostringstream out;
    out << "code " << variant_name(code.variant) << " d " << code.distance << "\n";
    for (int id = 0; id < code.num_data(); id++) {
        auto g = code.data_coord(id);
        out << "data " << id << " " << g.x << " " << g.y << "\n";
    }
    for (size_t i = 0; i < code.plaquettes.size(); i++) {
        const auto& p = code.plaquettes[i];
        out << "stab " << i << " anchor " << p.a << " " << p.b << " "
            << (p.color == PlaquetteColor::Light ? "light" : "dark") << " "
            << p.stabilizer.str() << "\n";
    }
    out << "logical v " << code.logical_v.str() << "\n";
    out << "logical h " << code.logical_h.str() << "\n";
    return out.str();
}

}  // namespace railqec
