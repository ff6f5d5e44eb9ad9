// Unit triangles, lozenges and barriers on the triangular lattice with one
// family of vertical lines.
//
// A triangle lives in strip `col` (between vertical lines col and col+1).
// `pos` is the doubled height of the midpoint of its vertical edge. A
// right-pointing triangle has its vertical edge on line col, a left-pointing
// one on line col+1; the orientation follows from parity: (pos - col) odd
// means right-pointing.
#pragma once

#include "tilinglab/qlaurent.hpp"

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace tilinglab {

enum class Orient : std::uint8_t { Left, Right };

struct Tri {
    int col = 0;
    int pos = 0;
    Orient orient = Orient::Left;
    auto operator<=>(const Tri&) const = default;

    // The triangle occupying (col, pos); orientation from parity.
    static Tri at(int col, int pos);
    bool well_formed() const;
    bool left() const { return orient == Orient::Left; }
};

// Shared side of two adjacent triangles. Stored as the left-pointing member
// plus the direction of its partner.
enum class Dir : std::uint8_t { Horizontal, Up, Down };

struct Edge {
    Tri left;
    Dir dir = Dir::Horizontal;
    auto operator<=>(const Edge&) const = default;
};

std::optional<Edge> edge_between(const Tri& a, const Tri& b);
std::pair<Tri, Tri> edge_tris(const Edge& e);  // (left-pointing, right-pointing)
std::vector<Tri> lattice_neighbors(const Tri& t);
Tri horizontal_partner(const Tri& t);

enum class WeightMode : std::uint8_t { Standard, SymbolicXY, NumericXY };

// Horizontal lozenges centred at pos p sit at offset n = p - axis_offset2.
// Standard weight is (q^n + q^-n)/2; the XY modes use (X q^n + Y q^-n)/2
// with X, Y symbolic or fixed rationals.
struct WeightFrame {
    int axis_offset2 = 0;
    WeightMode mode = WeightMode::Standard;
    mpq_class x0 = 1;
    mpq_class y0 = 1;

    static WeightFrame symbolic(int axis_offset2 = 0);
    static WeightFrame numeric(int axis_offset2, const mpq_class& x0, const mpq_class& y0);
    bool operator==(const WeightFrame& o) const;
};

QPoly horizontal_weight(int pos, const WeightFrame& frame);

struct Region {
    std::set<Tri> tris;
    std::set<Edge> barriers;
    WeightFrame frame;
    // Removed triangles kept for drawing only (dents, intrusion, fern).
    std::set<Tri> holes;

    bool contains(const Tri& t) const { return tris.count(t) > 0; }
    bool barred(const Edge& e) const { return barriers.count(e) > 0; }
    // Lozenge partners of t inside the region, barriers respected.
    std::vector<Tri> partners(const Tri& t) const;
    // Same triangles, barriers and frame (holes ignored).
    bool same_tiling_problem(const Region& o) const;
    Region translated(int dcol, int dpos) const;
};

int balance(const Region& r);

// Weight of the lozenge formed by two adjacent triangles; throws
// std::invalid_argument for a non-adjacent or same-orientation pair.
QPoly lozenge_weight(const Tri& t1, const Tri& t2, const WeightFrame& frame);

struct PeelResult {
    Region residual;
    QPoly factor;
    std::vector<Edge> forced;  // lozenges removed, in scan order
};

// Removes every lozenge common to all tilings and multiplies their weights
// into the factor. Untilable input gives factor 0 and an empty region.
PeelResult peel_forced(const Region& r);

// Horizontal-lozenge count shared by every tiling; nullopt if the strip
// balances rule out any tiling.
std::optional<int> horizontal_count(const Region& r);

struct SvgOptions {
    double unit = 18.0;
    bool show_axis = true;
    bool show_holes = true;
};
std::string render_svg(const Region& r, const SvgOptions& opt = {});
std::string render_ascii(const Region& r);

}  // namespace tilinglab
