// Constructors for the region families: hexagons, trapezoids, quartered
// hexagons, ferns, hexagons with intrusions, and the five fern families.
//
// Placement conventions: every polygon is built from its vertex path on
// (line, doubled height). Unless stated otherwise the horizontal symmetry
// axis sits at pos 0 and is also the weight axis.
#pragma once

#include "tilinglab/lattice.hpp"

#include <string>
#include <utility>
#include <vector>

namespace tilinglab {

struct spec_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Lattice directions for polygon sides.
enum class Step { N, NE, SE, S, SW, NW };

// Triangles enclosed by the closed path starting at vertex (c0, p0).
std::set<Tri> polygon_tris(int c0, int p0, const std::vector<std::pair<Step, int>>& sides);

// a,b,c,a,b,c clockwise from the vertical left side; left side centred on
// pos 0. Pass a frame with axis_offset2 = -k for the "line i = k" placement.
Region hexagon(int a, int b, int c, const WeightFrame& frame = {});

// Trapezoid with sides x, y, x+y, y; dents are left-pointing triangles on
// the right side, Z in doubled labels (odd/even as x+y is even/odd).
Region trapezoid_S(int x, int y, const LabelSet& Z, const WeightFrame& frame = {});
// Same region indexed by W subset of [x+y]; weight axis at line i = k.
Region trapezoid_S_bar(int x, int y, const std::set<int>& W, int k, WeightFrame frame = WeightFrame::symbolic());

// Quartered hexagons; Z holds doubled labels (even for R_{x,2y}, odd for
// R_{x,2y+1}). Axis through the bottom vertices.
Region quarter_R_even(int x, int y, const LabelSet& Z);
Region quarter_R_odd(int x, int y, const LabelSet& Z);

struct FernSpec {
    std::vector<int> arms;  // a1, ..., a_{2k+1}
    bool flipped = false;

    void validate() const;
    int ao() const;
    int ae() const;
    int total() const { return ao() + ae(); }
    // Doubled i-coordinates of the unit triangles along the fern axis,
    // i.e. Q_o, Q_e as Label2 (equal to P_o, P_e).
    LabelSet P_o() const;
    LabelSet P_e() const;
};

// Fern with vertical axis on line `axis_col`, symmetric about pos 0. The
// core points left unless flipped.
std::set<Tri> fern_tris(const FernSpec& f, int axis_col);
QPoly fern_weight(const FernSpec& f);

struct HSpec {
    bool prime = false;  // false: odd diagonal H, true: even diagonal H'
    int m = 0, n = 0, a = 0, b = 0, c = 0;
    LabelSet L1, R1, B;

    void validate() const;  // throws spec_error naming the failed constraint
    int N() const { return m + n + a + c; }
    int diag_col() const { return 2 * m + 2 * a + (prime ? 2 : 1); }
    Label2 max_label() const { return prime ? 2 * N() + 1 : 2 * N(); }
    // every label on the diagonal, bottom to top
    std::vector<Label2> labels() const;
    std::string name() const;
    auto operator<=>(const HSpec&) const = default;
};

Region hex_intrusion(const HSpec& s);
HSpec flip(const HSpec& s, const LabelSet& Fl, const LabelSet& Fr);

enum class Family { A, B, C, D, E };
char family_char(Family f);
Family family_from_char(char c);

struct FamilySpec {
    Family family = Family::A;
    int x = 0, y = 0, z = 0, w = 0;
    std::vector<int> arms{1};

    void validate() const;
    int ao() const;
    int ae() const;
    int a() const { return ao() + ae(); }
    std::string name() const;
};

// The fern actually removed (core 2a1 or 2a1-1, flipped for D and E) and
// the single-triangle fern of the collapsed region.
FernSpec family_fern(const FamilySpec& fs);
FernSpec collapsed_fern(const FamilySpec& fs);
FamilySpec collapsed_spec(const FamilySpec& fs);

Region family_region(const FamilySpec& fs);
Region family_collapsed(const FamilySpec& fs);

enum class YCase { YltW, WleYleZ, ZltY };
std::string ycase_name(YCase c);
YCase ycase_of(const FamilySpec& fs);

enum class Thm34Variant { Statement, ProofIndexing, CorrectedY };
std::string variant_name(Thm34Variant v);

struct Thm34Instance {
    HSpec num;  // realizes the fern region after peeling (with `barrier`)
    HSpec den;  // flip of num; realizes the collapsed region
    YCase ycase = YCase::WleYleZ;
    Thm34Variant variant = Thm34Variant::Statement;
    LabelSet X, Y, Qo, Qe;
    LabelSet barrier;  // barrier labels used for the peel comparison
    LabelSet Fl, Fr;   // flip sets taking num to den
};

Thm34Instance thm34_instance(const FamilySpec& fs, Thm34Variant v = Thm34Variant::Statement);

}  // namespace tilinglab
