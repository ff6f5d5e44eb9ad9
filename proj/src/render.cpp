#include "tilinglab/lattice.hpp"

#include <algorithm>
#include <array>
#include <climits>
#include <cmath>
#include <map>
#include <sstream>

namespace tilinglab {

namespace {

// Lattice vertex: (line index, doubled height).
using Vtx = std::pair<int, int>;

std::array<Vtx, 3> corners(const Tri& t) {
    if (t.left()) return {Vtx{t.col + 1, t.pos - 1}, Vtx{t.col + 1, t.pos + 1}, Vtx{t.col, t.pos}};
    return {Vtx{t.col, t.pos - 1}, Vtx{t.col, t.pos + 1}, Vtx{t.col + 1, t.pos}};
}

struct Box {
    int c0 = INT_MAX, c1 = INT_MIN, p0 = INT_MAX, p1 = INT_MIN;
    void add(const Tri& t) {
        for (auto [c, p] : corners(t)) {
            c0 = std::min(c0, c);
            c1 = std::max(c1, c);
            p0 = std::min(p0, p);
            p1 = std::max(p1, p);
        }
    }
    bool empty() const { return c0 > c1; }
};

}  // namespace

std::string render_svg(const Region& r, const SvgOptions& opt) {
    Box box;
    for (const Tri& t : r.tris) box.add(t);
    if (opt.show_holes)
        for (const Tri& t : r.holes) box.add(t);
    if (box.empty()) box = Box{0, 1, -1, 1};

    const double dx = opt.unit * std::sqrt(3.0) / 2.0;
    const double dy = opt.unit / 2.0;
    const double margin = opt.unit;
    auto X = [&](int c) { return margin + (c - box.c0) * dx; };
    auto Y = [&](int p) { return margin + (box.p1 - p) * dy; };
    const double w = 2 * margin + (box.c1 - box.c0) * dx;
    const double h = 2 * margin + (box.p1 - box.p0) * dy;

    std::ostringstream os;
    os.setf(std::ios::fixed);
    os.precision(2);
    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
       << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << w << "\" height=\"" << h
       << "\" viewBox=\"0 0 " << w << ' ' << h << "\">\n";
    auto poly = [&](const Tri& t, const char* fill, const char* stroke) {
        os << "<polygon points=\"";
        for (auto [c, p] : corners(t)) os << X(c) << ',' << Y(p) << ' ';
        os << "\" fill=\"" << fill << "\" stroke=\"" << stroke << "\" stroke-width=\"0.6\"/>\n";
    };
    os << "<g id=\"triangles\">\n";
    for (const Tri& t : r.tris) poly(t, t.left() ? "#f4f4f4" : "#dcdcdc", "#999999");
    os << "</g>\n";
    if (opt.show_holes) {
        os << "<g id=\"holes\">\n";
        for (const Tri& t : r.holes)
            if (!r.contains(t)) poly(t, "#444444", "#222222");
        os << "</g>\n";
    }
    os << "<g id=\"barriers\" stroke=\"#d01010\" stroke-width=\"3\">\n";
    for (const Edge& e : r.barriers) {
        auto [l, rt] = edge_tris(e);
        auto a = corners(l), b = corners(rt);
        std::vector<Vtx> shared;
        for (auto v : a)
            if (std::find(b.begin(), b.end(), v) != b.end()) shared.push_back(v);
        if (shared.size() != 2) continue;
        os << "<line x1=\"" << X(shared[0].first) << "\" y1=\"" << Y(shared[0].second) << "\" x2=\""
           << X(shared[1].first) << "\" y2=\"" << Y(shared[1].second) << "\"/>\n";
    }
    os << "</g>\n";
    if (opt.show_axis) {
        double ya = Y(r.frame.axis_offset2);
        os << "<line id=\"axis\" x1=\"" << margin / 2 << "\" y1=\"" << ya << "\" x2=\"" << w - margin / 2
           << "\" y2=\"" << ya << "\" stroke=\"#1060d0\" stroke-dasharray=\"4,3\" stroke-width=\"1\"/>\n";
    }
    os << "</svg>\n";
    return os.str();
}

// One text row per pos value, one cell per strip: '<' and '>' for
// left/right-pointing triangles, '#' for holes, '.' elsewhere. Barrier
// edges are listed underneath.
std::string render_ascii(const Region& r) {
    Box box;
    for (const Tri& t : r.tris) box.add(t);
    for (const Tri& t : r.holes) box.add(t);
    if (box.empty()) return "(empty region)\n";
    std::ostringstream os;
    for (int p = box.p1 - 1; p >= box.p0 + 1; --p) {
        os << (p == r.frame.axis_offset2 ? '-' : ' ');
        for (int c = box.c0; c < box.c1; ++c) {
            Tri t = Tri::at(c, p);
            char ch = '.';
            if (r.contains(t)) ch = t.left() ? '<' : '>';
            else if (r.holes.count(t)) ch = '#';
            os << ch;
        }
        os << '\n';
    }
    for (const Edge& e : r.barriers) {
        static const char* dn[] = {"H", "U", "D"};
        os << "barrier " << e.left.col << ' ' << e.left.pos << ' ' << dn[int(e.dir)] << '\n';
    }
    return os.str();
}

}  // namespace tilinglab
