#include "tilinglab/lattice.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

namespace tilinglab {

Tri Tri::at(int col, int pos) {
    return Tri{col, pos, ((pos - col) & 1) ? Orient::Right : Orient::Left};
}

bool Tri::well_formed() const { return Tri::at(col, pos).orient == orient; }

std::optional<Edge> edge_between(const Tri& a, const Tri& b) {
    if (a.orient == b.orient) return std::nullopt;
    const Tri& l = a.left() ? a : b;
    const Tri& r = a.left() ? b : a;
    if (!l.well_formed() || !r.well_formed()) return std::nullopt;
    if (r.col == l.col + 1 && r.pos == l.pos) return Edge{l, Dir::Horizontal};
    if (r.col == l.col && r.pos == l.pos + 1) return Edge{l, Dir::Up};
    if (r.col == l.col && r.pos == l.pos - 1) return Edge{l, Dir::Down};
    return std::nullopt;
}

std::pair<Tri, Tri> edge_tris(const Edge& e) {
    const Tri& l = e.left;
    switch (e.dir) {
        case Dir::Horizontal: return {l, Tri{l.col + 1, l.pos, Orient::Right}};
        case Dir::Up: return {l, Tri{l.col, l.pos + 1, Orient::Right}};
        case Dir::Down: return {l, Tri{l.col, l.pos - 1, Orient::Right}};
    }
    throw std::logic_error("bad edge direction");
}

std::vector<Tri> lattice_neighbors(const Tri& t) {
    if (t.left())
        return {Tri{t.col + 1, t.pos, Orient::Right}, Tri{t.col, t.pos + 1, Orient::Right},
                Tri{t.col, t.pos - 1, Orient::Right}};
    return {Tri{t.col - 1, t.pos, Orient::Left}, Tri{t.col, t.pos + 1, Orient::Left},
            Tri{t.col, t.pos - 1, Orient::Left}};
}

Tri horizontal_partner(const Tri& t) {
    if (t.left()) return Tri{t.col + 1, t.pos, Orient::Right};
    return Tri{t.col - 1, t.pos, Orient::Left};
}

WeightFrame WeightFrame::symbolic(int axis_offset2) {
    WeightFrame f;
    f.axis_offset2 = axis_offset2;
    f.mode = WeightMode::SymbolicXY;
    return f;
}

WeightFrame WeightFrame::numeric(int axis_offset2, const mpq_class& x0, const mpq_class& y0) {
    WeightFrame f;
    f.axis_offset2 = axis_offset2;
    f.mode = WeightMode::NumericXY;
    f.x0 = x0;
    f.y0 = y0;
    return f;
}

bool WeightFrame::operator==(const WeightFrame& o) const {
    if (axis_offset2 != o.axis_offset2 || mode != o.mode) return false;
    return mode != WeightMode::NumericXY || (x0 == o.x0 && y0 == o.y0);
}

QPoly horizontal_weight(int pos, const WeightFrame& frame) {
    int n = pos - frame.axis_offset2;
    QPoly w;
    mpq_class half(1, 2);
    switch (frame.mode) {
        case WeightMode::Standard:
            w.add_term(Mono{n, 0, 0}, half);
            w.add_term(Mono{-n, 0, 0}, half);
            break;
        case WeightMode::SymbolicXY:
            w.add_term(Mono{n, 1, 0}, half);
            w.add_term(Mono{-n, 0, 1}, half);
            break;
        case WeightMode::NumericXY:
            w.add_term(Mono{n, 0, 0}, half * frame.x0);
            w.add_term(Mono{-n, 0, 0}, half * frame.y0);
            break;
    }
    return w;
}

QPoly lozenge_weight(const Tri& t1, const Tri& t2, const WeightFrame& frame) {
    auto e = edge_between(t1, t2);
    if (!e) throw std::invalid_argument("lozenge_weight: triangles are not adjacent");
    if (e->dir != Dir::Horizontal) return QPoly(1);
    return horizontal_weight(e->left.pos, frame);
}

std::vector<Tri> Region::partners(const Tri& t) const {
    std::vector<Tri> out;
    for (const Tri& n : lattice_neighbors(t)) {
        if (!contains(n)) continue;
        if (barred(*edge_between(t, n))) continue;
        out.push_back(n);
    }
    return out;
}

bool Region::same_tiling_problem(const Region& o) const {
    return tris == o.tris && barriers == o.barriers && frame == o.frame;
}

Region Region::translated(int dcol, int dpos) const {
    if ((dcol - dpos) & 1) throw std::invalid_argument("translation must preserve orientation parity");
    auto mv = [&](const Tri& t) { return Tri{t.col + dcol, t.pos + dpos, t.orient}; };
    Region r;
    for (const Tri& t : tris) r.tris.insert(mv(t));
    for (const Tri& t : holes) r.holes.insert(mv(t));
    for (const Edge& e : barriers) r.barriers.insert(Edge{mv(e.left), e.dir});
    r.frame = frame;
    r.frame.axis_offset2 += dpos;
    return r;
}

int balance(const Region& r) {
    int b = 0;
    for (const Tri& t : r.tris) b += t.left() ? 1 : -1;
    return b;
}

std::optional<int> horizontal_count(const Region& r) {
    std::map<int, int> per_col;
    for (const Tri& t : r.tris) per_col[t.col] += t.left() ? 1 : -1;
    int run = 0, h = 0;
    for (const auto& [c, d] : per_col) {
        (void)c;
        run += d;
        if (run < 0) return std::nullopt;
        h += run;
    }
    if (run != 0) return std::nullopt;
    return h;
}

PeelResult peel_forced(const Region& r) {
    std::vector<Tri> ls, rs;
    for (const Tri& t : r.tris) (t.left() ? ls : rs).push_back(t);
    PeelResult out;
    out.factor = QPoly();
    if (ls.size() != rs.size()) return out;
    if (ls.empty()) {
        out.residual = r;
        out.factor = QPoly(1);
        return out;
    }

    std::map<Tri, int> ridx;
    for (std::size_t i = 0; i < rs.size(); ++i) ridx[rs[i]] = int(i);
    std::vector<std::vector<int>> adj(ls.size());
    for (std::size_t i = 0; i < ls.size(); ++i)
        for (const Tri& n : r.partners(ls[i])) adj[i].push_back(ridx.at(n));

    // Kuhn's augmenting paths
    std::vector<int> match_l(ls.size(), -1), match_r(rs.size(), -1);
    std::vector<int> seen(rs.size(), -1);
    std::function<bool(int, int)> augment = [&](int u, int stamp) {
        for (int v : adj[u]) {
            if (seen[v] == stamp) continue;
            seen[v] = stamp;
            if (match_r[v] < 0 || augment(match_r[v], stamp)) {
                match_l[u] = v;
                match_r[v] = u;
                return true;
            }
        }
        return false;
    };
    for (std::size_t u = 0; u < ls.size(); ++u)
        if (!augment(int(u), int(u))) return out;

    // Tarjan SCC on the alternating orientation: unmatched L->R, matched R->L.
    int nl = int(ls.size()), n = nl + int(rs.size());
    std::vector<std::vector<int>> g(n);
    for (int u = 0; u < nl; ++u)
        for (int v : adj[u]) {
            if (match_l[u] == v) g[nl + v].push_back(u);
            else g[u].push_back(nl + v);
        }
    std::vector<int> index(n, -1), low(n, 0), comp(n, -1), stack;
    std::vector<char> on_stack(n, 0);
    int counter = 0, ncomp = 0;
    std::function<void(int)> strong = [&](int v) {
        index[v] = low[v] = counter++;
        stack.push_back(v);
        on_stack[v] = 1;
        for (int w : g[v]) {
            if (index[w] < 0) {
                strong(w);
                low[v] = std::min(low[v], low[w]);
            } else if (on_stack[w]) {
                low[v] = std::min(low[v], index[w]);
            }
        }
        if (low[v] == index[v]) {
            int w;
            do {
                w = stack.back();
                stack.pop_back();
                on_stack[w] = 0;
                comp[w] = ncomp;
            } while (w != v);
            ++ncomp;
        }
    };
    for (int v = 0; v < n; ++v)
        if (index[v] < 0) strong(v);

    Region res = r;
    QPoly factor(1);
    for (int u = 0; u < nl; ++u) {
        int v = match_l[u];
        if (comp[u] == comp[nl + v]) continue;
        Edge e = *edge_between(ls[u], rs[v]);
        out.forced.push_back(e);
        if (e.dir == Dir::Horizontal) factor *= horizontal_weight(e.left.pos, r.frame);
        res.tris.erase(ls[u]);
        res.tris.erase(rs[v]);
    }
    for (auto it = res.barriers.begin(); it != res.barriers.end();) {
        auto [a, b] = edge_tris(*it);
        if (!res.contains(a) || !res.contains(b)) it = res.barriers.erase(it);
        else ++it;
    }
    out.residual = std::move(res);
    out.factor = factor;
    return out;
}

}  // namespace tilinglab
