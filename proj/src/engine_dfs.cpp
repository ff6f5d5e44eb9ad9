#include "tilinglab/engine.hpp"

#include <cstdlib>
#include <map>
#include <sstream>
#include <unordered_map>

namespace tilinglab {

Caps caps_from_env() {
    Caps c;
    const char* env = std::getenv("TILINGLAB_CAPS");
    if (!env) return c;
    std::stringstream ss(env);
    std::string item;
    while (std::getline(ss, item, ',')) {
        auto eq = item.find('=');
        if (eq == std::string::npos) continue;
        std::string key = item.substr(0, eq);
        int v = std::atoi(item.c_str() + eq + 1);
        if (v <= 0) continue;
        if (key == "dfs") c.dfs = v;
        else if (key == "dp") c.dp = v;
    }
    return c;
}

std::string method_name(Method m) {
    switch (m) {
        case Method::DFS: return "dfs";
        case Method::ProfileDP: return "dp";
        case Method::DiagonalSplit: return "split";
    }
    return "?";
}

namespace {

struct Dfs {
    struct Arc {
        int to;
        QPoly w;
    };
    std::vector<std::vector<Arc>> arcs;
    std::unordered_map<std::uint64_t, QPoly> memo;

    QPoly solve(std::uint64_t left) {
        if (!left) return QPoly(1);
        auto it = memo.find(left);
        if (it != memo.end()) return it->second;
        int best = -1, best_deg = 4;
        for (std::uint64_t m = left; m; m &= m - 1) {
            int i = __builtin_ctzll(m);
            int deg = 0;
            for (const Arc& a : arcs[i]) deg += (left >> a.to) & 1;
            if (deg < best_deg) {
                best_deg = deg;
                best = i;
                if (deg == 0) break;
            }
        }
        QPoly total;
        if (best_deg > 0) {
            for (const Arc& a : arcs[best]) {
                if (!((left >> a.to) & 1)) continue;
                std::uint64_t rest = left & ~(1ULL << best) & ~(1ULL << a.to);
                QPoly sub = solve(rest);
                if (!sub.is_zero()) total += a.w * sub;
            }
        }
        memo.emplace(left, total);
        return total;
    }
};

}  // namespace

QPoly tgf_dfs(const Region& r, int cap) {
    const int n = int(r.tris.size());
    if (n > cap || n > 64)
        throw cap_exceeded("search engine cap exceeded: " + std::to_string(n) + " triangles > " +
                           std::to_string(std::min(cap, 64)));
    if (balance(r) != 0) return QPoly();
    std::map<Tri, int> idx;
    std::vector<Tri> ts(r.tris.begin(), r.tris.end());
    for (int i = 0; i < n; ++i) idx[ts[i]] = i;
    Dfs d;
    d.arcs.resize(n);
    for (int i = 0; i < n; ++i)
        for (const Tri& p : r.partners(ts[i])) d.arcs[i].push_back({idx.at(p), lozenge_weight(ts[i], p, r.frame)});
    std::uint64_t all = n == 64 ? ~0ULL : ((1ULL << n) - 1);
    return d.solve(all);
}

}  // namespace tilinglab
