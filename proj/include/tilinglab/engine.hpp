// Tiling generating functions: a memoised search oracle, a strip-profile
// dynamic program, and the diagonal-split sum for intrusion hexagons.
#pragma once

#include "tilinglab/regions.hpp"

#include <stdexcept>
#include <vector>

namespace tilinglab {

struct cap_exceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Caps {
    int dfs = 60;   // triangles
    int dp = 24;    // triangles in the tallest strip
};
// Defaults overridden by TILINGLAB_CAPS="dfs=60,dp=24".
Caps caps_from_env();

enum class Method { DFS, ProfileDP, DiagonalSplit };
std::string method_name(Method m);

struct TGFResult {
    QPoly value;
    mpq_class tilings_at_q1;
    Method method = Method::ProfileDP;
};

QPoly tgf_dfs(const Region& r, int cap = caps_from_env().dfs);
QPoly tgf_dp(const Region& r, int cap = caps_from_env().dp);
TGFResult tgf(const Region& r, Method m);

// Number of tilings (all weights set to 1).
mpz_class count_tilings(const Region& r, int cap = caps_from_env().dp);

// Largest total |offset| over horizontal lozenges of any tiling; every
// q-exponent of the TGF lies in [-M, M]. -1 if untileable.
int exponent_bound(const Region& r, int cap = caps_from_env().dp);

// The TGF evaluated at integer points q0 (Standard or NumericXY frames).
std::vector<mpq_class> tgf_points(const Region& r, const std::vector<long>& q0s, int cap = caps_from_env().dp);

// Sum over crossing sets on the vertical diagonal of products of the
// closed forms of the three pieces.
QPoly diagonal_split_tgf(const HSpec& s);

}  // namespace tilinglab
