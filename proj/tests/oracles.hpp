#pragma once

// Test-only oracles, independent of the library code paths they check.

#include <algorithm>
#include <numeric>
#include <optional>
#include <set>
#include <vector>

#include "zdg/graph.hpp"
#include "zdg/ring.hpp"
#include "zdg/specio.hpp"

#ifndef ZDG_CATALOG_DIR
#define ZDG_CATALOG_DIR "catalog"
#endif

namespace oracle {

inline zdg::RingPtr catalog_ring(const std::string& name) {
    return zdg::build_ring(zdg::load_spec(std::string(ZDG_CATALOG_DIR) + "/" + name + ".spec"));
}

inline std::string catalog_path(const std::string& name) {
    return std::string(ZDG_CATALOG_DIR) + "/" + name + ".spec";
}

// Exhaustive permutation search; only for graphs with at most 8 vertices.
inline bool brute_force_isomorphic(const zdg::Graph& g, const zdg::Graph& h) {
    if (g.size() != h.size()) return false;
    const int n = g.size();
    if (n > 8) throw std::runtime_error("brute_force_isomorphic: graph too large");
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        bool ok = true;
        for (int i = 0; i < n && ok; ++i)
            for (int j = i; j < n && ok; ++j)
                ok = g.adjacent(i, j) == h.adjacent(perm[i], perm[j]);
        if (ok) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

// Subset scan over all 2^N element sets; only for rings of order at most 16.
inline int count_ideals_by_subset_scan(const zdg::FiniteRing& A) {
    const int n = A.order();
    if (n > 16) throw std::runtime_error("count_ideals_by_subset_scan: ring too large");
    int count = 0;
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
        if (!(mask >> A.zero() & 1)) continue;
        std::vector<int> members;
        for (int e = 0; e < n; ++e)
            if (mask >> e & 1) members.push_back(e);
        bool ok = true;
        for (int a : members)
            for (int b : members)
                if (!(mask >> A.add(a, b) & 1)) { ok = false; break; }
        for (int r = 0; r < n && ok; ++r)
            for (int a : members)
                if (!(mask >> A.mul(r, a) & 1)) { ok = false; break; }
        if (ok) ++count;
    }
    return count;
}

// Direct edge count of the classical zero-divisor graph: unordered pairs of
// distinct nonzero zero-divisors with product zero.
inline int classical_edge_count(const zdg::FiniteRing& A) {
    auto ec = zdg::classify_elements(A);
    int edges = 0;
    for (size_t i = 0; i < ec.dstar.size(); ++i)
        for (size_t j = i + 1; j < ec.dstar.size(); ++j)
            if (A.mul(ec.dstar[i], ec.dstar[j]) == A.zero()) ++edges;
    return edges;
}

// All-pairs shortest paths by Floyd-Warshall on the loop-stripped graph.
inline std::optional<int> floyd_warshall_diameter(const zdg::Graph& g_in) {
    zdg::Graph g = zdg::strip_loops(g_in);
    const int n = g.size();
    if (n == 0) return 0;
    const int inf = 1 << 20;
    std::vector<std::vector<int>> d(n, std::vector<int>(n, inf));
    for (int i = 0; i < n; ++i) d[i][i] = 0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j && g.adjacent(i, j)) d[i][j] = 1;
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
    int best = 0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (d[i][j] >= inf) return std::nullopt;
            best = std::max(best, d[i][j]);
        }
    return best;
}

} // namespace oracle
