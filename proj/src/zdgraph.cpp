#include "zdg/zdgraph.hpp"

#include <algorithm>

namespace zdg {

Graph zeta(const FiniteRing& A, const EqRelation& R) {
    if (R.ring != &A) throw Error(Errc::invalid_input, "zeta: relation of a different ring");
    auto zdr = is_zero_divisor_relation(A, R);
    if (!zdr.is_zdr) {
        const auto& w = *zdr.witness;
        throw Error(Errc::invalid_input,
                    "zeta: not a zero-divisor relation; witness (a=" + std::to_string(w[0]) +
                        ", a'=" + std::to_string(w[1]) + ", b=" + std::to_string(w[2]) +
                        ", b'=" + std::to_string(w[3]) + ")");
    }
    const int V = R.block_count();
    Graph g(V);
    for (int v = 0; v < V; ++v) {
        g.set_label(v, "(" + A.label(R.rep(v)) + ")");
        g.set_payload(v, R.rep(v));
    }
    for (int i = 0; i < V; ++i)
        for (int j = i; j < V; ++j)
            if (A.mul(R.rep(i), R.rep(j)) == A.zero()) g.add_edge(i, j);
    return g;
}

Graph zeta(const FiniteRing& A, const RelationSpec& kind) {
    return zeta(A, relation_partition(A, kind));
}

Graph zeta_restricted(const FiniteRing& A, const EqRelation& R, const std::vector<int>& X) {
    Graph full = zeta(A, R);
    std::vector<char> keep_class(R.block_count(), 0);
    for (int x : X) {
        if (x < 0 || x >= A.order())
            throw Error(Errc::invalid_input, "zeta_restricted: element out of range");
        keep_class[R.class_of[x]] = 1;
    }
    std::vector<int> keep;
    for (int v = 0; v < R.block_count(); ++v)
        if (keep_class[v]) keep.push_back(v);
    return induced_subgraph(full, keep);
}

ClassicalViews classical_views(const FiniteRing& A) {
    auto ec = classify_elements(A);
    auto eq = relation_partition(A, RelationSpec::equality());
    auto equiann = relation_partition(A, RelationSpec::equiannihilated());
    ClassicalViews v;
    v.beck = strip_loops(zeta(A, eq));
    v.anderson_livingston = strip_loops(zeta_restricted(A, eq, ec.dstar));
    v.mulay = strip_loops(zeta_restricted(A, equiann, ec.dstar));
    return v;
}

std::vector<std::vector<int>> vertex_partition_by(const Graph& zg, const EqRelation& coarser) {
    std::vector<std::vector<int>> blocks(coarser.block_count());
    for (int v = 0; v < zg.size(); ++v) {
        int rep = zg.payload(v);
        if (rep < 0 || rep >= int(coarser.class_of.size()))
            throw Error(Errc::invalid_input, "vertex_partition_by: vertex lacks a ring payload");
        blocks[coarser.class_of[rep]].push_back(v);
    }
    blocks.erase(std::remove_if(blocks.begin(), blocks.end(),
                                [](const auto& b) { return b.empty(); }),
                 blocks.end());
    return blocks;
}

} // namespace zdg
