#pragma once

#include "zdg/graph.hpp"
#include "zdg/relations.hpp"
#include "zdg/ring.hpp"

namespace zdg {

// Vertices are the blocks of R labeled by least representative; [a] and [b] are
// adjacent iff ab = 0 (well defined because R is a zero-divisor relation, which
// is checked first; failure carries the witness).
Graph zeta(const FiniteRing& A, const EqRelation& R);
Graph zeta(const FiniteRing& A, const RelationSpec& kind);

// Subgraph of zeta(A, R) induced by the classes of the elements of X.
Graph zeta_restricted(const FiniteRing& A, const EqRelation& R, const std::vector<int>& X);

struct ClassicalViews {
    Graph beck;                // all elements, equality, loops removed
    Graph anderson_livingston; // nonzero zero-divisors, equality, loops removed
    Graph mulay;               // nonzero zero-divisors, equiannihilated, loops removed
};

ClassicalViews classical_views(const FiniteRing& A);

// Vertex partition of zeta(A, R) induced by a coarser relation.
std::vector<std::vector<int>> vertex_partition_by(const Graph& zg, const EqRelation& coarser);

} // namespace zdg
