#pragma once

#include <optional>
#include <string>
#include <vector>

#include "zdg/ideals.hpp"
#include "zdg/zdgraph.hpp"

namespace zdg {

// zeta on a homomorphism: [a] -> [f(a)]. Errors with a witness when the relation
// pair is not functorial for f.
GraphMap zeta_hom(const RingHom& f, const RelationSpec& kindA, const RelationSpec& kindB);

struct ComparisonFlags {
    bool is_strong = false;
    bool is_epi = false;  // surjective on vertices
    bool is_mono = false; // injective on vertices
    bool is_iso = false;
};

struct ComparisonReport {
    std::string comparison; // "product" / "equalizer" / "localization"
    GraphMap canonical_map;
    ComparisonFlags flags;
    bool condition1 = false; // comparison-specific sufficient condition
    bool condition2 = false;
    std::vector<int> condition_witness; // elements violating condition1, when any
    std::string note;
};

bool map_is_epi(const GraphMap& m);
bool map_is_mono(const GraphMap& m);

// Componentwise condition: related pairs in A and B stay related in A x B.
struct Cpf2Result {
    bool holds = false;
    std::vector<int> witness; // (a, a2, b, b2)
};
Cpf2Result product_relation_condition(RingPtr A, RingPtr B, const RelationSpec& kind);

// Canonical map zeta(A x B) -> zeta(A) x zeta(B). condition1 = componentwise
// relation condition (when it holds the map must be an isomorphism).
ComparisonReport product_comparison(RingPtr A, RingPtr B, const RelationSpec& kind,
                                    const Budgets& budgets = {});

// Canonical map zeta(Eq(f,g)) -> Eq(zeta(f), zeta(g)). Always strong; condition1
// forces injectivity, condition2 forces surjectivity.
ComparisonReport equalizer_comparison(const RingHom& f, const RingHom& g, const RelationSpec& kind,
                                      const Budgets& budgets = {});

// Canonical map zeta(A) -> zeta(S^-1 A). condition1: a/s related to a/1 for all a, s
// (forces epi); condition2: S consists of units (forces comorphism).
ComparisonReport localization_comparison(RingPtr A, const std::vector<int>& S,
                                         const RelationSpec& kind, const Budgets& budgets = {});

struct OrthogonalPair {
    int a1 = -1, a2 = -1;
    GraphMap iso; // zeta(A, R) -> G1 x G2
};

// Representatives of the classes mapped to ([1],[0]) and ([0],[1]) under a searched
// isomorphism zeta(A,R) ~ G1 x G2; absent when no isomorphism or no such pair exists.
std::optional<OrthogonalPair> find_orthogonal_pair(RingPtr A, const EqRelation& R, const Graph& g1,
                                                   const Graph& g2, const Budgets& budgets = {});

struct Factorization {
    int a1 = -1, a2 = -1;
    IdealSet ann1, ann2;
    QuotientResult q1, q2; // A/Ann(a1), A/Ann(a2)
    RingPtr product;
    RingHom iso;           // A -> A/Ann(a1) x A/Ann(a2)
    GraphMap side1, side2; // zeta(quotient) ~ given factor graph
    bool psi_strong = false, psi_injective = false, psi_surjective = false;
};

// Inversion of product: from zeta(A,R) ~ G1 x G2 recover A ~ A/Ann(a1) x A/Ann(a2)
// with verified side graph isomorphisms. R must be the associated relation for the
// injectivity guarantee; every verification failure names the failing clause.
Factorization invert_product(RingPtr A, const RelationSpec& kind, const Graph& g1, const Graph& g2,
                             const Budgets& budgets = {});

// The neighbor subgraph of ([0],[1]) in zeta(A) x zeta(B) is isomorphic to zeta(A),
// and symmetrically; returns false with a note when either side fails.
bool subgraph_splitting_check(RingPtr A, RingPtr B, const RelationSpec& kind,
                              const Budgets& budgets = {}, std::string* note = nullptr);

// All unital ring homomorphisms A -> B, enumerated from images of additive generators.
std::vector<RingHom> enumerate_homs(RingPtr A, RingPtr B, const Budgets& budgets = {});

} // namespace zdg
