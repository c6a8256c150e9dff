#pragma once

#include <optional>
#include <string>
#include <vector>

#include "zdg/functor.hpp"

namespace zdg {

// Vertices 0..k, i adjacent to j iff i + j >= k.
Graph staircase(int k);

struct StaircaseReport {
    std::optional<int> index;
    std::optional<GraphMap> witness; // G -> staircase(index), strong bijective
    std::string failure_reason;
    int loop_count = 0;
};

// A graph on k+1 vertices with pairwise distinct degrees in 1..k+1 is a staircase;
// the witness maps each vertex by its degree rank and is re-verified.
StaircaseReport recognize_staircase(const Graph& g);

struct LocalAnnihilatorReport {
    bool condition_holds = false; // Ann(a) u Ann(b) strictly below Ann(ab) on all of D*(A)^2
    std::optional<std::pair<int, int>> witness;
    bool is_local = false;
    bool agrees = false; // condition_holds == is_local
};

LocalAnnihilatorReport check_local_annihilator(const FiniteRing& A, const Budgets& budgets = {});

struct PirLocReport {
    bool is_local_pir = false;
    std::optional<int> staircase_index;
    std::optional<int> nilpotency_index;
    bool consistent = false; // (local PIR) <=> staircase, and indices agree when both exist
};

PirLocReport check_pirloc(RingPtr A, const Budgets& budgets = {});

struct PirProductReport {
    bool is_pir = false;
    std::optional<std::vector<int>> staircase_indices; // from the backward search
    std::vector<int> factor_orders;                    // from the forward decomposition
    bool consistent = false;                           // pir <=> staircase-product found
};

PirProductReport check_pir_product(RingPtr A, const Budgets& budgets = {});

struct FactorTree {
    RingPtr ring;
    std::optional<Factorization> split; // absent at leaves
    std::vector<FactorTree> children;

    std::vector<RingPtr> leaves() const;
};

// Repeatedly invert products along orthogonal pairs until the factors are local.
// Every split runs the full verification pipeline. Absent when A has no
// orthogonal pair of nonzero zero-divisors (A local or too small).
std::optional<FactorTree> decompose_ring(RingPtr A, const Budgets& budgets = {});

struct LemmaRow {
    std::string lemma;
    std::string status; // "pass", "fail", "n/a"
    std::string detail;
};

struct LemmaReport {
    std::vector<LemmaRow> rows;
    bool all_pass = true; // failures only; n/a rows do not count
};

// propAnn1 (when D = N), staircase neighbor monotonicity, staircase power chain,
// the local-annihilator criterion, the product-splitting subgraph lemma against the
// given partners, and annihilator rigidity of orthogonal triples.
LemmaReport check_lemmas(RingPtr A, const std::vector<RingPtr>& ssi_partners,
                         const Budgets& budgets = {});

} // namespace zdg
