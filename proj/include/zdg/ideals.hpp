#pragma once

#include <optional>
#include <vector>

#include "zdg/ring.hpp"

namespace zdg {

// Every ideal, computed as the closure of the principal ideals under ideal sum.
// Sorted by (size, members); throws Errc::budget_exceeded past budgets.ideal_cap.
std::vector<IdealSet> all_ideals(const FiniteRing& A, const Budgets& budgets = {});

struct IdealOps {
    IdealSet sum, intersection;
    bool product_is_zero = false;
};

IdealOps ideal_ops(const IdealSet& I, const IdealSet& J);

// Additive closure of pairwise products; an ideal whenever I and J are.
IdealSet ideal_product(const IdealSet& I, const IdealSet& J);

struct LocalData {
    bool is_local = false;
    std::vector<IdealSet> maximal_ideals;
    std::optional<int> nilpotency_index; // least k with m^k = 0, when local
};

LocalData local_data(const FiniteRing& A, const Budgets& budgets = {});

bool is_pir(const FiniteRing& A, const Budgets& budgets = {});

// Inclusion-preserving bijection between the ideal lattices, as an index map
// into all_ideals(A) -> all_ideals(B); nullopt when none exists.
std::optional<std::vector<int>> ideal_poset_iso(const FiniteRing& A, const FiniteRing& B,
                                                const Budgets& budgets = {});

} // namespace zdg
