#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "zdg/classify.hpp"

namespace zdg {

struct CatalogEntry {
    std::string name;
    RingPtr ring;
};

// Rings named by catalog/census.list.
std::vector<CatalogEntry> load_census_catalog(const std::string& dir);

// The prime-power grid z{p^k}.spec for p in {2,3,5}, k <= 5, with expected index.
struct GridEntry {
    std::string name;
    long p = 0;
    int k = 0;
    RingPtr ring;
};
std::vector<GridEntry> load_grid(const std::string& dir);

struct CensusOptions {
    std::string catalog_dir;
    uint64_t seed = 20240601;
    int product_order_cap = 256;
    int random_partitions = 60;
    Budgets budgets;
};

struct CensusResult {
    std::string report; // deterministic for fixed options
    int checks = 0;
    int failures = 0;
};

// Runs the invariant suite over the census catalog, pairwise products up to the
// order cap, and the prime-power grid.
CensusResult run_census(const CensusOptions& options);

} // namespace zdg
