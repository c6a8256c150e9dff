#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace zdg {

enum class Errc {
    invalid_input,   // malformed spec, violated precondition
    budget_exceeded, // a configurable cap was hit
    theorem,         // a verified statement failed to hold
    internal,
};

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
    Errc code() const { return code_; }

private:
    Errc code_;
};

struct Budgets {
    long long iso_nodes = 10'000'000;        // backtracking nodes per isomorphism search
    int ideal_cap = 4096;                    // maximum ideals enumerated per ring
    int hom_order_cap = 16;                  // ring-order bound for homomorphism searches
    long long hom_candidates = 1'000'000;    // candidate assignments per hom enumeration
    long long validate_exhaustive_max = 256; // exhaustive axiom check up to this order
    long long validate_samples = 1'000'000;  // sampled triples above the threshold
};

} // namespace zdg
