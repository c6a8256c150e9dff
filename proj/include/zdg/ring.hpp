#pragma once

#include <array>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "zdg/base.hpp"
#include "zdg/bits.hpp"

namespace zdg {

// Declarative description of a ring; the on-disk .spec format mirrors this.
struct RingSpec {
    enum class Kind { Zn, Product, Presented, Table };

    Kind kind = Kind::Zn;
    long n = 0;                                     // Zn: modulus
    std::vector<RingSpec> factors;                  // Product
    std::vector<int> orders;                        // Presented: additive order of each generator
    std::vector<int> one;                           // Presented: coordinates of 1
    std::vector<std::vector<std::vector<int>>> mul; // Presented: mul[i][j] = coords of e_i*e_j
    std::vector<std::vector<int>> add_table;        // Table
    std::vector<std::vector<int>> mul_table;        // Table
    int zero = 0;                                   // Table
    int one_id = 0;                                 // Table
    std::vector<std::string> labels;                // optional, any kind
};

class FiniteRing;
using RingPtr = std::shared_ptr<const FiniteRing>;

// A finite commutative ring given by explicit operation tables. Immutable once built;
// every operation below is a pure function of its inputs.
class FiniteRing {
public:
    FiniteRing(int n, std::vector<int> add, std::vector<int> mul, int zero, int one,
               RingSpec origin, std::vector<std::string> labels);

    int order() const { return n_; }
    int add(int a, int b) const { return add_[size_t(a) * n_ + b]; }
    int mul(int a, int b) const { return mul_[size_t(a) * n_ + b]; }
    int zero() const { return zero_; }
    int one() const { return one_; }
    int neg(int a) const { return neg_[a]; }
    int sub(int a, int b) const { return add(a, neg_[b]); }
    int pow(int a, long e) const;
    const std::string& label(int a) const { return labels_[a]; }
    const RingSpec& origin() const { return origin_; }

private:
    int n_;
    std::vector<int> add_, mul_;
    int zero_, one_;
    std::vector<int> neg_;
    RingSpec origin_;
    std::vector<std::string> labels_;
};

RingPtr build_zn(long n);
RingPtr build_product(const std::vector<RingPtr>& factors);
RingPtr build_presented(const RingSpec& spec);
RingPtr build_table(const RingSpec& spec);
RingPtr build_ring(const RingSpec& spec);

// Mixed-radix element encoding for product rings (first factor most significant).
int product_encode(const std::vector<RingPtr>& factors, const std::vector<int>& tuple);
std::vector<int> product_decode(const std::vector<RingPtr>& factors, int id);

struct ValidationReport {
    bool pass = true;
    std::string mode;           // "exhaustive" or "sampled"
    long long triples_checked = 0;
    std::string failed_axiom;   // empty when pass
    std::vector<int> witness;   // offending elements, when any
};

ValidationReport validate_ring(const FiniteRing& A, const Budgets& budgets = {});

struct ElementClasses {
    std::vector<int> units, zero_divisors, nilpotents, dstar;
    std::vector<char> is_unit, is_zero_divisor, is_nilpotent;
};

ElementClasses classify_elements(const FiniteRing& A);

struct IdealSet {
    const FiniteRing* ring = nullptr;
    std::vector<int> members; // sorted, contains zero

    int size() const { return int(members.size()); }
    bool contains(int x) const;
    Bitset bits() const { return bitset_of(ring->order(), members); }
};

// Returns a description of the first closure failure, or nullopt if members form an ideal.
std::optional<std::string> ideal_violation(const FiniteRing& A, const std::vector<int>& members);
IdealSet make_ideal(const FiniteRing& A, std::vector<int> members);

IdealSet annihilator(const FiniteRing& A, int a);
IdealSet principal_ideal(const FiniteRing& A, int a);

struct RingHom {
    RingPtr source, target;
    std::vector<int> map;

    int operator()(int a) const { return map[a]; }
};

// First pair (a,b) where additivity/multiplicativity fails, or {-1,-1} when 1 is not preserved.
std::optional<std::array<int, 2>> hom_violation(const RingHom& h);
RingHom make_ring_hom(RingPtr src, RingPtr tgt, std::vector<int> map);
RingHom identity_hom(RingPtr a);
RingHom compose(const RingHom& g, const RingHom& f); // g after f
bool is_bijective(const RingHom& h);

struct QuotientResult {
    RingPtr ring;
    RingHom projection; // projection.map[a] = coset id
};

QuotientResult quotient_ring(RingPtr A, const IdealSet& I);

struct Localization {
    RingPtr ring;
    RingHom phi;                            // a -> a/1
    std::vector<int> s_elements;            // sorted members of S
    std::vector<std::vector<int>> frac;     // frac[a][si] = class of a/s_elements[si]

    int frac_of(int a, int s) const;        // class of a/s; s must belong to S
};

Localization localize(RingPtr A, const std::vector<int>& S);

struct CrtFactorization {
    QuotientResult mod_i, mod_j;
    RingPtr product;
    RingHom iso; // A -> (A/I) x (A/J), verified bijective
};

CrtFactorization crt_factor(RingPtr A, const IdealSet& I, const IdealSet& J);

struct EqualizerSubring {
    RingPtr ring;
    RingHom inclusion; // subring element -> ambient element
};

EqualizerSubring equalizer_subring(const RingHom& f, const RingHom& g);

} // namespace zdg
