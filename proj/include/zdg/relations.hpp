#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "zdg/ring.hpp"

namespace zdg {

enum class RelKind { Equality, StronglyAssociated, Associated, Equiannihilated, Blend, Custom };
enum class BlendSubset { Nilpotents, Units };

struct RelationSpec {
    RelKind kind = RelKind::Equality;
    // Blend only: inside-kind on the selected subset, outside-kind on its complement;
    // cross pairs are never related.
    BlendSubset subset = BlendSubset::Nilpotents;
    RelKind inside = RelKind::Associated;
    RelKind outside = RelKind::StronglyAssociated;
    std::vector<std::vector<int>> custom_blocks; // Custom only

    std::string name() const;

    static RelationSpec equality() { return plain(RelKind::Equality); }
    static RelationSpec strongly_associated() { return plain(RelKind::StronglyAssociated); }
    static RelationSpec associated() { return plain(RelKind::Associated); }
    static RelationSpec equiannihilated() { return plain(RelKind::Equiannihilated); }
    static RelationSpec plain(RelKind k) {
        RelationSpec r;
        r.kind = k;
        return r;
    }
    static RelationSpec blend(BlendSubset s, RelKind in, RelKind out);
    static RelationSpec custom(std::vector<std::vector<int>> blocks);
};

// Selector strings: eq, sassoc, assoc, equiann, blend-nilp, blend-units.
RelationSpec parse_relation_selector(const std::string& s);

struct EqRelation {
    const FiniteRing* ring = nullptr;
    RelationSpec spec;
    std::vector<std::vector<int>> blocks; // sorted by least element; blocks sorted internally
    std::vector<int> class_of;

    bool related(int a, int b) const { return class_of[a] == class_of[b]; }
    int rep(int block) const { return blocks[block][0]; }
    int block_count() const { return int(blocks.size()); }
};

EqRelation relation_partition(const FiniteRing& A, const RelationSpec& kind);

struct ZdrResult {
    bool is_zdr = false;
    std::optional<std::array<int, 4>> witness; // (a, a', b, b') with ab=0 but a'b' != 0
};

// Literal check of the defining quantifier, scanned over related pairs.
ZdrResult is_zero_divisor_relation(const FiniteRing& A, const EqRelation& R);

bool is_finer(const EqRelation& r1, const EqRelation& r2);

struct FunctorialResult {
    bool ok = false;
    std::optional<std::pair<int, int>> witness; // related pair with unrelated images
};

FunctorialResult check_functorial(const RingHom& f, const RelationSpec& kindA,
                                  const RelationSpec& kindB);

// Seeded mix of refinements of the equiannihilated partition, coarse merges of it,
// and uniform random partitions; deterministic for a fixed seed.
std::vector<EqRelation> random_partition_suite(const FiniteRing& A, int count, uint64_t seed);

} // namespace zdg
