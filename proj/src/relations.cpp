#include "zdg/relations.hpp"

#include <algorithm>
#include <map>
#include <random>

namespace zdg {

namespace {

std::string kind_name(RelKind k) {
    switch (k) {
    case RelKind::Equality: return "eq";
    case RelKind::StronglyAssociated: return "sassoc";
    case RelKind::Associated: return "assoc";
    case RelKind::Equiannihilated: return "equiann";
    case RelKind::Blend: return "blend";
    case RelKind::Custom: return "custom";
    }
    return "?";
}

EqRelation from_class_ids(const FiniteRing& A, RelationSpec spec, const std::vector<int>& key) {
    // group elements by key, renumber blocks by least element
    std::map<int, std::vector<int>> by_key;
    for (int a = 0; a < A.order(); ++a) by_key[key[a]].push_back(a);
    std::vector<std::vector<int>> blocks;
    blocks.reserve(by_key.size());
    for (auto& [k, v] : by_key) blocks.push_back(std::move(v));
    std::sort(blocks.begin(), blocks.end(),
              [](const auto& x, const auto& y) { return x[0] < y[0]; });
    std::vector<int> class_of(A.order());
    for (size_t b = 0; b < blocks.size(); ++b)
        for (int e : blocks[b]) class_of[e] = int(b);
    return EqRelation{&A, std::move(spec), std::move(blocks), std::move(class_of)};
}

std::vector<int> class_key(const FiniteRing& A, RelKind k) {
    const int n = A.order();
    std::vector<int> key(n);
    switch (k) {
    case RelKind::Equality:
        for (int a = 0; a < n; ++a) key[a] = a;
        return key;
    case RelKind::StronglyAssociated: {
        auto ec = classify_elements(A);
        std::vector<int> orbit(n, -1);
        for (int a = 0; a < n; ++a) {
            if (orbit[a] >= 0) continue;
            orbit[a] = a;
            for (int u : ec.units) orbit[A.mul(u, a)] = a;
        }
        return orbit;
    }
    case RelKind::Associated: {
        std::map<Bitset, int> ids;
        for (int a = 0; a < n; ++a) {
            Bitset p(n);
            for (int x = 0; x < n; ++x) p.set(A.mul(x, a));
            key[a] = int(ids.emplace(std::move(p), int(ids.size())).first->second);
        }
        return key;
    }
    case RelKind::Equiannihilated: {
        std::map<Bitset, int> ids;
        for (int a = 0; a < n; ++a) {
            Bitset p(n);
            for (int x = 0; x < n; ++x)
                if (A.mul(x, a) == A.zero()) p.set(x);
            key[a] = int(ids.emplace(std::move(p), int(ids.size())).first->second);
        }
        return key;
    }
    default:
        throw Error(Errc::invalid_input, "class_key: not a plain relation kind");
    }
}

} // namespace

std::string RelationSpec::name() const {
    if (kind == RelKind::Blend)
        return std::string("blend-") + (subset == BlendSubset::Nilpotents ? "nilp" : "units") + "(" +
               kind_name(inside) + "/" + kind_name(outside) + ")";
    return kind_name(kind);
}

RelationSpec RelationSpec::blend(BlendSubset s, RelKind in, RelKind out) {
    if (in == RelKind::Blend || in == RelKind::Custom || out == RelKind::Blend ||
        out == RelKind::Custom)
        throw Error(Errc::invalid_input, "blend: inside/outside must be plain relation kinds");
    RelationSpec r;
    r.kind = RelKind::Blend;
    r.subset = s;
    r.inside = in;
    r.outside = out;
    return r;
}

RelationSpec RelationSpec::custom(std::vector<std::vector<int>> blocks) {
    RelationSpec r;
    r.kind = RelKind::Custom;
    r.custom_blocks = std::move(blocks);
    return r;
}

RelationSpec parse_relation_selector(const std::string& s) {
    if (s == "eq") return RelationSpec::equality();
    if (s == "sassoc") return RelationSpec::strongly_associated();
    if (s == "assoc") return RelationSpec::associated();
    if (s == "equiann") return RelationSpec::equiannihilated();
    if (s == "blend-nilp")
        return RelationSpec::blend(BlendSubset::Nilpotents, RelKind::Associated,
                                   RelKind::StronglyAssociated);
    if (s == "blend-units")
        return RelationSpec::blend(BlendSubset::Units, RelKind::Associated, RelKind::Equality);
    throw Error(Errc::invalid_input, "unknown relation selector: " + s);
}

EqRelation relation_partition(const FiniteRing& A, const RelationSpec& spec) {
    const int n = A.order();
    switch (spec.kind) {
    case RelKind::Equality:
    case RelKind::StronglyAssociated:
    case RelKind::Associated:
    case RelKind::Equiannihilated:
        return from_class_ids(A, spec, class_key(A, spec.kind));
    case RelKind::Blend: {
        auto ec = classify_elements(A);
        const auto& in_set =
            spec.subset == BlendSubset::Nilpotents ? ec.is_nilpotent : ec.is_unit;
        auto ki = class_key(A, spec.inside);
        auto ko = class_key(A, spec.outside);
        // disjoint key spaces: inside keys even, outside keys odd
        std::vector<int> key(n);
        for (int a = 0; a < n; ++a) key[a] = in_set[a] ? 2 * ki[a] : 2 * ko[a] + 1;
        return from_class_ids(A, spec, key);
    }
    case RelKind::Custom: {
        std::vector<int> key(n, -1);
        for (size_t b = 0; b < spec.custom_blocks.size(); ++b) {
            if (spec.custom_blocks[b].empty())
                throw Error(Errc::invalid_input, "custom partition: empty block");
            for (int e : spec.custom_blocks[b]) {
                if (e < 0 || e >= n)
                    throw Error(Errc::invalid_input, "custom partition: element out of range");
                if (key[e] >= 0)
                    throw Error(Errc::invalid_input, "custom partition: element repeated");
                key[e] = int(b);
            }
        }
        for (int a = 0; a < n; ++a)
            if (key[a] < 0)
                throw Error(Errc::invalid_input, "custom partition: element missing");
        return from_class_ids(A, spec, key);
    }
    }
    throw Error(Errc::invalid_input, "relation_partition: unknown kind");
}

ZdrResult is_zero_divisor_relation(const FiniteRing& A, const EqRelation& R) {
    if (R.ring != &A) throw Error(Errc::invalid_input, "is_zero_divisor_relation: relation of a different ring");
    const int n = A.order();
    for (int a = 0; a < n; ++a) {
        const auto& block_a = R.blocks[R.class_of[a]];
        for (int b = 0; b < n; ++b) {
            if (A.mul(a, b) != A.zero()) continue;
            const auto& block_b = R.blocks[R.class_of[b]];
            for (int a2 : block_a)
                for (int b2 : block_b)
                    if (A.mul(a2, b2) != A.zero())
                        return ZdrResult{false, std::array<int, 4>{a, a2, b, b2}};
        }
    }
    return ZdrResult{true, std::nullopt};
}

bool is_finer(const EqRelation& r1, const EqRelation& r2) {
    if (r1.ring != r2.ring) throw Error(Errc::invalid_input, "is_finer: relations on different rings");
    for (const auto& block : r1.blocks) {
        int c = r2.class_of[block[0]];
        for (int e : block)
            if (r2.class_of[e] != c) return false;
    }
    return true;
}

FunctorialResult check_functorial(const RingHom& f, const RelationSpec& kindA,
                                  const RelationSpec& kindB) {
    auto ra = relation_partition(*f.source, kindA);
    auto rb = relation_partition(*f.target, kindB);
    for (const auto& block : ra.blocks) {
        int c = rb.class_of[f.map[block[0]]];
        for (int e : block)
            if (rb.class_of[f.map[e]] != c)
                return FunctorialResult{false, std::pair<int, int>{block[0], e}};
    }
    return FunctorialResult{true, std::nullopt};
}

std::vector<EqRelation> random_partition_suite(const FiniteRing& A, int count, uint64_t seed) {
    std::mt19937_64 rng(seed);
    const int n = A.order();
    auto base = relation_partition(A, RelationSpec::equiannihilated());
    std::vector<EqRelation> out;
    out.reserve(count);
    for (int i = 0; i < count; ++i) {
        std::vector<std::vector<int>> blocks;
        int mode = i % 3;
        if (mode == 0) {
            // random refinement of the equiannihilated partition
            for (const auto& b : base.blocks) {
                int parts = 1 + int(rng() % 3);
                std::vector<std::vector<int>> split(parts);
                for (int e : b) split[rng() % parts].push_back(e);
                for (auto& s : split)
                    if (!s.empty()) blocks.push_back(std::move(s));
            }
        } else if (mode == 1) {
            // random merges of equiannihilated blocks
            blocks = base.blocks;
            int merges = 1 + int(rng() % 3);
            for (int m = 0; m < merges && blocks.size() > 1; ++m) {
                size_t x = rng() % blocks.size();
                size_t y = rng() % blocks.size();
                if (x == y) continue;
                if (x > y) std::swap(x, y);
                blocks[x].insert(blocks[x].end(), blocks[y].begin(), blocks[y].end());
                std::sort(blocks[x].begin(), blocks[x].end());
                blocks.erase(blocks.begin() + y);
            }
        } else {
            // uniform random partition
            int classes = 1 + int(rng() % n);
            std::vector<std::vector<int>> split(classes);
            for (int e = 0; e < n; ++e) split[rng() % classes].push_back(e);
            for (auto& s : split)
                if (!s.empty()) blocks.push_back(std::move(s));
        }
        out.push_back(relation_partition(A, RelationSpec::custom(std::move(blocks))));
    }
    return out;
}

} // namespace zdg
