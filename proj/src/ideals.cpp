#include "zdg/ideals.hpp"

#include <algorithm>
#include <map>

namespace zdg {

namespace {

Bitset ideal_sum_bits(const FiniteRing& A, const std::vector<int>& I, const std::vector<int>& J) {
    Bitset out(A.order());
    for (int i : I)
        for (int j : J) out.set(A.add(i, j));
    return out;
}

} // namespace

std::vector<IdealSet> all_ideals(const FiniteRing& A, const Budgets& budgets) {
    std::map<Bitset, int> seen;
    std::vector<std::vector<int>> pool;
    auto insert = [&](Bitset b) {
        if (seen.count(b)) return false;
        seen.emplace(b, int(pool.size()));
        pool.push_back(b.members());
        if (int(pool.size()) > budgets.ideal_cap)
            throw Error(Errc::budget_exceeded, "all_ideals: ideal cap exceeded");
        return true;
    };
    for (int a = 0; a < A.order(); ++a) insert(principal_ideal(A, a).bits());

    size_t frontier = 0;
    while (frontier < pool.size()) {
        size_t upto = pool.size();
        for (size_t i = frontier; i < upto; ++i)
            for (size_t j = 0; j <= i; ++j) insert(ideal_sum_bits(A, pool[i], pool[j]));
        frontier = upto;
    }

    std::sort(pool.begin(), pool.end(), [](const std::vector<int>& x, const std::vector<int>& y) {
        if (x.size() != y.size()) return x.size() < y.size();
        return x < y;
    });
    std::vector<IdealSet> out;
    out.reserve(pool.size());
    for (auto& m : pool) out.push_back(IdealSet{&A, std::move(m)});
    return out;
}

IdealOps ideal_ops(const IdealSet& I, const IdealSet& J) {
    if (I.ring != J.ring) throw Error(Errc::invalid_input, "ideal_ops: ideals of different rings");
    const FiniteRing& A = *I.ring;
    IdealOps ops;
    ops.sum = IdealSet{&A, ideal_sum_bits(A, I.members, J.members).members()};
    std::vector<int> meet;
    std::set_intersection(I.members.begin(), I.members.end(), J.members.begin(), J.members.end(),
                          std::back_inserter(meet));
    ops.intersection = IdealSet{&A, std::move(meet)};
    ops.product_is_zero = true;
    for (int i : I.members)
        for (int j : J.members)
            if (A.mul(i, j) != A.zero()) { ops.product_is_zero = false; break; }
    return ops;
}

IdealSet ideal_product(const IdealSet& I, const IdealSet& J) {
    if (I.ring != J.ring) throw Error(Errc::invalid_input, "ideal_product: ideals of different rings");
    const FiniteRing& A = *I.ring;
    Bitset cur(A.order());
    for (int i : I.members)
        for (int j : J.members) cur.set(A.mul(i, j));
    // additive closure
    bool changed = true;
    while (changed) {
        changed = false;
        auto mem = cur.members();
        for (int x : mem)
            for (int y : mem) {
                int s = A.add(x, y);
                if (!cur.test(s)) { cur.set(s); changed = true; }
            }
    }
    return IdealSet{&A, cur.members()};
}

LocalData local_data(const FiniteRing& A, const Budgets& budgets) {
    auto ideals = all_ideals(A, budgets);
    LocalData ld;
    std::vector<const IdealSet*> proper;
    for (const auto& I : ideals)
        if (I.size() < A.order()) proper.push_back(&I);
    for (const auto* I : proper) {
        bool maximal = true;
        Bitset bi = I->bits();
        for (const auto* J : proper)
            if (J != I && bi.subset_of(J->bits()) && J->size() > I->size()) { maximal = false; break; }
        if (maximal) ld.maximal_ideals.push_back(*I);
    }
    ld.is_local = ld.maximal_ideals.size() == 1;
    if (ld.is_local) {
        const IdealSet& m = ld.maximal_ideals[0];
        IdealSet cur = m;
        int k = 1;
        while (!(cur.size() == 1 && cur.members[0] == A.zero())) {
            cur = ideal_product(cur, m);
            ++k;
            if (k > A.order() + 1)
                throw Error(Errc::internal, "local_data: nilpotency iteration did not terminate");
        }
        ld.nilpotency_index = k;
    }
    return ld;
}

bool is_pir(const FiniteRing& A, const Budgets& budgets) {
    auto ideals = all_ideals(A, budgets);
    std::map<Bitset, int> principal;
    for (int a = 0; a < A.order(); ++a) principal.emplace(principal_ideal(A, a).bits(), a);
    for (const auto& I : ideals)
        if (!principal.count(I.bits())) return false;
    return true;
}

std::optional<std::vector<int>> ideal_poset_iso(const FiniteRing& A, const FiniteRing& B,
                                                const Budgets& budgets) {
    auto ia = all_ideals(A, budgets);
    auto ib = all_ideals(B, budgets);
    const int n = int(ia.size());
    if (n != int(ib.size())) return std::nullopt;

    auto leq_matrix = [](const std::vector<IdealSet>& v) {
        int n = int(v.size());
        std::vector<std::vector<char>> leq(n, std::vector<char>(n, 0));
        std::vector<Bitset> bits;
        for (const auto& I : v) bits.push_back(I.bits());
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) leq[i][j] = bits[i].subset_of(bits[j]);
        return leq;
    };
    auto la = leq_matrix(ia), lb = leq_matrix(ib);

    // signature: (#below, #above) must match between matched ideals
    auto sig = [](const std::vector<std::vector<char>>& leq, int v) {
        int below = 0, above = 0;
        for (size_t i = 0; i < leq.size(); ++i) {
            if (leq[i][v]) ++below;
            if (leq[v][i]) ++above;
        }
        return std::pair<int, int>(below, above);
    };

    std::vector<int> match(n, -1);
    std::vector<char> used(n, 0);
    long long nodes = 0;
    auto rec = [&](auto&& self, int v) -> bool {
        if (v == n) return true;
        for (int w = 0; w < n; ++w) {
            if (used[w] || sig(la, v) != sig(lb, w)) continue;
            if (++nodes > budgets.iso_nodes)
                throw Error(Errc::budget_exceeded, "ideal_poset_iso: node budget exceeded");
            bool ok = true;
            for (int u = 0; u < v && ok; ++u)
                ok = la[u][v] == lb[match[u]][w] && la[v][u] == lb[w][match[u]];
            if (!ok) continue;
            match[v] = w;
            used[w] = 1;
            if (self(self, v + 1)) return true;
            used[w] = 0;
            match[v] = -1;
        }
        return false;
    };
    if (rec(rec, 0)) return match;
    return std::nullopt;
}

} // namespace zdg
