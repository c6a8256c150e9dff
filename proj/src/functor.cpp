#include "zdg/functor.hpp"

#include <algorithm>
#include <numeric>

namespace zdg {

namespace {

void require(bool cond, Errc code, const std::string& msg) {
    if (!cond) throw Error(code, msg);
}

std::string witness_str(const std::pair<int, int>& w) {
    return "(" + std::to_string(w.first) + "," + std::to_string(w.second) + ")";
}

// unique vertex adjacent to every vertex (loop included), when it exists
std::optional<int> dominating_vertex(const Graph& g) {
    std::optional<int> found;
    for (int v = 0; v < g.size(); ++v) {
        bool all = true;
        for (int w = 0; w < g.size() && all; ++w) all = g.adjacent(v, w);
        if (all) {
            if (found) return std::nullopt; // not unique
            found = v;
        }
    }
    return found;
}

// least vertex whose neighbor set is exactly {z}
std::optional<int> unit_like_vertex(const Graph& g, int z) {
    for (int v = 0; v < g.size(); ++v) {
        auto nb = g.neighbors(v);
        if (nb.size() == 1 && nb[0] == z) return v;
    }
    return std::nullopt;
}

} // namespace

bool map_is_epi(const GraphMap& m) {
    std::vector<char> hit(m.target.size(), 0);
    for (int v : m.map) hit[v] = 1;
    return std::all_of(hit.begin(), hit.end(), [](char c) { return c != 0; });
}

bool map_is_mono(const GraphMap& m) {
    std::vector<char> hit(m.target.size(), 0);
    for (int v : m.map) {
        if (hit[v]) return false;
        hit[v] = 1;
    }
    return true;
}

GraphMap zeta_hom(const RingHom& f, const RelationSpec& kindA, const RelationSpec& kindB) {
    auto fun = check_functorial(f, kindA, kindB);
    if (!fun.ok)
        throw Error(Errc::invalid_input,
                    "zeta_hom: relation pair not functorial for this homomorphism; witness " +
                        witness_str(*fun.witness));
    auto ra = relation_partition(*f.source, kindA);
    auto rb = relation_partition(*f.target, kindB);
    Graph za = zeta(*f.source, ra);
    Graph zb = zeta(*f.target, rb);
    std::vector<int> map(za.size());
    for (int v = 0; v < za.size(); ++v) map[v] = rb.class_of[f.map[ra.rep(v)]];
    GraphMap gm = make_graph_map(std::move(za), std::move(zb), std::move(map));
    require(gm.flags.is_morphism, Errc::internal, "zeta_hom: induced map is not a graph morphism");
    return gm;
}

Cpf2Result product_relation_condition(RingPtr A, RingPtr B, const RelationSpec& kind) {
    auto P = build_product({A, B});
    auto ra = relation_partition(*A, kind);
    auto rb = relation_partition(*B, kind);
    auto rp = relation_partition(*P, kind);
    const int nb = B->order();
    for (const auto& block_a : ra.blocks)
        for (int a : block_a)
            for (int a2 : block_a)
                for (const auto& block_b : rb.blocks)
                    for (int b : block_b)
                        for (int b2 : block_b)
                            if (!rp.related(a * nb + b, a2 * nb + b2))
                                return Cpf2Result{false, {a, a2, b, b2}};
    return Cpf2Result{true, {}};
}

ComparisonReport product_comparison(RingPtr A, RingPtr B, const RelationSpec& kind,
                                    const Budgets&) {
    auto P = build_product({A, B});
    std::vector<int> pa(P->order()), pb(P->order());
    const int nb = B->order();
    for (int p = 0; p < P->order(); ++p) {
        pa[p] = p / nb;
        pb[p] = p % nb;
    }
    RingHom proj_a = make_ring_hom(P, A, std::move(pa));
    RingHom proj_b = make_ring_hom(P, B, std::move(pb));
    for (const RingHom* pr : {&proj_a, &proj_b}) {
        auto fun = check_functorial(*pr, kind, kind);
        if (!fun.ok)
            throw Error(Errc::invalid_input,
                        "product_comparison: relation not functorial for a projection; witness " +
                            witness_str(*fun.witness));
    }

    auto rp = relation_partition(*P, kind);
    auto ra = relation_partition(*A, kind);
    auto rb = relation_partition(*B, kind);
    Graph zp = zeta(*P, rp);
    Graph k = kronecker_product(zeta(*A, ra), zeta(*B, rb));
    const int vb = rb.block_count();
    std::vector<int> map(zp.size());
    for (int v = 0; v < zp.size(); ++v) {
        int p = zp.payload(v);
        map[v] = ra.class_of[p / nb] * vb + rb.class_of[p % nb];
    }

    ComparisonReport rep;
    rep.comparison = "product";
    rep.canonical_map = make_graph_map(std::move(zp), std::move(k), std::move(map));
    rep.flags.is_strong = rep.canonical_map.flags.is_strong;
    rep.flags.is_epi = map_is_epi(rep.canonical_map);
    rep.flags.is_mono = map_is_mono(rep.canonical_map);
    rep.flags.is_iso = rep.flags.is_strong && rep.flags.is_epi && rep.flags.is_mono;
    auto cond = product_relation_condition(A, B, kind);
    rep.condition1 = cond.holds;
    rep.condition_witness = cond.witness;
    rep.note = "|V(zeta(AxB))| = " + std::to_string(rep.canonical_map.source.size()) +
               ", |V(zeta(A) x zeta(B))| = " + std::to_string(rep.canonical_map.target.size());
    return rep;
}

ComparisonReport equalizer_comparison(const RingHom& f, const RingHom& g, const RelationSpec& kind,
                                      const Budgets&) {
    require(f.source.get() == g.source.get() && f.target.get() == g.target.get(),
            Errc::invalid_input, "equalizer_comparison: homs must share source and target");
    for (const RingHom* h : {&f, &g}) {
        auto fun = check_functorial(*h, kind, kind);
        if (!fun.ok)
            throw Error(Errc::invalid_input,
                        "equalizer_comparison: relation not functorial; witness " +
                            witness_str(*fun.witness));
    }
    auto E = equalizer_subring(f, g);
    auto fun = check_functorial(E.inclusion, kind, kind);
    if (!fun.ok)
        throw Error(Errc::invalid_input,
                    "equalizer_comparison: relation not functorial for the subring inclusion; witness " +
                        witness_str(*fun.witness));

    auto re = relation_partition(*E.ring, kind);
    auto ra = relation_partition(*f.source, kind);
    GraphMap zf = zeta_hom(f, kind, kind);
    GraphMap zg = zeta_hom(g, kind, kind);
    Graph ze = zeta(*E.ring, re);
    Graph eq = equalizer_graph(zf, zg);

    // ambient class -> vertex index inside the equalizer graph
    std::vector<int> eq_index(zf.source.size(), -1);
    {
        int k = 0;
        for (int v = 0; v < zf.source.size(); ++v)
            if (zf.map[v] == zg.map[v]) eq_index[v] = k++;
    }

    std::vector<int> map(ze.size());
    for (int v = 0; v < ze.size(); ++v) {
        int parent = E.inclusion.map[re.rep(v)];
        int idx = eq_index[ra.class_of[parent]];
        require(idx >= 0, Errc::internal, "equalizer_comparison: image outside the equalizer");
        map[v] = idx;
    }

    ComparisonReport rep;
    rep.comparison = "equalizer";
    rep.canonical_map = make_graph_map(std::move(ze), std::move(eq), std::move(map));
    rep.flags.is_strong = rep.canonical_map.flags.is_strong;
    rep.flags.is_epi = map_is_epi(rep.canonical_map);
    rep.flags.is_mono = map_is_mono(rep.canonical_map);
    rep.flags.is_iso = rep.flags.is_strong && rep.flags.is_epi && rep.flags.is_mono;

    // condition 1: ambient-related elements of E are already E-related
    rep.condition1 = true;
    for (int x = 0; x < E.ring->order() && rep.condition1; ++x)
        for (int y = 0; y < E.ring->order(); ++y) {
            if (ra.related(E.inclusion.map[x], E.inclusion.map[y]) && !re.related(x, y)) {
                rep.condition1 = false;
                rep.condition_witness = {E.inclusion.map[x], E.inclusion.map[y]};
                break;
            }
        }
    // condition 2: f(a) related to g(a) implies a is related to an element of E
    auto rb = relation_partition(*f.target, kind);
    rep.condition2 = true;
    for (int a = 0; a < f.source->order() && rep.condition2; ++a) {
        if (!rb.related(f.map[a], g.map[a])) continue;
        bool hit = false;
        for (int e = 0; e < E.ring->order() && !hit; ++e)
            hit = ra.related(a, E.inclusion.map[e]);
        if (!hit) rep.condition2 = false;
    }
    rep.note = "|Eq(f,g)| = " + std::to_string(E.ring->order());
    return rep;
}

ComparisonReport localization_comparison(RingPtr A, const std::vector<int>& S,
                                         const RelationSpec& kind, const Budgets&) {
    auto loc = localize(A, S);
    auto fun = check_functorial(loc.phi, kind, kind);
    if (!fun.ok)
        throw Error(Errc::invalid_input,
                    "localization_comparison: relation not functorial for phi_S; witness " +
                        witness_str(*fun.witness));
    ComparisonReport rep;
    rep.comparison = "localization";
    rep.canonical_map = zeta_hom(loc.phi, kind, kind);
    rep.flags.is_strong = rep.canonical_map.flags.is_strong;
    rep.flags.is_epi = map_is_epi(rep.canonical_map);
    rep.flags.is_mono = map_is_mono(rep.canonical_map);
    rep.flags.is_iso = rep.flags.is_strong && rep.flags.is_epi && rep.flags.is_mono;

    auto rl = relation_partition(*loc.ring, kind);
    rep.condition1 = true;
    for (size_t si = 0; si < loc.s_elements.size() && rep.condition1; ++si)
        for (int a = 0; a < A->order(); ++a)
            if (!rl.related(loc.frac[a][si], loc.phi.map[a])) {
                rep.condition1 = false;
                rep.condition_witness = {a, loc.s_elements[si]};
                break;
            }
    auto ec = classify_elements(*A);
    rep.condition2 = std::all_of(loc.s_elements.begin(), loc.s_elements.end(),
                                 [&](int s) { return ec.is_unit[s] != 0; });
    rep.note = "|S^-1 A| = " + std::to_string(loc.ring->order());
    return rep;
}

std::optional<OrthogonalPair> find_orthogonal_pair(RingPtr A, const EqRelation& R, const Graph& g1,
                                                   const Graph& g2, const Budgets& budgets) {
    require(!is_terminal(g1) && !is_terminal(g2), Errc::invalid_input,
            "find_orthogonal_pair: terminal factor supplied");
    Graph za = zeta(*A, R);
    Graph k = kronecker_product(g1, g2);
    auto iso = are_isomorphic(za, k, budgets);
    if (!iso) return std::nullopt;

    auto z1 = dominating_vertex(g1);
    auto z2 = dominating_vertex(g2);
    if (!z1 || !z2) return std::nullopt;
    auto u1 = unit_like_vertex(g1, *z1);
    auto u2 = unit_like_vertex(g2, *z2);
    if (!u1 || !u2) return std::nullopt;

    // invert the vertex bijection
    std::vector<int> inv(k.size(), -1);
    for (int v = 0; v < za.size(); ++v) inv[iso->map[v]] = v;
    int v1 = inv[*u1 * g2.size() + *z2]; // phi^-1([1],[0])
    int v2 = inv[*z1 * g2.size() + *u2]; // phi^-1([0],[1])
    if (v1 < 0 || v2 < 0) return std::nullopt;
    int a1 = za.payload(v1);
    int a2 = za.payload(v2);

    // verify orthogonality and membership in D*(A)
    if (A->mul(a1, a2) != A->zero()) return std::nullopt;
    auto ann1 = annihilator(*A, a1);
    auto ann2 = annihilator(*A, a2);
    if (ann1.bits().intersect(ann2.bits()).count() != 1) return std::nullopt;
    if (a1 == A->zero() || a2 == A->zero()) return std::nullopt;
    if (ann1.size() <= 1 || ann2.size() <= 1) return std::nullopt; // must be zero-divisors
    return OrthogonalPair{a1, a2, std::move(*iso)};
}

Factorization invert_product(RingPtr A, const RelationSpec& kind, const Graph& g1, const Graph& g2,
                             const Budgets& budgets) {
    auto R = relation_partition(*A, kind);
    auto orth = find_orthogonal_pair(A, R, g1, g2, budgets);
    if (!orth)
        throw Error(Errc::theorem,
                    "invert_product failed clause `orthogonal pair exists`: no isomorphism onto "
                    "the product or no orthogonal pair of nonzero zero-divisors");
    Factorization fac;
    fac.a1 = orth->a1;
    fac.a2 = orth->a2;
    fac.ann1 = annihilator(*A, fac.a1);
    fac.ann2 = annihilator(*A, fac.a2);

    auto ops = ideal_ops(fac.ann1, fac.ann2);
    if (ops.sum.size() != A->order())
        throw Error(Errc::theorem, "invert_product failed clause `Ann(a1) + Ann(a2) = (1)`");
    if (ops.intersection.size() != 1)
        throw Error(Errc::theorem, "invert_product failed clause `Ann(a1) and Ann(a2) meet in 0`");

    auto crt = crt_factor(A, fac.ann1, fac.ann2);
    fac.q1 = crt.mod_i;
    fac.q2 = crt.mod_j;
    fac.product = crt.product;
    fac.iso = crt.iso;

    // side graph isomorphisms: zeta(A/Ann(a1)) ~ G1 and zeta(A/Ann(a2)) ~ G2
    auto s1 = are_isomorphic(zeta(*fac.q1.ring, kind), g1, budgets);
    if (!s1)
        throw Error(Errc::theorem,
                    "invert_product failed clause `zeta(A/Ann(a1)) isomorphic to first factor`");
    auto s2 = are_isomorphic(zeta(*fac.q2.ring, kind), g2, budgets);
    if (!s2)
        throw Error(Errc::theorem,
                    "invert_product failed clause `zeta(A/Ann(a2)) isomorphic to second factor`");
    fac.side1 = std::move(*s1);
    fac.side2 = std::move(*s2);

    // psi_1: classes of Ann(a2) inside zeta(A) -> zeta(A/Ann(a1)), [x] -> [x mod Ann(a1)]
    Graph za = zeta(*A, R);
    auto rq = relation_partition(*fac.q1.ring, kind);
    Graph zq = zeta(*fac.q1.ring, rq);
    std::vector<char> keep_class(R.block_count(), 0);
    for (int x : fac.ann2.members) keep_class[R.class_of[x]] = 1;
    std::vector<int> keep;
    for (int v = 0; v < R.block_count(); ++v)
        if (keep_class[v]) keep.push_back(v);
    Graph dom = induced_subgraph(za, keep);
    std::vector<int> psi(dom.size());
    for (int v = 0; v < dom.size(); ++v)
        psi[v] = rq.class_of[fac.q1.projection.map[dom.payload(v)]];
    GraphMap psi1 = make_graph_map(dom, zq, std::move(psi));
    fac.psi_strong = psi1.flags.is_strong;
    fac.psi_injective = map_is_mono(psi1);
    fac.psi_surjective = map_is_epi(psi1);
    if (!fac.psi_strong)
        throw Error(Errc::theorem, "invert_product failed clause `comparison map psi is strong`");
    bool assoc = kind.kind == RelKind::Associated;
    if (assoc && !fac.psi_injective)
        throw Error(Errc::theorem, "invert_product failed clause `psi injective`");
    if (!fac.psi_surjective)
        throw Error(Errc::theorem, "invert_product failed clause `psi surjective`");
    return fac;
}

bool subgraph_splitting_check(RingPtr A, RingPtr B, const RelationSpec& kind,
                              const Budgets& budgets, std::string* note) {
    auto ra = relation_partition(*A, kind);
    auto rb = relation_partition(*B, kind);
    Graph za = zeta(*A, ra);
    Graph zb = zeta(*B, rb);
    Graph k = kronecker_product(za, zb);
    int zero_a = ra.class_of[A->zero()];
    int zero_b = rb.class_of[B->zero()];
    int one_a = ra.class_of[A->one()];
    int one_b = rb.class_of[B->one()];

    Graph n01 = induced_subgraph(k, k.neighbors(zero_a * zb.size() + one_b));
    if (!are_isomorphic(n01, za, budgets)) {
        if (note) *note = "neighbors of ([0],[1]) not isomorphic to zeta(A)";
        return false;
    }
    Graph n10 = induced_subgraph(k, k.neighbors(one_a * zb.size() + zero_b));
    if (!are_isomorphic(n10, zb, budgets)) {
        if (note) *note = "neighbors of ([1],[0]) not isomorphic to zeta(B)";
        return false;
    }
    return true;
}

std::vector<RingHom> enumerate_homs(RingPtr A, RingPtr B, const Budgets& budgets) {
    if (A->order() > budgets.hom_order_cap || B->order() > budgets.hom_order_cap)
        throw Error(Errc::budget_exceeded, "enumerate_homs: ring order above hom_order_cap");
    const int n = A->order();
    const int m = B->order();

    auto additive_order = [](const FiniteRing& R, int a) {
        int x = a, k = 1;
        while (x != R.zero()) {
            x = R.add(x, a);
            ++k;
        }
        return k;
    };

    // greedy additive generating set, starting from 1
    std::vector<int> gens;
    std::vector<int> expr_parent(n, -1), expr_gen(n, -1); // x = parent + gens[gen]
    std::vector<char> in_span(n, 0);
    in_span[A->zero()] = 1;
    auto close_over = [&](int g) {
        int gi = int(gens.size());
        gens.push_back(g);
        bool grew = true;
        while (grew) {
            grew = false;
            for (int x = 0; x < n; ++x) {
                if (!in_span[x]) continue;
                int y = A->add(x, g);
                if (!in_span[y]) {
                    in_span[y] = 1;
                    expr_parent[y] = x;
                    expr_gen[y] = gi;
                    grew = true;
                }
            }
        }
    };
    if (n > 1) close_over(A->one());
    for (int e = 0; e < n; ++e)
        if (!in_span[e]) close_over(e);

    // candidate images per generator, filtered by additive order
    std::vector<std::vector<int>> cand(gens.size());
    long long total = 1;
    for (size_t gi = 0; gi < gens.size(); ++gi) {
        int ord = additive_order(*A, gens[gi]);
        if (gi == 0 && n > 1) {
            cand[gi] = {B->one()};
        } else {
            for (int b = 0; b < m; ++b)
                if (ord % additive_order(*B, b) == 0) cand[gi].push_back(b);
        }
        total *= std::max<size_t>(cand[gi].size(), 1);
        if (total > budgets.hom_candidates)
            throw Error(Errc::budget_exceeded, "enumerate_homs: candidate budget exceeded");
    }

    std::vector<RingHom> out;
    std::vector<int> image(gens.size(), -1);
    std::vector<int> map(n);
    auto build_and_check = [&]() {
        map[A->zero()] = B->zero();
        // elements are reachable in span order; resolve by walking parents
        for (int x = 0; x < n; ++x) {
            if (x == A->zero()) continue;
            // iterative resolution over the expression chain
            int cur = x;
            std::vector<int> chain;
            while (cur != A->zero() && expr_parent[cur] >= 0) {
                chain.push_back(cur);
                cur = expr_parent[cur];
            }
            int acc = map[cur];
            for (auto it = chain.rbegin(); it != chain.rend(); ++it)
                acc = B->add(acc, image[expr_gen[*it]]);
            map[x] = acc;
        }
        if (map[A->one()] != B->one()) return;
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) {
                if (map[A->add(a, b)] != B->add(map[a], map[b])) return;
                if (map[A->mul(a, b)] != B->mul(map[a], map[b])) return;
            }
        out.push_back(RingHom{A, B, map});
    };
    auto rec = [&](auto&& self, size_t gi) -> void {
        if (gi == gens.size()) {
            build_and_check();
            return;
        }
        for (int b : cand[gi]) {
            image[gi] = b;
            self(self, gi + 1);
        }
    };
    rec(rec, 0);
    return out;
}

} // namespace zdg
