#include "zdg/census.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "zdg/specio.hpp"

namespace zdg {

namespace {

struct Tally {
    std::ostringstream out;
    int checks = 0;
    int failures = 0;

    void row(const std::string& section, const std::string& target, bool ok,
             const std::string& detail = "") {
        ++checks;
        if (!ok) ++failures;
        out << "[" << section << "] " << target << ": " << (ok ? "ok" : "FAIL");
        if (!detail.empty()) out << " " << detail;
        out << "\n";
    }

    void note(const std::string& line) { out << line << "\n"; }
};

std::string strip_suffix(const std::string& name) {
    auto dot = name.rfind(".spec");
    return dot == std::string::npos ? name : name.substr(0, dot);
}

const std::vector<RelationSpec>& standard_kinds() {
    static const std::vector<RelationSpec> kinds = {
        RelationSpec::equality(), RelationSpec::strongly_associated(),
        RelationSpec::associated(), RelationSpec::equiannihilated()};
    return kinds;
}

RelationSpec blend_nilp() {
    return RelationSpec::blend(BlendSubset::Nilpotents, RelKind::Associated,
                               RelKind::StronglyAssociated);
}
RelationSpec blend_units() {
    return RelationSpec::blend(BlendSubset::Units, RelKind::Associated, RelKind::Equality);
}

} // namespace

std::vector<CatalogEntry> load_census_catalog(const std::string& dir) {
    std::vector<CatalogEntry> out;
    for (const auto& name : load_manifest(dir + "/census.list")) {
        CatalogEntry e;
        e.name = strip_suffix(name);
        e.ring = build_ring(load_spec(dir + "/" + name));
        out.push_back(std::move(e));
    }
    return out;
}

std::vector<GridEntry> load_grid(const std::string& dir) {
    std::vector<GridEntry> out;
    for (long p : {2L, 3L, 5L}) {
        long q = 1;
        for (int k = 1; k <= 5; ++k) {
            q *= p;
            GridEntry e;
            e.name = "z" + std::to_string(q);
            e.p = p;
            e.k = k;
            e.ring = build_ring(load_spec(dir + "/" + e.name + ".spec"));
            out.push_back(std::move(e));
        }
    }
    return out;
}

CensusResult run_census(const CensusOptions& opt) {
    Tally t;
    const Budgets& bud = opt.budgets;
    auto catalog = load_census_catalog(opt.catalog_dir);

    t.note("zdg census report");
    t.note("seed: " + std::to_string(opt.seed));
    t.note("catalog: " + std::to_string(catalog.size()) + " rings");
    t.note("product order cap: " + std::to_string(opt.product_order_cap));

    // ring axioms
    for (const auto& [name, A] : catalog) {
        auto rep = validate_ring(*A, bud);
        t.row("ring-axioms", name, rep.pass, rep.mode);
    }

    // principal/annihilator ideals, unit characterization, vertex count = principal count
    for (const auto& [name, A] : catalog) {
        bool ideals_ok = true, units_ok = true;
        for (int a = 0; a < A->order() && ideals_ok; ++a) {
            ideals_ok = !ideal_violation(*A, principal_ideal(*A, a).members) &&
                        !ideal_violation(*A, annihilator(*A, a).members);
        }
        auto ec = classify_elements(*A);
        for (int a = 0; a < A->order() && units_ok; ++a) {
            bool unit = ec.is_unit[a];
            bool ann_trivial = annihilator(*A, a).size() == 1;
            bool pid_full = principal_ideal(*A, a).size() == A->order();
            units_ok = unit == ann_trivial && unit == pid_full;
        }
        t.row("ideal-invariants", name, ideals_ok && units_ok);

        auto assoc = relation_partition(*A, RelationSpec::associated());
        std::vector<Bitset> distinct;
        for (int a = 0; a < A->order(); ++a) {
            Bitset b = principal_ideal(*A, a).bits();
            if (std::find(distinct.begin(), distinct.end(), b) == distinct.end())
                distinct.push_back(b);
        }
        Graph za = zeta(*A, assoc);
        t.row("vertex-count", name, za.size() == int(distinct.size()),
              std::to_string(za.size()) + " classes vs " + std::to_string(distinct.size()) +
                  " principal ideals");
    }

    // quotient + crt round trips over comaximal pairs
    for (const auto& [name, A] : catalog) {
        auto ideals = all_ideals(*A, bud);
        int pairs = 0;
        bool ok = true;
        std::string detail;
        for (size_t i = 0; i < ideals.size() && pairs < 64; ++i)
            for (size_t j = 0; j < ideals.size() && pairs < 64; ++j) {
                auto ops = ideal_ops(ideals[i], ideals[j]);
                if (ops.sum.size() != A->order() || ops.intersection.size() != 1) continue;
                ++pairs;
                auto crt = crt_factor(A, ideals[i], ideals[j]);
                bool bij = is_bijective(crt.iso);
                bool one_ok = crt.iso.map[A->one()] == crt.product->one();
                bool valid = validate_ring(*crt.mod_i.ring, bud).pass &&
                             validate_ring(*crt.mod_j.ring, bud).pass;
                if (!(bij && one_ok && valid)) {
                    ok = false;
                    detail = "pair (" + std::to_string(i) + "," + std::to_string(j) + ")";
                }
            }
        t.row("quotient-crt", name, ok, std::to_string(pairs) + " comaximal pairs");
    }

    // localization
    for (const auto& [name, A] : catalog) {
        auto ec = classify_elements(*A);
        std::vector<std::vector<int>> sets;
        sets.push_back({A->one()});
        sets.push_back(ec.units);
        for (int a = 0; a < A->order() && sets.size() < 10; ++a) {
            std::vector<int> s{A->one()};
            int x = a;
            for (int i = 0; i < A->order(); ++i) {
                if (std::find(s.begin(), s.end(), x) == s.end()) s.push_back(x);
                x = A->mul(x, a);
            }
            std::sort(s.begin(), s.end());
            if (std::find(sets.begin(), sets.end(), s) == sets.end()) sets.push_back(s);
        }
        bool ok = true;
        std::string detail;
        for (const auto& S : sets) {
            auto rep = localization_comparison(A, S, RelationSpec::associated(), bud);
            bool units_only = rep.condition2;
            auto loc = localize(A, S);
            if (!validate_ring(*loc.ring, bud).pass) { ok = false; detail = "derived ring invalid"; }
            if (rep.condition1 && !rep.flags.is_epi) { ok = false; detail = "epi condition broken"; }
            if (rep.condition2 && !rep.canonical_map.flags.is_comorphism) {
                ok = false;
                detail = "comorphism condition broken";
            }
            if (units_only && !is_bijective(loc.phi)) {
                ok = false;
                detail = "phi_S not bijective on a unit set";
            }
        }
        t.row("localization", name, ok,
              std::to_string(sets.size()) + " multiplicative sets" +
                  (detail.empty() ? "" : "; " + detail));
    }

    // zero-divisor relation characterization (exact, both routes)
    {
        int ring_idx = 0;
        for (const auto& [name, A] : catalog) {
            auto equiann = relation_partition(*A, RelationSpec::equiannihilated());
            std::vector<EqRelation> suite;
            for (const auto& k : standard_kinds()) suite.push_back(relation_partition(*A, k));
            suite.push_back(relation_partition(*A, blend_nilp()));
            suite.push_back(relation_partition(*A, blend_units()));
            auto rnd = random_partition_suite(*A, opt.random_partitions,
                                              opt.seed + uint64_t(ring_idx));
            for (auto& r : rnd) suite.push_back(std::move(r));
            bool ok = true;
            int zdr_count = 0;
            for (const auto& R : suite) {
                auto res = is_zero_divisor_relation(*A, R);
                bool finer = is_finer(R, equiann);
                if (res.is_zdr != finer) { ok = false; break; }
                if (res.is_zdr) {
                    ++zdr_count;
                    if (R.blocks[R.class_of[A->zero()]].size() != 1) { ok = false; break; }
                }
            }
            t.row("zdr-characterization", name, ok,
                  std::to_string(suite.size()) + " partitions, " + std::to_string(zdr_count) +
                      " zero-divisor");
            ++ring_idx;
        }
    }

    // refinement chain and standard kinds are zero-divisor relations
    for (const auto& [name, A] : catalog) {
        auto eq = relation_partition(*A, RelationSpec::equality());
        auto sa = relation_partition(*A, RelationSpec::strongly_associated());
        auto as = relation_partition(*A, RelationSpec::associated());
        auto ea = relation_partition(*A, RelationSpec::equiannihilated());
        bool chain = is_finer(eq, sa) && is_finer(sa, as) && is_finer(as, ea);
        bool zdr = is_zero_divisor_relation(*A, eq).is_zdr &&
                   is_zero_divisor_relation(*A, sa).is_zdr &&
                   is_zero_divisor_relation(*A, as).is_zdr &&
                   is_zero_divisor_relation(*A, ea).is_zdr;
        t.row("refinement-chain", name, chain && zdr);
    }

    // functoriality across enumerated homomorphisms
    for (const auto& [na, A] : catalog) {
        if (A->order() > bud.hom_order_cap) continue;
        for (const auto& [nb, B] : catalog) {
            if (B->order() > bud.hom_order_cap) continue;
            std::vector<RingHom> homs;
            try {
                homs = enumerate_homs(A, B, bud);
            } catch (const Error&) {
                continue;
            }
            if (homs.empty()) continue;
            bool ok = true;
            int equiann_failures = 0;
            for (const auto& h : homs) {
                for (const auto& k :
                     {RelationSpec::equality(), RelationSpec::strongly_associated(),
                      RelationSpec::associated(), blend_nilp()})
                    if (!check_functorial(h, k, k).ok) ok = false;
                if (!check_functorial(h, RelationSpec::equiannihilated(),
                                      RelationSpec::equiannihilated())
                         .ok)
                    ++equiann_failures;
            }
            t.row("functorial", na + "->" + nb, ok,
                  std::to_string(homs.size()) + " homs, equiann non-functorial on " +
                      std::to_string(equiann_failures));
        }
    }

    // connectivity of compressed graphs, diameter bound, dominating zero vertex
    {
        int ring_idx = 0;
        for (const auto& [name, A] : catalog) {
            auto ec = classify_elements(*A);
            std::vector<EqRelation> suite;
            for (const auto& k : standard_kinds()) suite.push_back(relation_partition(*A, k));
            for (auto& r : random_partition_suite(*A, 10, opt.seed * 31 + uint64_t(ring_idx)))
                if (is_zero_divisor_relation(*A, r).is_zdr) suite.push_back(std::move(r));
            bool ok = true;
            std::string detail;
            for (const auto& R : suite) {
                Graph dz = zeta_restricted(*A, R, ec.dstar);
                auto conn = connectivity(dz);
                if (!conn.connected || (conn.diameter && *conn.diameter > 3)) {
                    ok = false;
                    detail = "restricted graph disconnected or diameter > 3";
                }
                Graph full = zeta(*A, R);
                auto fullconn = connectivity(full);
                if (!fullconn.connected) {
                    ok = false;
                    detail = "full graph disconnected";
                }
                if (A->order() >= 2) {
                    int zero_v = R.class_of[A->zero()];
                    int dominating = 0;
                    bool zero_dominates = true;
                    for (int v = 0; v < full.size(); ++v) {
                        bool all = true;
                        for (int w = 0; w < full.size() && all; ++w) all = full.adjacent(v, w);
                        if (all) ++dominating;
                        if (v == zero_v && !all) zero_dominates = false;
                    }
                    if (!zero_dominates || dominating != 1) {
                        ok = false;
                        detail = "[0] is not the unique dominating vertex";
                    }
                }
            }
            t.row("connectivity", name, ok,
                  std::to_string(suite.size()) + " relations" + (detail.empty() ? "" : "; " + detail));
            ++ring_idx;
        }
    }

    // strong quotients between comparable relations
    for (const auto& [name, A] : catalog) {
        const auto& kinds = standard_kinds();
        bool ok = true;
        for (size_t fine = 0; fine < kinds.size() && ok; ++fine)
            for (size_t coarse = fine + 1; coarse < kinds.size() && ok; ++coarse) {
                auto rf = relation_partition(*A, kinds[fine]);
                auto rc = relation_partition(*A, kinds[coarse]);
                if (!is_finer(rf, rc)) continue;
                Graph zf = zeta(*A, rf);
                auto q = quotient_graph(zf, vertex_partition_by(zf, rc));
                if (!q.is_strong) ok = false;
                else if (!are_isomorphic(q.graph, zeta(*A, rc), bud)) ok = false;
            }
        t.row("strong-quotient", name, ok);
    }

    // kronecker product laws on a seeded sample of zeta graphs
    {
        std::vector<Graph> pool;
        for (const auto& [name, A] : catalog)
            if (A->order() <= 12) pool.push_back(zeta(*A, RelationSpec::associated()));
        std::mt19937_64 rng(opt.seed ^ 0xabcd1234ULL);
        bool ok = true;
        for (int trial = 0; trial < 8 && ok; ++trial) {
            const Graph& a = pool[rng() % pool.size()];
            const Graph& b = pool[rng() % pool.size()];
            const Graph& c = pool[rng() % pool.size()];
            if (a.size() * b.size() * c.size() > 200) continue;
            ok = are_isomorphic(kronecker_product(a, b), kronecker_product(b, a), bud).has_value();
            if (ok)
                ok = are_isomorphic(kronecker_product(kronecker_product(a, b), c),
                                    kronecker_product(a, kronecker_product(b, c)), bud)
                         .has_value();
            if (ok) ok = are_isomorphic(kronecker_product(a, terminal_graph()), a, bud).has_value();
        }
        t.row("kronecker-laws", "sampled triples", ok);
    }

    // product preservation
    for (size_t i = 0; i < catalog.size(); ++i)
        for (size_t j = i; j < catalog.size(); ++j) {
            const auto& [na, A] = catalog[i];
            const auto& [nb, B] = catalog[j];
            if (long(A->order()) * B->order() > opt.product_order_cap) continue;
            std::string target = na + "x" + nb;
            bool ok = true;
            std::string detail;
            for (const auto& k : {RelationSpec::equality(), RelationSpec::strongly_associated(),
                                  RelationSpec::associated()}) {
                auto rep = product_comparison(A, B, k, bud);
                if (!(rep.flags.is_strong && rep.flags.is_epi && rep.condition1 && rep.flags.is_iso)) {
                    ok = false;
                    detail = "kind " + k.name();
                }
            }
            {
                auto rep = product_comparison(A, B, blend_units(), bud);
                if (!(rep.flags.is_strong && rep.flags.is_epi)) {
                    ok = false;
                    detail = "blend-units not a strong epi";
                }
                if (rep.condition1 && !rep.flags.is_iso) {
                    ok = false;
                    detail = "blend-units condition held but map is not iso";
                }
            }
            if (!subgraph_splitting_check(A, B, RelationSpec::associated(), bud, &detail)) ok = false;
            t.row("product-preservation", target, ok, detail);
        }

    // a few triple products, associated relation
    {
        auto find = [&](const std::string& n) -> RingPtr {
            for (const auto& [name, r] : catalog)
                if (name == n) return r;
            return nullptr;
        };
        std::vector<std::vector<std::string>> triples = {{"z2", "z3", "z5"}, {"z2", "z2", "z4"}};
        for (const auto& names : triples) {
            std::vector<RingPtr> rs;
            for (const auto& n : names)
                if (auto r = find(n)) rs.push_back(r);
            if (rs.size() != 3) continue;
            auto P = build_product(rs);
            Graph lhs = zeta(*P, RelationSpec::associated());
            Graph rhs = kronecker_product(
                kronecker_product(zeta(*rs[0], RelationSpec::associated()),
                                  zeta(*rs[1], RelationSpec::associated())),
                zeta(*rs[2], RelationSpec::associated()));
            t.row("product-preservation", names[0] + "x" + names[1] + "x" + names[2],
                  are_isomorphic(lhs, rhs, bud).has_value());
        }
    }

    // equalizer comparisons over bounded hom pairs
    for (const auto& [na, A] : catalog) {
        if (A->order() > 8) continue;
        for (const auto& [nb, B] : catalog) {
            if (B->order() > bud.hom_order_cap) continue;
            std::vector<RingHom> homs;
            try {
                homs = enumerate_homs(A, B, bud);
            } catch (const Error&) {
                continue;
            }
            if (homs.empty()) continue;
            bool ok = true;
            int searched = 0, mono_failures = 0, epi_failures = 0;
            const int cap = 150;
            for (size_t x = 0; x < homs.size() && searched < cap; ++x)
                for (size_t y = 0; y < homs.size() && searched < cap; ++y) {
                    ++searched;
                    auto rep = equalizer_comparison(homs[x], homs[y], RelationSpec::associated(), bud);
                    if (!rep.flags.is_strong) ok = false;
                    if (rep.condition1 && !rep.flags.is_mono) ok = false;
                    if (rep.condition2 && !rep.flags.is_epi) ok = false;
                    if (!rep.flags.is_mono) ++mono_failures;
                    if (!rep.flags.is_epi) ++epi_failures;
                }
            t.row("equalizer", na + "->" + nb, ok,
                  "searched " + std::to_string(searched) + "/" +
                      std::to_string(homs.size() * homs.size()) + " pairs, mono failures " +
                      std::to_string(mono_failures) + ", epi failures " +
                      std::to_string(epi_failures));
        }
    }

    // inversion of product
    for (const auto& [name, A] : catalog) {
        if (A->order() == 1) continue;
        bool local = local_data(*A, bud).is_local;
        std::optional<FactorTree> tree;
        std::string detail;
        bool ok = true;
        try {
            tree = decompose_ring(A, bud);
        } catch (const Error& e) {
            ok = false;
            detail = e.what();
        }
        if (ok) {
            if (local != !tree.has_value()) {
                ok = false;
                detail = "split presence disagrees with locality";
            } else if (tree) {
                long prod = 1;
                detail = "leaf orders";
                for (const auto& leaf : tree->leaves()) {
                    prod *= leaf->order();
                    detail += " " + std::to_string(leaf->order());
                    if (local_data(*leaf, bud).is_local == false) ok = false;
                }
                if (prod != A->order()) ok = false;
            } else {
                detail = "local, no orthogonal pair";
            }
        }
        t.row("factorization", name, ok, detail);
    }

    // staircase recognizer on the staircase family itself
    {
        bool ok = true;
        std::vector<int> sizes;
        for (int k = 0; k <= 12; ++k) {
            auto rep = recognize_staircase(staircase(k));
            if (!rep.index || *rep.index != k) ok = false;
            sizes.push_back(k + 1);
        }
        bool distinct = std::adjacent_find(sizes.begin(), sizes.end()) == sizes.end();
        t.row("staircase-family", "k<=12", ok && distinct);
    }

    // local/PIR recognition over catalog and grid
    for (const auto& [name, A] : catalog) {
        bool local = local_data(*A, bud).is_local;
        bool ok = true;
        std::string detail;
        if (A->order() == 1) {
            detail = "zero ring skipped";
        } else if (local) {
            auto rep = check_pirloc(A, bud);
            ok = rep.consistent;
            detail = rep.is_local_pir
                         ? "local PIR, index " + std::to_string(rep.staircase_index.value_or(-1))
                         : "local, not PIR";
        } else {
            auto rec = recognize_staircase(zeta(*A, RelationSpec::associated()));
            ok = !rec.index.has_value();
            detail = "not local, staircase rejected";
        }
        t.row("pirloc", name, ok, detail);
    }
    for (const auto& g : load_grid(opt.catalog_dir)) {
        auto rec = recognize_staircase(zeta(*g.ring, RelationSpec::associated()));
        auto rep = check_pirloc(g.ring, bud);
        bool ok = rec.index && *rec.index == g.k && rep.consistent && rep.is_local_pir;
        t.row("pirloc-grid", g.name, ok, "expected index " + std::to_string(g.k));
    }

    // PIR products both directions over local catalog combinations
    {
        std::vector<CatalogEntry> locals;
        for (const auto& e : catalog)
            if (e.ring->order() > 1 && local_data(*e.ring, bud).is_local) locals.push_back(e);
        auto run_combo = [&](const std::vector<size_t>& combo) {
            std::vector<RingPtr> rs;
            std::string target;
            long order = 1;
            for (size_t idx : combo) {
                rs.push_back(locals[idx].ring);
                target += (target.empty() ? "" : "x") + locals[idx].name;
                order *= locals[idx].ring->order();
            }
            if (order > opt.product_order_cap) return;
            auto P = build_product(rs);
            auto rep = check_pir_product(P, bud);
            bool expect_pir = true;
            for (size_t idx : combo) expect_pir = expect_pir && is_pir(*locals[idx].ring, bud);
            bool ok = rep.consistent && rep.is_pir == expect_pir;
            t.row("pir-product", target, ok,
                  rep.is_pir ? "PIR, staircase factors found" : "not PIR, no staircase product");
        };
        for (size_t i = 0; i < locals.size(); ++i)
            for (size_t j = i; j < locals.size(); ++j) run_combo({i, j});
        for (size_t i = 0; i < locals.size(); ++i)
            for (size_t j = i; j < locals.size(); ++j)
                for (size_t k = j; k < locals.size(); ++k) run_combo({i, j, k});
    }

    // lemma suite
    {
        std::vector<RingPtr> partners;
        for (const auto& [name, A] : catalog)
            if (A->order() <= 4) partners.push_back(A);
        for (const auto& [name, A] : catalog) {
            auto rep = check_lemmas(A, partners, bud);
            std::string detail;
            for (const auto& row : rep.rows)
                if (row.status == "fail") detail += row.lemma + "(" + row.detail + ") ";
            t.row("lemmas", name, rep.all_pass, detail);
        }
    }

    t.note("summary: " + std::to_string(t.checks) + " checks, " + std::to_string(t.failures) +
           " failures");
    CensusResult res;
    res.report = t.out.str();
    res.checks = t.checks;
    res.failures = t.failures;
    return res;
}

} // namespace zdg
