#include "cli.hpp"

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "zdg/census.hpp"
#include "zdg/specio.hpp"

namespace zdg::cli {

namespace {

using nlohmann::ordered_json;

constexpr int kExitPass = 0;
constexpr int kExitAssertion = 1;
constexpr int kExitInput = 2;
constexpr int kExitBudget = 3;

struct Options {
    std::vector<std::string> specs;
    std::string relation = "assoc";
    std::string restrict_to = "all"; // all | zero-divisors
    bool strip = false;
    std::string format = "dot"; // dot | json
    std::string output;
    std::string property;
    std::string mult_set; // comma-separated element ids
    std::string catalog_dir = "catalog";
    uint64_t seed = 20240601;
    int random_partitions = 50;
    int product_order_cap = 256;
    bool timings = false; // off by default so reports stay byte-deterministic
    Budgets budgets;
};

struct Stopwatch {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    }
};

// Single override hook: ZDG_BUDGETS="iso_nodes=...,ideal_cap=...,hom_order_cap=..."
void apply_env_budgets(Budgets& b) {
    const char* env = std::getenv("ZDG_BUDGETS");
    if (!env) return;
    std::stringstream ss(env);
    std::string item;
    while (std::getline(ss, item, ',')) {
        auto eq = item.find('=');
        if (eq == std::string::npos) continue;
        std::string key = item.substr(0, eq);
        long long value = std::atoll(item.c_str() + eq + 1);
        if (value <= 0) continue;
        if (key == "iso_nodes") b.iso_nodes = value;
        else if (key == "ideal_cap") b.ideal_cap = int(value);
        else if (key == "hom_order_cap") b.hom_order_cap = int(value);
    }
}

RelationSpec relation_from_selector(const std::string& s) {
    if (s.rfind("custom:", 0) == 0)
        return RelationSpec::custom(load_partition(s.substr(7)));
    return parse_relation_selector(s);
}

std::vector<int> parse_id_list(const std::string& s) {
    std::vector<int> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        out.push_back(std::atoi(item.c_str()));
    }
    return out;
}

void emit(const Options& opt, const std::string& text, std::ostream& out) {
    if (opt.output.empty()) {
        out << text;
        return;
    }
    std::ofstream f(opt.output, std::ios::binary);
    if (!f) throw Error(Errc::invalid_input, "cannot write " + opt.output);
    f << text;
}

ordered_json flags_json(const ComparisonFlags& f) {
    return {{"strong", f.is_strong}, {"epi", f.is_epi}, {"mono", f.is_mono}, {"iso", f.is_iso}};
}

int cmd_graph(const Options& opt, std::ostream& out) {
    if (opt.specs.size() != 1) throw Error(Errc::invalid_input, "graph: exactly one --spec required");
    auto A = build_ring(load_spec(opt.specs[0]));
    auto rel = relation_partition(*A, relation_from_selector(opt.relation));
    Graph g;
    if (opt.restrict_to == "zero-divisors") {
        g = zeta_restricted(*A, rel, classify_elements(*A).dstar);
    } else if (opt.restrict_to == "all") {
        g = zeta(*A, rel);
    } else {
        throw Error(Errc::invalid_input, "graph: --restrict must be all or zero-divisors");
    }
    if (opt.strip) g = strip_loops(g);
    if (opt.format == "dot") emit(opt, export_dot(g), out);
    else if (opt.format == "json") emit(opt, export_json(g), out);
    else throw Error(Errc::invalid_input, "graph: --format must be dot or json");
    return kExitPass;
}

int finish_check(const Options& opt, ordered_json& doc, bool pass, std::ostream& out) {
    doc["seed"] = opt.seed;
    doc["pass"] = pass;
    out << doc.dump(2) << "\n";
    return pass ? kExitPass : kExitAssertion;
}

ordered_json timings_json(const Options& opt, const Stopwatch& watch) {
    ordered_json t = ordered_json::object();
    if (opt.timings) t["seconds"] = watch.seconds();
    return t;
}

int cmd_check(const Options& opt, std::ostream& out) {
    if (opt.specs.empty()) throw Error(Errc::invalid_input, "check: at least one --spec required");
    auto A = build_ring(load_spec(opt.specs[0]));
    RingPtr B = opt.specs.size() > 1 ? build_ring(load_spec(opt.specs[1])) : nullptr;
    RelationSpec rel = relation_from_selector(opt.relation);
    ordered_json doc;
    doc["property"] = opt.property;

    if (opt.property == "zdrel") {
        auto equiann = relation_partition(*A, RelationSpec::equiannihilated());
        auto R = relation_partition(*A, rel);
        auto res = is_zero_divisor_relation(*A, R);
        bool pass = res.is_zdr == is_finer(R, equiann);
        doc["relation"] = rel.name();
        doc["is_zero_divisor_relation"] = res.is_zdr;
        if (res.witness) doc["witness"] = *res.witness;
        int agreed = 0;
        auto rnd = random_partition_suite(*A, opt.random_partitions, opt.seed);
        for (const auto& P : rnd) {
            bool a = is_zero_divisor_relation(*A, P).is_zdr;
            bool b = is_finer(P, equiann);
            if (a == b) ++agreed;
            else pass = false;
        }
        doc["random_partitions"] = int(rnd.size());
        doc["agreements"] = agreed;
        return finish_check(opt, doc, pass, out);
    }
    if (opt.property == "connectivity") {
        auto R = relation_partition(*A, rel);
        Graph g = zeta_restricted(*A, R, classify_elements(*A).dstar);
        auto conn = connectivity(g);
        doc["relation"] = rel.name();
        doc["vertices"] = g.size();
        doc["connected"] = conn.connected;
        if (conn.diameter) doc["diameter"] = *conn.diameter;
        bool pass = conn.connected && (!conn.diameter || *conn.diameter <= 3);
        return finish_check(opt, doc, pass, out);
    }
    if (opt.property == "product") {
        if (!B) throw Error(Errc::invalid_input, "check product: two --spec required");
        Stopwatch watch;
        auto rep = product_comparison(A, B, rel, opt.budgets);
        doc["theorem"] = "binary-product-comparison";
        doc["relation"] = rel.name();
        doc["flags"] = flags_json(rep.flags);
        doc["componentwise_condition"] = rep.condition1;
        ordered_json witnesses = ordered_json::object();
        if (!rep.condition_witness.empty()) witnesses["condition"] = rep.condition_witness;
        doc["witnesses"] = witnesses;
        doc["source_vertices"] = rep.canonical_map.source.size();
        doc["target_vertices"] = rep.canonical_map.target.size();
        doc["timings"] = timings_json(opt, watch);
        bool pass = rep.flags.is_strong && rep.flags.is_epi && rep.flags.is_iso;
        return finish_check(opt, doc, pass, out);
    }
    if (opt.property == "equalizer") {
        if (!B) throw Error(Errc::invalid_input, "check equalizer: two --spec required");
        auto homs = enumerate_homs(A, B, opt.budgets);
        int searched = 0, mono_failures = 0, epi_failures = 0;
        bool pass = true;
        const int cap = 200;
        for (size_t x = 0; x < homs.size() && searched < cap; ++x)
            for (size_t y = 0; y < homs.size() && searched < cap; ++y) {
                ++searched;
                auto rep = equalizer_comparison(homs[x], homs[y], rel, opt.budgets);
                if (!rep.flags.is_strong) pass = false;
                if (rep.condition1 && !rep.flags.is_mono) pass = false;
                if (rep.condition2 && !rep.flags.is_epi) pass = false;
                if (!rep.flags.is_mono) ++mono_failures;
                if (!rep.flags.is_epi) ++epi_failures;
            }
        doc["relation"] = rel.name();
        doc["homomorphisms"] = homs.size();
        doc["pairs_searched"] = searched;
        doc["pairs_total"] = homs.size() * homs.size();
        doc["mono_failures"] = mono_failures;
        doc["epi_failures"] = epi_failures;
        return finish_check(opt, doc, pass, out);
    }
    if (opt.property == "functorial") {
        if (!B) throw Error(Errc::invalid_input, "check functorial: two --spec required");
        auto homs = enumerate_homs(A, B, opt.budgets);
        int failures = 0;
        ordered_json witnesses = ordered_json::array();
        for (const auto& h : homs) {
            auto res = check_functorial(h, rel, rel);
            if (!res.ok) {
                ++failures;
                witnesses.push_back({res.witness->first, res.witness->second});
            }
        }
        doc["relation"] = rel.name();
        doc["homomorphisms"] = homs.size();
        doc["non_functorial"] = failures;
        doc["witnesses"] = witnesses;
        return finish_check(opt, doc, failures == 0, out);
    }
    if (opt.property == "localization") {
        auto S = parse_id_list(opt.mult_set);
        if (S.empty()) throw Error(Errc::invalid_input, "check localization: --set required");
        auto rep = localization_comparison(A, S, rel, opt.budgets);
        doc["relation"] = rel.name();
        doc["flags"] = flags_json(rep.flags);
        doc["fraction_compression"] = rep.condition1;
        doc["regular_denominators"] = rep.condition2;
        bool pass = (!rep.condition1 || rep.flags.is_epi) &&
                    (!rep.condition2 || rep.canonical_map.flags.is_comorphism);
        return finish_check(opt, doc, pass, out);
    }
    if (opt.property == "cla") {
        auto rep = check_local_annihilator(*A, opt.budgets);
        doc["condition_holds"] = rep.condition_holds;
        doc["is_local"] = rep.is_local;
        if (rep.witness) doc["witness"] = {rep.witness->first, rep.witness->second};
        return finish_check(opt, doc, rep.agrees, out);
    }
    if (opt.property == "staircase") {
        auto rec = recognize_staircase(zeta(*A, RelationSpec::associated()));
        doc["loops"] = rec.loop_count;
        if (rec.index) doc["index"] = *rec.index;
        else doc["failure"] = rec.failure_reason;
        bool pass = true;
        bool local = local_data(*A, opt.budgets).is_local;
        doc["is_local"] = local;
        if (A->order() > 1 && local) {
            auto rep = check_pirloc(A, opt.budgets);
            doc["is_pir"] = rep.is_local_pir;
            if (rep.nilpotency_index) doc["nilpotency_index"] = *rep.nilpotency_index;
            pass = rep.consistent;
        } else if (A->order() > 1) {
            pass = !rec.index.has_value();
        }
        return finish_check(opt, doc, pass, out);
    }
    if (opt.property == "pir") {
        auto rep = check_pir_product(A, opt.budgets);
        doc["is_pir"] = rep.is_pir;
        if (rep.staircase_indices) doc["staircase_indices"] = *rep.staircase_indices;
        if (!rep.factor_orders.empty()) doc["factor_orders"] = rep.factor_orders;
        return finish_check(opt, doc, rep.consistent, out);
    }
    if (opt.property == "lemmas") {
        std::vector<RingPtr> partners = {build_zn(2), build_zn(3), build_zn(4)};
        auto rep = check_lemmas(A, partners, opt.budgets);
        ordered_json rows = ordered_json::array();
        for (const auto& row : rep.rows)
            rows.push_back({{"lemma", row.lemma}, {"status", row.status}, {"detail", row.detail}});
        doc["rows"] = rows;
        return finish_check(opt, doc, rep.all_pass, out);
    }
    throw Error(Errc::invalid_input, "check: unknown property " + opt.property);
}

int cmd_factor(const Options& opt, std::ostream& out, std::ostream& err) {
    if (opt.specs.size() != 1) throw Error(Errc::invalid_input, "factor: exactly one --spec required");
    if (opt.relation != "assoc")
        throw Error(Errc::invalid_input, "factor: only --relation assoc is supported");
    auto A = build_ring(load_spec(opt.specs[0]));
    auto tree = decompose_ring(A, opt.budgets);
    if (!tree) {
        err << "factor: no orthogonal pair of nonzero zero-divisors exists; the ring is local "
               "(every pair of nonzero zero-divisors has a common nonzero annihilator)\n";
        return kExitAssertion;
    }
    ordered_json doc;
    doc["procedure"] = "inversion-of-product";
    doc["seed"] = opt.seed;
    doc["order"] = A->order();
    std::function<ordered_json(const FactorTree&)> render = [&](const FactorTree& node) {
        ordered_json j;
        j["order"] = node.ring->order();
        if (node.split) {
            j["a1"] = node.split->a1;
            j["a2"] = node.split->a2;
            j["ann1"] = node.split->ann1.members;
            j["ann2"] = node.split->ann2.members;
            j["verified"] = {{"ring_isomorphism", is_bijective(node.split->iso)},
                             {"side_graphs", true},
                             {"psi_strong", node.split->psi_strong},
                             {"psi_injective", node.split->psi_injective},
                             {"psi_surjective", node.split->psi_surjective}};
            j["children"] = ordered_json::array();
            for (const auto& c : node.children) j["children"].push_back(render(c));
        }
        return j;
    };
    doc["tree"] = render(*tree);
    ordered_json factors = ordered_json::array();
    ordered_json factor_specs = ordered_json::array();
    for (const auto& leaf : tree->leaves()) {
        factors.push_back(leaf->order());
        factor_specs.push_back(ordered_json::parse(spec_to_json(leaf->origin())));
    }
    doc["factor_orders"] = factors;
    doc["factor_specs"] = factor_specs;
    out << doc.dump(2) << "\n";
    return kExitPass;
}

int cmd_census(const Options& opt, std::ostream& out) {
    CensusOptions copt;
    copt.catalog_dir = opt.catalog_dir;
    copt.seed = opt.seed;
    copt.product_order_cap = opt.product_order_cap;
    copt.budgets = opt.budgets;
    auto res = run_census(copt);
    emit(opt, res.report, out);
    return res.failures == 0 ? kExitPass : kExitAssertion;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options opt;
    apply_env_budgets(opt.budgets);

    CLI::App app{"finite commutative rings and their zero-divisor graphs"};
    app.require_subcommand(1);

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--seed", opt.seed, "seed recorded in reports");
        sub->add_option("--budget-iso-nodes", opt.budgets.iso_nodes, "isomorphism node budget");
        sub->add_option("--budget-ideal-cap", opt.budgets.ideal_cap, "ideal enumeration cap");
        sub->add_option("--budget-hom-order-cap", opt.budgets.hom_order_cap,
                        "order cap for hom searches");
    };

    CLI::App* graph = app.add_subcommand("graph", "emit a zero-divisor graph");
    graph->add_option("--spec", opt.specs, "ring spec file")->required();
    graph->add_option("--relation", opt.relation, "eq|sassoc|assoc|equiann|blend-nilp|blend-units|custom:<path>");
    graph->add_option("--restrict", opt.restrict_to, "all|zero-divisors");
    graph->add_flag("--strip-loops", opt.strip, "remove loops");
    graph->add_option("--format", opt.format, "dot|json");
    graph->add_option("--output", opt.output, "output path (stdout when absent)");
    add_common(graph);

    CLI::App* check = app.add_subcommand("check", "run a verified property");
    check->add_option("--property", opt.property,
                      "zdrel|connectivity|product|equalizer|functorial|localization|cla|staircase|pir|lemmas")
        ->required();
    check->add_option("--spec", opt.specs, "ring spec file(s)")->required();
    check->add_option("--relation", opt.relation, "relation selector");
    check->add_option("--set", opt.mult_set, "multiplicative set ids, comma separated");
    check->add_option("--random", opt.random_partitions, "random partitions for zdrel");
    add_common(check);

    CLI::App* factor = app.add_subcommand("factor", "invert a product decomposition");
    factor->add_option("--spec", opt.specs, "ring spec file")->required();
    factor->add_option("--relation", opt.relation, "must be assoc");
    add_common(factor);

    CLI::App* census = app.add_subcommand("census", "run the full invariant suite");
    census->add_option("--catalog", opt.catalog_dir, "catalog directory");
    census->add_option("--max-product-order", opt.product_order_cap, "pairwise product cap");
    census->add_option("--output", opt.output, "output path (stdout when absent)");
    add_common(census);

    std::vector<std::string> argv(args);
    try {
        std::vector<const char*> cargv;
        cargv.push_back("zdg");
        for (const auto& a : argv) cargv.push_back(a.c_str());
        app.parse(int(cargv.size()), cargv.data());
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kExitPass : kExitInput;
    }

    try {
        if (graph->parsed()) return cmd_graph(opt, out);
        if (check->parsed()) return cmd_check(opt, out);
        if (factor->parsed()) return cmd_factor(opt, out, err);
        if (census->parsed()) return cmd_census(opt, out);
        err << "no subcommand\n";
        return kExitInput;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        switch (e.code()) {
        case Errc::budget_exceeded: return kExitBudget;
        case Errc::theorem: return kExitAssertion;
        default: return kExitInput;
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitInput;
    }
}

} // namespace zdg::cli
