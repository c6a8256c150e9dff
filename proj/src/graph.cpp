#include "zdg/graph.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <sstream>

#include "json.hpp"

namespace zdg {

Graph::Graph(int n) : n_(n), adj_(size_t(n) * n, 0), labels_(n), payload_(n, -1) {
    for (int v = 0; v < n; ++v) labels_[v] = "v" + std::to_string(v);
}

void Graph::add_edge(int i, int j) {
    if (i < 0 || j < 0 || i >= n_ || j >= n_)
        throw Error(Errc::invalid_input, "add_edge: vertex id out of range");
    adj_[size_t(i) * n_ + j] = 1;
    adj_[size_t(j) * n_ + i] = 1;
}

void Graph::remove_loop(int v) { adj_[size_t(v) * n_ + v] = 0; }

int Graph::loop_count() const {
    int c = 0;
    for (int v = 0; v < n_; ++v) c += has_loop(v);
    return c;
}

int Graph::degree(int v) const {
    int d = 0;
    for (int w = 0; w < n_; ++w) d += adjacent(v, w);
    return d;
}

std::vector<int> Graph::neighbors(int v) const {
    std::vector<int> out;
    for (int w = 0; w < n_; ++w)
        if (adjacent(v, w)) out.push_back(w);
    return out;
}

std::vector<std::pair<int, int>> Graph::edge_list() const {
    std::vector<std::pair<int, int>> out;
    for (int i = 0; i < n_; ++i)
        for (int j = i; j < n_; ++j)
            if (adjacent(i, j)) out.emplace_back(i, j);
    return out;
}

MapFlags classify_map(const Graph& src, const Graph& tgt, const std::vector<int>& map) {
    if (map.size() != size_t(src.size()))
        throw Error(Errc::invalid_input, "classify_map: map must be total on source vertices");
    for (int v : map)
        if (v < 0 || v >= tgt.size())
            throw Error(Errc::invalid_input, "classify_map: image out of range");
    MapFlags f;
    f.is_morphism = true;
    f.is_comorphism = true;
    for (int i = 0; i < src.size(); ++i)
        for (int j = i; j < src.size(); ++j) {
            bool e1 = src.adjacent(i, j);
            bool e2 = tgt.adjacent(map[i], map[j]);
            if (e1 && !e2) f.is_morphism = false;
            if (e2 && !e1) f.is_comorphism = false;
        }
    f.is_strong = f.is_morphism && f.is_comorphism;
    if (src.size() == tgt.size()) {
        std::vector<char> seen(tgt.size(), 0);
        f.is_bijective = true;
        for (int v : map) {
            if (seen[v]) { f.is_bijective = false; break; }
            seen[v] = 1;
        }
    }
    return f;
}

GraphMap make_graph_map(Graph src, Graph tgt, std::vector<int> map) {
    MapFlags f = classify_map(src, tgt, map);
    return GraphMap{std::move(src), std::move(tgt), std::move(map), f};
}

GraphMap compose(const GraphMap& g, const GraphMap& f) {
    if (!(f.target == g.source))
        throw Error(Errc::invalid_input, "compose: graph map chain mismatch");
    std::vector<int> m(f.map.size());
    for (size_t i = 0; i < m.size(); ++i) m[i] = g.map[f.map[i]];
    return make_graph_map(f.source, g.target, std::move(m));
}

Graph induced_subgraph(const Graph& g, const std::vector<int>& keep) {
    for (int v : keep)
        if (v < 0 || v >= g.size()) throw Error(Errc::invalid_input, "induced_subgraph: unknown id");
    std::vector<int> ids(keep);
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    Graph out(int(ids.size()));
    for (size_t i = 0; i < ids.size(); ++i) {
        out.set_label(int(i), g.label(ids[i]));
        out.set_payload(int(i), g.payload(ids[i]));
        for (size_t j = i; j < ids.size(); ++j)
            if (g.adjacent(ids[i], ids[j])) out.add_edge(int(i), int(j));
    }
    return out;
}

Graph strip_loops(const Graph& g) {
    Graph out = g;
    for (int v = 0; v < g.size(); ++v) out.remove_loop(v);
    return out;
}

QuotientGraph quotient_graph(const Graph& g, const std::vector<std::vector<int>>& blocks_in) {
    std::vector<int> block_of(g.size(), -1);
    for (size_t b = 0; b < blocks_in.size(); ++b) {
        if (blocks_in[b].empty()) throw Error(Errc::invalid_input, "quotient_graph: empty block");
        for (int v : blocks_in[b]) {
            if (v < 0 || v >= g.size() || block_of[v] >= 0)
                throw Error(Errc::invalid_input, "quotient_graph: blocks must partition the vertices");
            block_of[v] = int(b);
        }
    }
    for (int v = 0; v < g.size(); ++v)
        if (block_of[v] < 0)
            throw Error(Errc::invalid_input, "quotient_graph: blocks must partition the vertices");

    // canonical block order by least vertex
    std::vector<std::vector<int>> blocks(blocks_in);
    for (auto& b : blocks) std::sort(b.begin(), b.end());
    std::sort(blocks.begin(), blocks.end(), [](const auto& x, const auto& y) { return x[0] < y[0]; });
    for (size_t b = 0; b < blocks.size(); ++b)
        for (int v : blocks[b]) block_of[v] = int(b);

    Graph q(int(blocks.size()));
    for (size_t b = 0; b < blocks.size(); ++b) {
        q.set_label(int(b), g.label(blocks[b][0]));
        q.set_payload(int(b), g.payload(blocks[b][0]));
    }
    for (int i = 0; i < g.size(); ++i)
        for (int j = i; j < g.size(); ++j)
            if (g.adjacent(i, j)) q.add_edge(block_of[i], block_of[j]);

    GraphMap proj = make_graph_map(g, q, block_of);
    return QuotientGraph{std::move(q), proj, proj.flags.is_comorphism};
}

Graph kronecker_product(const Graph& g, const Graph& h) {
    Graph out(g.size() * h.size());
    for (int a = 0; a < g.size(); ++a)
        for (int b = 0; b < h.size(); ++b) {
            int v = a * h.size() + b;
            out.set_label(v, "(" + g.label(a) + "," + h.label(b) + ")");
        }
    for (int a = 0; a < g.size(); ++a)
        for (int a2 = 0; a2 < g.size(); ++a2) {
            if (!g.adjacent(a, a2)) continue;
            for (int b = 0; b < h.size(); ++b)
                for (int b2 = 0; b2 < h.size(); ++b2)
                    if (h.adjacent(b, b2)) out.add_edge(a * h.size() + b, a2 * h.size() + b2);
        }
    return out;
}

Graph coproduct(const Graph& g, const Graph& h) {
    Graph out(g.size() + h.size());
    for (int v = 0; v < g.size(); ++v) {
        out.set_label(v, g.label(v));
        out.set_payload(v, g.payload(v));
    }
    for (int v = 0; v < h.size(); ++v) {
        out.set_label(g.size() + v, h.label(v));
        out.set_payload(g.size() + v, h.payload(v));
    }
    for (auto [i, j] : g.edge_list()) out.add_edge(i, j);
    for (auto [i, j] : h.edge_list()) out.add_edge(g.size() + i, g.size() + j);
    return out;
}

Graph equalizer_graph(const GraphMap& f, const GraphMap& g) {
    if (!(f.source == g.source) || !(f.target == g.target))
        throw Error(Errc::invalid_input, "equalizer_graph: maps must share source and target");
    std::vector<int> keep;
    for (int v = 0; v < f.source.size(); ++v)
        if (f.map[v] == g.map[v]) keep.push_back(v);
    return induced_subgraph(f.source, keep);
}

Graph terminal_graph() {
    Graph t(1);
    t.add_edge(0, 0);
    t.set_label(0, "*");
    return t;
}

bool is_terminal(const Graph& g) { return g.size() == 1 && g.has_loop(0); }

Connectivity connectivity(const Graph& g_in) {
    Graph g = strip_loops(g_in);
    Connectivity c;
    if (g.size() == 0) {
        c.connected = true;
        c.empty = true;
        c.diameter = 0;
        return c;
    }
    auto bfs = [&](int s) {
        std::vector<int> dist(g.size(), -1);
        std::queue<int> q;
        dist[s] = 0;
        q.push(s);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int w = 0; w < g.size(); ++w)
                if (g.adjacent(v, w) && dist[w] < 0) {
                    dist[w] = dist[v] + 1;
                    q.push(w);
                }
        }
        return dist;
    };
    int diameter = 0;
    c.connected = true;
    for (int s = 0; s < g.size(); ++s) {
        auto dist = bfs(s);
        for (int v = 0; v < g.size(); ++v) {
            if (dist[v] < 0) {
                c.connected = false;
                return c;
            }
            diameter = std::max(diameter, dist[v]);
        }
    }
    c.diameter = diameter;
    return c;
}

namespace {

struct VertexSig {
    int degree = 0;
    bool loop = false;
    std::vector<std::pair<int, bool>> nbr; // sorted (degree, loop) of neighbors

    friend bool operator==(const VertexSig& a, const VertexSig& b) {
        return a.degree == b.degree && a.loop == b.loop && a.nbr == b.nbr;
    }
    friend bool operator<(const VertexSig& a, const VertexSig& b) {
        if (a.degree != b.degree) return a.degree < b.degree;
        if (a.loop != b.loop) return a.loop < b.loop;
        return a.nbr < b.nbr;
    }
};

std::vector<VertexSig> signatures(const Graph& g) {
    std::vector<VertexSig> sig(g.size());
    for (int v = 0; v < g.size(); ++v) {
        sig[v].degree = g.degree(v);
        sig[v].loop = g.has_loop(v);
    }
    for (int v = 0; v < g.size(); ++v) {
        for (int w : g.neighbors(v)) sig[v].nbr.emplace_back(g.degree(w), g.has_loop(w));
        std::sort(sig[v].nbr.begin(), sig[v].nbr.end());
    }
    return sig;
}

} // namespace

std::optional<GraphMap> are_isomorphic(const Graph& g, const Graph& h, const Budgets& budgets) {
    if (g.size() != h.size()) return std::nullopt;
    const int n = g.size();
    if (n == 0) return make_graph_map(g, h, {});
    if (g.loop_count() != h.loop_count() || g.edge_count() != h.edge_count()) return std::nullopt;

    auto sg = signatures(g);
    auto sh = signatures(h);
    {
        auto a = sg;
        auto b = sh;
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        if (!(a == b)) return std::nullopt;
    }

    // candidate targets per source vertex: equal signature
    std::vector<std::vector<int>> cand(n);
    for (int v = 0; v < n; ++v)
        for (int w = 0; w < n; ++w)
            if (sg[v] == sh[w]) cand[v].push_back(w);

    // assign scarce vertices first
    std::vector<int> order(n);
    for (int i = 0; i < n; ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        if (cand[a].size() != cand[b].size()) return cand[a].size() < cand[b].size();
        return a < b;
    });

    std::vector<int> map(n, -1);
    std::vector<char> used(n, 0);
    long long nodes = 0;
    auto rec = [&](auto&& self, int k) -> bool {
        if (k == n) return true;
        int v = order[k];
        for (int w : cand[v]) {
            if (used[w]) continue;
            if (++nodes > budgets.iso_nodes)
                throw Error(Errc::budget_exceeded, "are_isomorphic: node budget exceeded");
            bool ok = true;
            for (int k2 = 0; k2 < k && ok; ++k2) {
                int u = order[k2];
                ok = g.adjacent(v, u) == h.adjacent(w, map[u]);
            }
            if (!ok) continue;
            map[v] = w;
            used[w] = 1;
            if (self(self, k + 1)) return true;
            used[w] = 0;
            map[v] = -1;
        }
        return false;
    };
    if (!rec(rec, 0)) return std::nullopt;
    GraphMap gm = make_graph_map(g, h, std::move(map));
    if (!(gm.flags.is_strong && gm.flags.is_bijective))
        throw Error(Errc::internal, "are_isomorphic: produced witness is not a strong bijection");
    return gm;
}

std::string export_dot(const Graph& g) {
    std::ostringstream os;
    os << "graph zdg {\n";
    for (int v = 0; v < g.size(); ++v) {
        std::string quoted;
        for (char c : g.label(v)) {
            if (c == '"' || c == '\\') quoted += '\\';
            quoted += c;
        }
        os << "  v" << v << " [label=\"" << quoted << "\"];\n";
    }
    for (auto [i, j] : g.edge_list()) os << "  v" << i << " -- v" << j << ";\n";
    os << "}\n";
    return os.str();
}

std::string export_json(const Graph& g) {
    nlohmann::ordered_json doc;
    doc["vertices"] = nlohmann::ordered_json::array();
    for (int v = 0; v < g.size(); ++v)
        doc["vertices"].push_back({{"id", v}, {"label", g.label(v)}});
    doc["edges"] = nlohmann::ordered_json::array();
    for (auto [i, j] : g.edge_list()) doc["edges"].push_back({i, j});
    return doc.dump(2) + "\n";
}

} // namespace zdg
