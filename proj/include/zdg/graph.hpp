#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "zdg/base.hpp"

namespace zdg {

// Undirected vertex-labeled graph; loops allowed. Vertices are 0..n-1 and the
// optional payload carries a ring-element representative.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);

    int size() const { return n_; }
    bool adjacent(int i, int j) const { return adj_[size_t(i) * n_ + j] != 0; }
    void add_edge(int i, int j);
    void remove_loop(int v);

    const std::string& label(int v) const { return labels_[v]; }
    void set_label(int v, std::string l) { labels_[v] = std::move(l); }
    int payload(int v) const { return payload_[v]; }
    void set_payload(int v, int p) { payload_[v] = p; }

    bool has_loop(int v) const { return adjacent(v, v); }
    int loop_count() const;
    int degree(int v) const; // loops count once
    std::vector<int> neighbors(int v) const;
    std::vector<std::pair<int, int>> edge_list() const; // i <= j, sorted
    int edge_count() const { return int(edge_list().size()); }

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.n_ == b.n_ && a.adj_ == b.adj_;
    }

private:
    int n_ = 0;
    std::vector<char> adj_;
    std::vector<std::string> labels_;
    std::vector<int> payload_;
};

struct MapFlags {
    bool is_morphism = false;
    bool is_comorphism = false;
    bool is_strong = false;
    bool is_bijective = false;
};

struct GraphMap {
    Graph source, target;
    std::vector<int> map;
    MapFlags flags;

    int operator()(int v) const { return map[v]; }
};

MapFlags classify_map(const Graph& src, const Graph& tgt, const std::vector<int>& map);
GraphMap make_graph_map(Graph src, Graph tgt, std::vector<int> map);
GraphMap compose(const GraphMap& g, const GraphMap& f); // g after f

Graph induced_subgraph(const Graph& g, const std::vector<int>& keep);
Graph strip_loops(const Graph& g);

struct QuotientGraph {
    Graph graph;
    GraphMap projection;
    bool is_strong = false;
};

QuotientGraph quotient_graph(const Graph& g, const std::vector<std::vector<int>>& blocks);

// Vertex pairs adjacent iff both coordinates are adjacent; (i,j) -> i*|H|+j.
Graph kronecker_product(const Graph& g, const Graph& h);
Graph coproduct(const Graph& g, const Graph& h);
Graph equalizer_graph(const GraphMap& f, const GraphMap& g);

Graph terminal_graph(); // single vertex with a loop
bool is_terminal(const Graph& g);

struct Connectivity {
    bool connected = false;
    bool empty = false;
    std::optional<int> diameter; // nullopt when disconnected
};

// Computed on the loop-stripped graph; the empty graph counts as connected.
Connectivity connectivity(const Graph& g);

// Backtracking search with degree/signature pruning; deterministic; the witness
// is a bijective strong morphism. Throws Errc::budget_exceeded past the node cap.
std::optional<GraphMap> are_isomorphic(const Graph& g, const Graph& h, const Budgets& budgets = {});

std::string export_dot(const Graph& g);
std::string export_json(const Graph& g);

} // namespace zdg
