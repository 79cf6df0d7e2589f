#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace hamcycle {

// Canonical unordered vertex pair: a < b.
struct EdgeId {
    int a = -1;
    int b = -1;
    friend bool operator==(const EdgeId&, const EdgeId&) = default;
    friend bool operator<(const EdgeId& x, const EdgeId& y) {
        return x.a != y.a ? x.a < y.a : x.b < y.b;
    }
};

// Normalizes (x, y) into canonical order. Throws on self-loops or negative ids.
EdgeId edge_id(int x, int y);

/// Mutable undirected simple graph.
///
/// Edges are stored once under a canonical id; both adjacency directions refer
/// to the same record, so the alive/required flags cannot diverge. Removal and
/// restoration flip the alive flag; the adjacency lists themselves are fixed at
/// construction in ascending neighbor order, which makes the live neighbor
/// order canonical and restoration order-exact.
class Graph {
public:
    struct EdgeRec {
        int a;
        int b;
        bool alive;
        bool required;
    };

    Graph() = default;
    Graph(int vertex_count, std::span<const std::pair<int, int>> edges);
    Graph(int vertex_count, std::initializer_list<std::pair<int, int>> edges);

    int vertex_count() const noexcept { return v_; }
    int alive_edge_count() const noexcept { return alive_edges_; }
    int original_edge_count() const noexcept { return static_cast<int>(edges_.size()); }

    // Live-edge degree. Kept incrementally; equals the number of alive
    // incident edges at all times.
    int degree(int x) const { return degree_[x]; }
    int required_degree(int x) const { return required_degree_[x]; }

    // 2e/v over alive edges.
    double mean_degree() const;

    // Index of the original edge (x, y), or -1 when the pair was never an edge.
    int edge_index(int x, int y) const noexcept;
    bool has_original_edge(int x, int y) const noexcept { return edge_index(x, y) >= 0; }
    bool has_alive_edge(int x, int y) const noexcept;

    const EdgeRec& edge(int index) const { return edges_[index]; }
    EdgeId id_of(int index) const { return {edges_[index].a, edges_[index].b}; }

    // Incident edge indices of x, ascending by neighbor id (alive and dead).
    const std::vector<int>& incident(int x) const { return adj_[x]; }
    int other_endpoint(int edge_index, int x) const {
        const EdgeRec& e = edges_[edge_index];
        return e.a == x ? e.b : e.a;
    }

    void remove_edge(EdgeId e);
    void restore_edge(EdgeId e);
    void remove_edge_at(int edge_index);
    void restore_edge_at(int edge_index);
    // required implies alive; marking a dead edge throws.
    void set_required_at(int edge_index, bool required);

    uint64_t fingerprint() const;
    friend bool operator==(const Graph&, const Graph&);

private:
    int v_ = 0;
    int alive_edges_ = 0;
    std::vector<EdgeRec> edges_;
    std::vector<std::vector<int>> adj_;
    std::vector<int> degree_;
    std::vector<int> required_degree_;
};

// Uniform sample of exactly e edges out of the v(v-1)/2 possible pairs,
// deterministic for a fixed seed.
Graph random_graph(int v, long long e, uint64_t seed);

long long max_edge_count(int v);

}  // namespace hamcycle
