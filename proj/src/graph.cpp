#include "hamcycle/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "hamcycle/rng.hpp"

namespace hamcycle {

namespace {

std::string pair_text(int a, int b) {
    return "(" + std::to_string(a) + "," + std::to_string(b) + ")";
}

}  // namespace

EdgeId edge_id(int x, int y) {
    if (x == y) throw std::invalid_argument("self-loop " + pair_text(x, y));
    if (x < 0 || y < 0) throw std::invalid_argument("negative vertex in edge " + pair_text(x, y));
    return x < y ? EdgeId{x, y} : EdgeId{y, x};
}

Graph::Graph(int vertex_count, std::span<const std::pair<int, int>> edges) {
    if (vertex_count < 1) throw std::invalid_argument("vertex count must be at least 1");
    v_ = vertex_count;

    std::vector<EdgeId> ids;
    ids.reserve(edges.size());
    for (const auto& [x, y] : edges) {
        if (x < 0 || x >= v_ || y < 0 || y >= v_)
            throw std::invalid_argument("endpoint out of range in edge " + pair_text(x, y));
        if (x == y) throw std::invalid_argument("self-loop " + pair_text(x, y));
        ids.push_back(edge_id(x, y));
    }
    std::sort(ids.begin(), ids.end());
    for (size_t i = 1; i < ids.size(); ++i)
        if (ids[i] == ids[i - 1])
            throw std::invalid_argument("duplicate edge " + pair_text(ids[i].a, ids[i].b));

    edges_.reserve(ids.size());
    for (const EdgeId& id : ids) edges_.push_back({id.a, id.b, true, false});
    alive_edges_ = static_cast<int>(edges_.size());

    adj_.assign(v_, {});
    for (int i = 0; i < static_cast<int>(edges_.size()); ++i) {
        adj_[edges_[i].a].push_back(i);
        adj_[edges_[i].b].push_back(i);
    }
    for (int x = 0; x < v_; ++x) {
        std::sort(adj_[x].begin(), adj_[x].end(),
                  [&](int i, int j) { return other_endpoint(i, x) < other_endpoint(j, x); });
    }
    degree_.assign(v_, 0);
    for (int x = 0; x < v_; ++x) degree_[x] = static_cast<int>(adj_[x].size());
    required_degree_.assign(v_, 0);
}

Graph::Graph(int vertex_count, std::initializer_list<std::pair<int, int>> edges)
    : Graph(vertex_count, std::span<const std::pair<int, int>>(edges.begin(), edges.size())) {}

double Graph::mean_degree() const {
    return 2.0 * alive_edges_ / v_;
}

int Graph::edge_index(int x, int y) const noexcept {
    if (x < 0 || y < 0 || x >= v_ || y >= v_ || x == y) return -1;
    const auto& inc = adj_[x];
    auto it = std::lower_bound(inc.begin(), inc.end(), y,
                               [&](int ei, int nb) { return other_endpoint(ei, x) < nb; });
    if (it == inc.end() || other_endpoint(*it, x) != y) return -1;
    return *it;
}

bool Graph::has_alive_edge(int x, int y) const noexcept {
    const int i = edge_index(x, y);
    return i >= 0 && edges_[i].alive;
}

void Graph::remove_edge(EdgeId e) {
    const int i = edge_index(e.a, e.b);
    if (i < 0) throw std::invalid_argument("unknown edge " + pair_text(e.a, e.b));
    remove_edge_at(i);
}

void Graph::restore_edge(EdgeId e) {
    const int i = edge_index(e.a, e.b);
    if (i < 0)
        throw std::invalid_argument("edge " + pair_text(e.a, e.b) + " was never in the graph");
    restore_edge_at(i);
}

void Graph::remove_edge_at(int edge_index) {
    EdgeRec& e = edges_[edge_index];
    if (!e.alive) throw std::logic_error("removing dead edge " + pair_text(e.a, e.b));
    if (e.required) throw std::logic_error("removing required edge " + pair_text(e.a, e.b));
    e.alive = false;
    --degree_[e.a];
    --degree_[e.b];
    --alive_edges_;
}

void Graph::restore_edge_at(int edge_index) {
    EdgeRec& e = edges_[edge_index];
    if (e.alive) throw std::logic_error("restoring alive edge " + pair_text(e.a, e.b));
    e.alive = true;
    ++degree_[e.a];
    ++degree_[e.b];
    ++alive_edges_;
}

void Graph::set_required_at(int edge_index, bool required) {
    EdgeRec& e = edges_[edge_index];
    if (required && !e.alive)
        throw std::logic_error("marking dead edge " + pair_text(e.a, e.b) + " required");
    if (e.required == required) return;
    e.required = required;
    const int delta = required ? 1 : -1;
    required_degree_[e.a] += delta;
    required_degree_[e.b] += delta;
}

uint64_t Graph::fingerprint() const {
    uint64_t h = 0xCBF29CE484222325ull;
    auto fold = [&h](uint64_t x) {
        h ^= x;
        h *= 0x100000001B3ull;
    };
    fold(static_cast<uint64_t>(v_));
    for (const EdgeRec& e : edges_) {
        fold(static_cast<uint64_t>(e.a) << 32 | static_cast<uint32_t>(e.b));
        fold(static_cast<uint64_t>(e.alive) << 1 | static_cast<uint64_t>(e.required));
    }
    return h;
}

bool operator==(const Graph& lhs, const Graph& rhs) {
    if (lhs.v_ != rhs.v_ || lhs.edges_.size() != rhs.edges_.size()) return false;
    for (size_t i = 0; i < lhs.edges_.size(); ++i) {
        const auto& a = lhs.edges_[i];
        const auto& b = rhs.edges_[i];
        if (a.a != b.a || a.b != b.b || a.alive != b.alive || a.required != b.required)
            return false;
    }
    return lhs.degree_ == rhs.degree_ && lhs.required_degree_ == rhs.required_degree_;
}

long long max_edge_count(int v) {
    return static_cast<long long>(v) * (v - 1) / 2;
}

Graph random_graph(int v, long long e, uint64_t seed) {
    if (v < 1) throw std::invalid_argument("vertex count must be at least 1");
    const long long max_e = max_edge_count(v);
    if (e < 0 || e > max_e)
        throw std::invalid_argument("edge count " + std::to_string(e) + " out of range [0, " +
                                    std::to_string(max_e) + "]");

    std::vector<std::pair<int, int>> pairs;
    pairs.reserve(static_cast<size_t>(max_e));
    for (int a = 0; a < v; ++a)
        for (int b = a + 1; b < v; ++b) pairs.emplace_back(a, b);

    // Partial Fisher-Yates: the first e positions are a uniform ordered sample
    // without replacement, hence a uniform e-subset.
    SplitMix64 rng(seed);
    for (long long k = 0; k < e; ++k) {
        const uint64_t j = k + rng.below(static_cast<uint64_t>(max_e - k));
        std::swap(pairs[static_cast<size_t>(k)], pairs[static_cast<size_t>(j)]);
    }
    pairs.resize(static_cast<size_t>(e));
    return Graph(v, pairs);
}

}  // namespace hamcycle
