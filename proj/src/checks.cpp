#include "hamcycle/checks.hpp"

#include <algorithm>

namespace hamcycle {

ResidualView ResidualView::whole_graph(const Graph& g) {
    ResidualView v;
    v.active_.assign(static_cast<size_t>(g.vertex_count()), 1);
    v.active_count_ = g.vertex_count();
    v.whole_ = true;
    return v;
}

ResidualView ResidualView::around_path(const Graph& g, std::span<const int> path) {
    if (path.size() <= 1) return whole_graph(g);
    ResidualView v;
    v.active_.assign(static_cast<size_t>(g.vertex_count()), 1);
    for (size_t i = 1; i + 1 < path.size(); ++i) v.active_[static_cast<size_t>(path[i])] = 0;
    v.active_count_ = g.vertex_count() - static_cast<int>(path.size()) + 2;
    v.whole_ = false;
    v.end_a_ = path.front();
    v.end_b_ = path.back();
    return v;
}

CheckVerdict degree_check(const Graph& g) {
    return degree_check(g, ResidualView::whole_graph(g));
}

CheckVerdict degree_check(const Graph& g, const ResidualView& view) {
    const int v = g.vertex_count();
    if (view.whole() && v <= 2)
        return CheckVerdict::surely_non_hamiltonian(NonHamReason::degree);
    if (view.whole() && !view.has_virtual_edge()) {
        for (int x = 0; x < v; ++x)
            if (g.degree(x) <= 1)
                return CheckVerdict::surely_non_hamiltonian(NonHamReason::degree);
        return CheckVerdict::undecided();
    }
    for (int x = 0; x < v; ++x) {
        if (!view.active(x)) continue;
        int d = (x == view.endpoint_a() || x == view.endpoint_b()) ? 1 : 0;
        for (int ei : g.incident(x)) {
            if (!g.edge(ei).alive) continue;
            if (view.active(g.other_endpoint(ei, x))) ++d;
        }
        if (d <= 1) return CheckVerdict::surely_non_hamiltonian(NonHamReason::degree);
    }
    return CheckVerdict::undecided();
}

CheckVerdict premature_closure_check(const Graph& g) {
    const int v = g.vertex_count();
    std::vector<char> seen(static_cast<size_t>(v), 0);
    auto required_neighbor = [&g](int x, int avoid) {
        for (int ei : g.incident(x)) {
            if (!g.edge(ei).required) continue;
            const int w = g.other_endpoint(ei, x);
            if (w != avoid) return w;
        }
        return -1;
    };
    for (int s = 0; s < v; ++s) {
        if (seen[static_cast<size_t>(s)] || g.required_degree(s) != 2) continue;
        // Walk the required component in one direction. A component whose walk
        // returns to the start through degree-2 vertices is a closed loop.
        seen[static_cast<size_t>(s)] = 1;
        int prev = s;
        int cur = required_neighbor(s, -1);
        int length = 1;
        while (cur >= 0 && cur != s && !seen[static_cast<size_t>(cur)]) {
            seen[static_cast<size_t>(cur)] = 1;
            ++length;
            if (g.required_degree(cur) != 2) break;
            const int next = required_neighbor(cur, prev);
            prev = cur;
            cur = next;
        }
        if (cur == s && length < v)
            return CheckVerdict::surely_non_hamiltonian(NonHamReason::premature_closure);
    }
    return CheckVerdict::undecided();
}

CheckVerdict disconnectedness_check(const Graph& g) {
    return disconnectedness_check(g, ResidualView::whole_graph(g));
}

CheckVerdict disconnectedness_check(const Graph& g, const ResidualView& view) {
    const int v = g.vertex_count();
    int start = -1;
    for (int x = 0; x < v; ++x)
        if (view.active(x)) {
            start = x;
            break;
        }
    if (start < 0) return CheckVerdict::undecided();

    // The list-growing sweep: append unseen neighbors while scanning the list.
    std::vector<char> seen(static_cast<size_t>(v), 0);
    std::vector<int> found;
    found.reserve(static_cast<size_t>(view.active_count()));
    seen[static_cast<size_t>(start)] = 1;
    found.push_back(start);
    for (size_t i = 0; i < found.size(); ++i) {
        const int u = found[i];
        for (int ei : g.incident(u)) {
            if (!g.edge(ei).alive) continue;
            const int w = g.other_endpoint(ei, u);
            if (!view.active(w) || seen[static_cast<size_t>(w)]) continue;
            seen[static_cast<size_t>(w)] = 1;
            found.push_back(w);
        }
    }
    if (static_cast<int>(found.size()) < view.active_count())
        return CheckVerdict::surely_non_hamiltonian(NonHamReason::disconnected);
    return CheckVerdict::undecided();
}

namespace {

// Low-link articulation-point scan over the residual. The virtual endpoint
// edge is treated as a parallel edge with its own id so the parent-edge skip
// stays correct when a real endpoint edge exists as well.
class ArticulationScan {
public:
    ArticulationScan(const Graph& g, const ResidualView& view)
        : g_(g),
          view_(view),
          pre_(static_cast<size_t>(g.vertex_count()), -1),
          low_(static_cast<size_t>(g.vertex_count()), 0) {}

    bool has_articulation_point() {
        for (int x = 0; x < g_.vertex_count(); ++x) {
            if (!view_.active(x) || pre_[static_cast<size_t>(x)] >= 0) continue;
            if (dfs(x, x, kNoEdge)) return true;
        }
        return false;
    }

private:
    static constexpr int kNoEdge = -1;
    static constexpr int kVirtualEdge = -2;

    bool dfs(int u, int root, int parent_edge) {
        pre_[static_cast<size_t>(u)] = low_[static_cast<size_t>(u)] = counter_++;
        int children = 0;
        bool cut = false;
        auto visit = [&](int w, int eid) {
            if (pre_[static_cast<size_t>(w)] < 0) {
                ++children;
                if (dfs(w, root, eid)) cut = true;
                low_[static_cast<size_t>(u)] =
                    std::min(low_[static_cast<size_t>(u)], low_[static_cast<size_t>(w)]);
                if (u != root &&
                    low_[static_cast<size_t>(w)] >= pre_[static_cast<size_t>(u)])
                    cut = true;
            } else if (eid != parent_edge) {
                low_[static_cast<size_t>(u)] =
                    std::min(low_[static_cast<size_t>(u)], pre_[static_cast<size_t>(w)]);
            }
        };
        for (int ei : g_.incident(u)) {
            if (!g_.edge(ei).alive) continue;
            const int w = g_.other_endpoint(ei, u);
            if (!view_.active(w)) continue;
            visit(w, ei);
            if (cut) return true;
        }
        if (view_.has_virtual_edge()) {
            if (u == view_.endpoint_a()) visit(view_.endpoint_b(), kVirtualEdge);
            else if (u == view_.endpoint_b()) visit(view_.endpoint_a(), kVirtualEdge);
            if (cut) return true;
        }
        if (u == root && children > 1) return true;
        return false;
    }

    const Graph& g_;
    const ResidualView& view_;
    std::vector<int> pre_;
    std::vector<int> low_;
    int counter_ = 0;
};

}  // namespace

CheckVerdict one_connectedness_check(const Graph& g) {
    return one_connectedness_check(g, ResidualView::whole_graph(g));
}

CheckVerdict one_connectedness_check(const Graph& g, const ResidualView& view) {
    ArticulationScan scan(g, view);
    if (scan.has_articulation_point())
        return CheckVerdict::surely_non_hamiltonian(NonHamReason::one_connected);
    return CheckVerdict::undecided();
}

}  // namespace hamcycle
