#include "hamcycle/oracle.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace hamcycle::oracle {

namespace {

struct Enumerator {
    const Graph& g;
    const std::function<bool(std::span<const int>)>& fn;
    std::vector<int> path;
    std::vector<char> used;
    bool stopped = false;

    Enumerator(const Graph& graph, const std::function<bool(std::span<const int>)>& f)
        : g(graph), fn(f) {
        const size_t v = static_cast<size_t>(g.vertex_count());
        path.reserve(v);
        used.assign(v, 0);
    }

    void step() {
        if (stopped) return;
        const int v = g.vertex_count();
        const int head = path.back();
        if (static_cast<int>(path.size()) == v) {
            if (g.has_alive_edge(head, 0) && path[1] < path.back()) {
                if (!fn(path)) stopped = true;
            }
            return;
        }
        for (int ei : g.incident(head)) {
            if (!g.edge(ei).alive) continue;
            const int w = g.other_endpoint(ei, head);
            if (used[static_cast<size_t>(w)]) continue;
            used[static_cast<size_t>(w)] = 1;
            path.push_back(w);
            step();
            path.pop_back();
            used[static_cast<size_t>(w)] = 0;
            if (stopped) return;
        }
    }
};

}  // namespace

void for_each_hamiltonian_cycle(const Graph& g,
                                const std::function<bool(std::span<const int>)>& fn) {
    if (g.vertex_count() > kMaxBruteforceVertices)
        throw std::invalid_argument("brute force refused beyond v = " +
                                    std::to_string(kMaxBruteforceVertices));
    if (g.vertex_count() < 3) return;
    Enumerator e(g, fn);
    e.used[0] = 1;
    e.path.push_back(0);
    e.step();
}

bool is_hamiltonian_bruteforce(const Graph& g) {
    bool found = false;
    for_each_hamiltonian_cycle(g, [&found](std::span<const int>) {
        found = true;
        return false;
    });
    return found;
}

long long count_hamiltonian_cycles(const Graph& g) {
    long long n = 0;
    for_each_hamiltonian_cycle(g, [&n](std::span<const int>) {
        ++n;
        return true;
    });
    return n;
}

CycleSet all_hamiltonian_cycles(const Graph& g) {
    CycleSet cycles;
    for_each_hamiltonian_cycle(g, [&cycles](std::span<const int> c) {
        cycles.emplace_back(c.begin(), c.end());
        return true;
    });
    return cycles;
}

bool cycle_uses_edge(std::span<const int> cycle, EdgeId e) {
    const size_t n = cycle.size();
    for (size_t i = 0; i < n; ++i) {
        const int a = cycle[i];
        const int b = cycle[(i + 1) % n];
        if ((a == e.a && b == e.b) || (a == e.b && b == e.a)) return true;
    }
    return false;
}

long long count_cycles_containing(const Graph& g, std::span<const EdgeId> must_use,
                                  std::optional<EdgeId> probe) {
    long long n = 0;
    for_each_hamiltonian_cycle(g, [&](std::span<const int> c) {
        for (const EdgeId& e : must_use)
            if (!cycle_uses_edge(c, e)) return true;
        if (probe && !cycle_uses_edge(c, *probe)) return true;
        ++n;
        return true;
    });
    return n;
}

namespace {

int component_count(const Graph& g, int skipped) {
    const int v = g.vertex_count();
    std::vector<char> seen(static_cast<size_t>(v), 0);
    std::vector<int> stack;
    int components = 0;
    for (int s = 0; s < v; ++s) {
        if (s == skipped || seen[static_cast<size_t>(s)]) continue;
        ++components;
        seen[static_cast<size_t>(s)] = 1;
        stack.assign(1, s);
        while (!stack.empty()) {
            const int u = stack.back();
            stack.pop_back();
            for (int ei : g.incident(u)) {
                if (!g.edge(ei).alive) continue;
                const int w = g.other_endpoint(ei, u);
                if (w == skipped || seen[static_cast<size_t>(w)]) continue;
                seen[static_cast<size_t>(w)] = 1;
                stack.push_back(w);
            }
        }
    }
    return components;
}

}  // namespace

std::vector<int> articulation_points_bruteforce(const Graph& g) {
    if (g.vertex_count() > 1000)
        throw std::invalid_argument("deletion oracle refused beyond v = 1000");
    const int base = component_count(g, -1);
    std::vector<int> points;
    for (int x = 0; x < g.vertex_count(); ++x)
        if (component_count(g, x) > base) points.push_back(x);
    return points;
}

}  // namespace hamcycle::oracle
