#include "hamcycle/pruning.hpp"

#include <stdexcept>

namespace hamcycle {

void UndoJournal::pop_frame(Graph& g) {
    if (frames_.empty()) throw std::logic_error("pop_frame on empty journal");
    const size_t start = frames_.back();
    frames_.pop_back();
    while (entries_.size() > start) {
        const Entry e = entries_.back();
        entries_.pop_back();
        if (e.action == Action::removed) g.restore_edge_at(e.edge);
        else g.set_required_at(e.edge, false);
    }
}

void UndoJournal::pop_all(Graph& g) {
    while (!frames_.empty()) pop_frame(g);
}

void UndoJournal::remove_edge(Graph& g, int edge_index) {
    g.remove_edge_at(edge_index);
    entries_.push_back({Action::removed, edge_index});
}

bool UndoJournal::mark_required(Graph& g, int edge_index) {
    if (g.edge(edge_index).required) return false;
    g.set_required_at(edge_index, true);
    entries_.push_back({Action::marked, edge_index});
    return true;
}

namespace {

// Journaled removal plus the degree contradiction test: a live degree below
// two at either endpoint leaves no way to route a cycle through it.
bool remove_and_check(Graph& g, UndoJournal& journal, int edge_index, PruneRoutine routine,
                      SearchTrace* trace, std::span<const int> path, PruneReport& report) {
    if (trace) trace->on_remove(g, g.id_of(edge_index), routine, path);
    const auto& e = g.edge(edge_index);
    const int a = e.a, b = e.b;
    journal.remove_edge(g, edge_index);
    ++report.edges_removed;
    if (g.degree(a) < 2 || g.degree(b) < 2) {
        report.contradiction = true;
        return false;
    }
    return true;
}

}  // namespace

PruneReport derive_required(Graph& g, UndoJournal& journal, SearchTrace* trace,
                            std::span<const int> path) {
    PruneReport report;
    const int v = g.vertex_count();
    for (int x = 0; x < v; ++x) {
        if (g.degree(x) < 2) {
            // No way to route two cycle edges through x.
            report.contradiction = true;
            return report;
        }
        if (g.degree(x) != 2) continue;
        for (int ei : g.incident(x)) {
            if (!g.edge(ei).alive || g.edge(ei).required) continue;
            if (trace) trace->on_mark(g, g.id_of(ei), MarkOrigin::degree_two, path);
            journal.mark_required(g, ei);
            ++report.edges_required_added;
        }
    }
    return report;
}

PruneReport neighbour_prune(Graph& g, UndoJournal& journal, SearchTrace* trace,
                            std::span<const int> path) {
    PruneReport report;
    const int v = g.vertex_count();
    for (int x = 0; x < v; ++x) {
        if (g.required_degree(x) >= 3) {
            // A cycle uses exactly two edges per vertex.
            report.contradiction = true;
            return report;
        }
        if (g.required_degree(x) != 2) continue;
        for (int ei : g.incident(x)) {
            const auto& e = g.edge(ei);
            if (!e.alive || e.required) continue;
            if (!remove_and_check(g, journal, ei, PruneRoutine::neighbour, trace, path, report))
                return report;
        }
    }
    return report;
}

PruneReport path_prune(Graph& g, UndoJournal& journal, SearchTrace* trace,
                       std::span<const int> path) {
    PruneReport report;
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
    // Chains are walked from degree-one endpoints; required loops and
    // junction vertices are left to the closure check and neighbour pruning.
    for (int x = 0; x < v; ++x) {
        if (seen[static_cast<size_t>(x)] || g.required_degree(x) != 1) continue;
        seen[static_cast<size_t>(x)] = 1;
        int prev = x;
        int cur = required_neighbor(x, -1);
        int vertices = 1;
        while (cur >= 0 && !seen[static_cast<size_t>(cur)]) {
            seen[static_cast<size_t>(cur)] = 1;
            ++vertices;
            if (g.required_degree(cur) != 2) break;
            const int next = required_neighbor(cur, prev);
            prev = cur;
            cur = next;
        }
        if (cur < 0 || g.required_degree(cur) != 1) continue;
        if (vertices >= v) continue;  // the chain spans everything; closing it wins
        const int ei = g.edge_index(x, cur);
        if (ei < 0) continue;
        const auto& e = g.edge(ei);
        if (!e.alive || e.required) continue;
        if (!remove_and_check(g, journal, ei, PruneRoutine::path, trace, path, report))
            return report;
    }
    return report;
}

PruneReport solution_prune(Graph& g, std::span<const int> path, UndoJournal& journal,
                           SearchTrace* trace) {
    PruneReport report;
    if (path.size() < 3) return report;
    const int s = path[path.size() - 2];
    for (int ei : g.incident(s)) {
        const auto& e = g.edge(ei);
        if (!e.alive || e.required) continue;  // both path edges at s are required
        if (!remove_and_check(g, journal, ei, PruneRoutine::solution, trace, path, report))
            return report;
    }
    return report;
}

PruneReport prune_to_fixpoint(Graph& g, PruneToggles which, UndoJournal& journal,
                              SearchTrace* trace, std::span<const int> path) {
    PruneReport total;
    for (;;) {
        PruneReport round = derive_required(g, journal, trace, path);
        if (which.neighbour && !round.contradiction) {
            PruneReport r = neighbour_prune(g, journal, trace, path);
            round.absorb(r);
        }
        if (which.path && !round.contradiction) {
            PruneReport r = path_prune(g, journal, trace, path);
            round.absorb(r);
        }
        total.absorb(round);
        if (round.contradiction || !round.changed()) return total;
    }
}

}  // namespace hamcycle
