#pragma once

#include <span>
#include <vector>

#include "hamcycle/graph.hpp"

namespace hamcycle {

enum class PruneRoutine { neighbour, path, solution };
enum class MarkOrigin { degree_two, path_edge };

// Observer for search instrumentation. Hooks fire just before the mutation is
// applied, so the graph argument shows the pre-mutation state.
struct SearchTrace {
    virtual ~SearchTrace() = default;
    virtual void on_remove(const Graph&, EdgeId, PruneRoutine, std::span<const int>) {}
    virtual void on_mark(const Graph&, EdgeId, MarkOrigin, std::span<const int>) {}
};

/// Per-recursion log of edge removals and required marks.
///
/// Frames nest with recursion depth; popping a frame replays its entries in
/// reverse and restores the graph exactly (alive flags, required marks,
/// degrees -- the adjacency order is fixed at construction).
class UndoJournal {
public:
    void push_frame() { frames_.push_back(entries_.size()); }
    int frame_count() const { return static_cast<int>(frames_.size()); }
    size_t entry_count() const { return entries_.size(); }

    void pop_frame(Graph& g);
    void pop_all(Graph& g);

    // Journaled mutations.
    void remove_edge(Graph& g, int edge_index);
    // No-op (and no journal entry) when the edge is already required.
    bool mark_required(Graph& g, int edge_index);

private:
    enum class Action : uint8_t { removed, marked };
    struct Entry {
        Action action;
        int edge;
    };
    std::vector<Entry> entries_;
    std::vector<size_t> frames_;
};

struct PruneReport {
    int edges_removed = 0;
    int edges_required_added = 0;
    // Pruning exposed a surely-dead state (a vertex dropped below degree two,
    // or three required edges met at one vertex); the caller may backtrack
    // without recursing.
    bool contradiction = false;

    void absorb(const PruneReport& other) {
        edges_removed += other.edges_removed;
        edges_required_added += other.edges_required_added;
        contradiction = contradiction || other.contradiction;
    }
    bool changed() const { return edges_removed > 0 || edges_required_added > 0; }
};

struct PruneToggles {
    bool neighbour = false;
    bool path = false;
};

// Marks every alive edge incident to a live-degree-2 vertex as required.
PruneReport derive_required(Graph& g, UndoJournal& journal, SearchTrace* trace = nullptr,
                            std::span<const int> path = {});

// At every vertex with two required edges, removes all other alive edges.
// Three or more required edges at one vertex is a contradiction.
PruneReport neighbour_prune(Graph& g, UndoJournal& journal, SearchTrace* trace = nullptr,
                            std::span<const int> path = {});

// Removes the alive edge joining the endpoints of a maximal required chain
// when the chain spans fewer than v vertices (closing it early would make a
// short loop).
PruneReport path_prune(Graph& g, UndoJournal& journal, SearchTrace* trace = nullptr,
                       std::span<const int> path = {});

// Removes all edges at the second-to-last path vertex except its two path
// edges. No-op until the path has at least two edges; below that the
// second-to-last vertex is the start, whose closing edge is not yet fixed.
PruneReport solution_prune(Graph& g, std::span<const int> path, UndoJournal& journal,
                           SearchTrace* trace = nullptr);

// Alternates derive_required with the enabled routines until an iteration
// changes nothing; exits early on contradiction.
PruneReport prune_to_fixpoint(Graph& g, PruneToggles which, UndoJournal& journal,
                              SearchTrace* trace = nullptr, std::span<const int> path = {});

}  // namespace hamcycle
