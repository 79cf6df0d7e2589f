#pragma once

#include <optional>
#include <span>
#include <vector>

#include "hamcycle/graph.hpp"

namespace hamcycle {

enum class NonHamReason { degree, premature_closure, disconnected, one_connected };

// Checks return "surely non-Hamiltonian" or "undecided", never "surely
// Hamiltonian". An undecided verdict carries no reason.
struct CheckVerdict {
    std::optional<NonHamReason> reason;
    bool decided() const { return reason.has_value(); }
    static CheckVerdict undecided() { return {}; }
    static CheckVerdict surely_non_hamiltonian(NonHamReason r) { return {r}; }
};

/// The residual problem a partial path leaves behind.
///
/// Interior path vertices are consumed: both their cycle edges are fixed, so
/// structural checks run on the reduced graph of unvisited vertices plus the
/// two path endpoints. The endpoints are implicitly joined through the
/// consumed path; the one-connectedness check models that as a virtual edge
/// between them (without it, a residual that is a bare path would be flagged
/// even though it completes the cycle).
class ResidualView {
public:
    static ResidualView whole_graph(const Graph& g);
    static ResidualView around_path(const Graph& g, std::span<const int> path);

    bool active(int x) const { return active_[static_cast<size_t>(x)] != 0; }
    int active_count() const { return active_count_; }
    // True when no vertex is consumed (empty or one-vertex path).
    bool whole() const { return whole_; }
    int endpoint_a() const { return end_a_; }
    int endpoint_b() const { return end_b_; }
    bool has_virtual_edge() const { return end_a_ >= 0; }

private:
    std::vector<char> active_;
    int active_count_ = 0;
    bool whole_ = true;
    int end_a_ = -1;
    int end_b_ = -1;
};

// Decided iff some vertex cannot carry two cycle edges: any live degree <= 1
// in the residual (path endpoints get credit for the virtual edge), or the
// graph has fewer than three vertices.
CheckVerdict degree_check(const Graph& g);
CheckVerdict degree_check(const Graph& g, const ResidualView& view);

// Decided iff the required edges contain a closed loop shorter than v.
// Runs in time linear in the required edges.
CheckVerdict premature_closure_check(const Graph& g);

// Decided iff a list-growing sweep reaches fewer vertices than the residual
// holds.
CheckVerdict disconnectedness_check(const Graph& g);
CheckVerdict disconnectedness_check(const Graph& g, const ResidualView& view);

// Decided iff an articulation point exists (low-link depth-first search).
CheckVerdict one_connectedness_check(const Graph& g);
CheckVerdict one_connectedness_check(const Graph& g, const ResidualView& view);

}  // namespace hamcycle
